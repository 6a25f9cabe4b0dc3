#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "imtori/report.hpp"
#include "imtori/torus.hpp"

using namespace imtori;

namespace {

Rat parse_tol(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos)
        return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    auto e = s.find_first_of("eE");
    if (e != std::string::npos) {
        Int mant(s.substr(0, e));
        long exp = std::stol(s.substr(e + 1));
        if (exp >= 0) {
            Int d(1);
            for (long i = 0; i < exp; ++i) d *= 10;
            return Rat(mant * d);
        }
        return Rat(mant) * pow10_inv(static_cast<unsigned>(-exp));
    }
    return Rat(Int(s));
}

void emit(const TorusReport& report, const std::string& out, const std::string& format) {
    std::string payload;
    if (format == "text") {
        std::ostringstream os;
        os << "familyKind: " << report.doc["familyKind"].get<std::string>() << "\n";
        if (report.doc.contains("certificates")) {
            const auto& c = report.doc["certificates"];
            if (c.contains("galois"))
                os << "noProperSubfield: "
                   << (c["galois"]["noProperSubfield"].get<bool>() ? "yes" : "no") << "\n";
            os << "realRoots: " << c["realRoots"]["verdict"].get<std::string>() << "\n";
        }
        if (report.doc.contains("invariants")) {
            const auto& inv = report.doc["invariants"];
            os << "nsRank: " << inv["nsRank"]["rank"].get<unsigned>() << "\n"
               << "endRank: " << inv["endRank"]["rank"].get<unsigned>() << "\n";
        }
        payload = os.str();
    } else {
        payload = serialize(report) + "\n";
    }
    if (out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw CLI::ValidationError("--out", "cannot open " + out);
        f << payload;
    }
}

RationalPoly load_poly(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw CLI::ValidationError("--poly", "cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return RationalPoly::from_json(ss.str());
}

int run_selfcheck() {
    // exact controls on the Gaussian square
    RatMat J(4, std::vector<Rat>(4, Rat(0)));
    J[0][1] = -1;
    J[1][0] = 1;
    J[2][3] = -1;
    J[3][2] = 1;
    auto ns = ns_rank_exact(J);
    auto end = end_rank_exact(J);
    bool ok = ns.rank == 4 && end.rank == 8;
    std::cout << "gaussian-square controls: ns=" << ns.rank << " end=" << end.rank << " "
              << (ok ? "ok" : "FAIL") << "\n";

    AdmissibleQuadruple q = is_admissible(2, Int(3), Int(7), Int(5), Int(-16));
    RationalPoly f = mori_poly_raw(2, Int(3), Int(7), Int(5), Int(-16));
    PipelineOptions opts;
    PipelineResult r = run_pipeline("MORI", {{"g", 2}, {"l", "3"}, {"p", "7"}, {"b", "5"},
                                             {"c", "-16"}},
                                    f, opts, &q);
    bool mori_ok = r.certificatesOk && r.report.doc.contains("invariants") &&
                   r.report.doc["invariants"]["nsRank"]["rank"] == 0 &&
                   r.report.doc["invariants"]["endRank"]["rank"] == 4;
    std::cout << "mori (3,7,5,-16) pipeline: " << (mori_ok ? "ok" : "FAIL") << "\n";
    return ok && mori_ok ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact constructions of purely imaginary fields and their tori"};
    app.require_subcommand(1);

    unsigned g = 2;
    std::string l_s = "3", p_s = "7", b_s, c_s;
    unsigned count = 2;
    std::string signature, out, format = "json", polyPath, tol_s = "1e-40", height_s = "100000000";
    unsigned precision = 212;
    std::uint64_t primeBudget = 500;
    bool certifyFlag = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--precision", precision, "working precision in bits");
        sub->add_option("--height-bound", height_s, "integer-relation height bound");
        sub->add_option("--tol", tol_s, "kernel tolerance (1e-40, p/q)");
        sub->add_option("--prime-budget", primeBudget, "prime scan budget");
        sub->add_option("--signature", signature, "embedding signature bitstring");
        sub->add_option("--out", out, "output path (default stdout)");
        sub->add_option("--format", format, "json or text")
            ->check(CLI::IsMember({"json", "text"}));
    };

    CLI::App* genExp = app.add_subcommand("gen-exp", "truncated exponential family");
    genExp->add_option("--g", g, "half the degree")->required();
    genExp->add_flag("--certify", certifyFlag, "run the full certification pipeline");
    add_common(genExp);

    CLI::App* genSelmer = app.add_subcommand("gen-selmer", "Selmer trinomial family");
    genSelmer->add_option("--g", g, "half the degree")->required();
    genSelmer->add_flag("--certify", certifyFlag, "run the full certification pipeline");
    add_common(genSelmer);

    CLI::App* genMori = app.add_subcommand("gen-mori", "Mori-style trinomial from (g,l,p,b,c)");
    genMori->add_option("--g", g)->required();
    genMori->add_option("--l", l_s)->required();
    genMori->add_option("--p", p_s)->required();
    genMori->add_option("--b", b_s)->required();
    genMori->add_option("--c", c_s)->required();
    genMori->add_flag("--certify", certifyFlag, "run the full certification pipeline");
    add_common(genMori);

    CLI::App* certify = app.add_subcommand("certify", "certificate chain for a polynomial file");
    certify->add_option("--poly", polyPath, "polynomial JSON file")->required();
    add_common(certify);

    CLI::App* torus = app.add_subcommand("torus", "period matrix and complex structure");
    torus->add_option("--poly", polyPath, "polynomial JSON file")->required();
    add_common(torus);

    CLI::App* invariants = app.add_subcommand("invariants", "NS and endomorphism ranks");
    invariants->add_option("--poly", polyPath, "polynomial JSON file")->required();
    add_common(invariants);

    CLI::App* family = app.add_subcommand("family", "pairwise non-isogenous family");
    family->add_option("--g", g)->required();
    family->add_option("--count", count, "number of members")->required();
    add_common(family);

    CLI::App* selfcheck = app.add_subcommand("selfcheck", "exact controls and smoke test");
    (void)selfcheck;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        PipelineOptions opts;
        opts.precisionBits = precision;
        opts.primeBudget = primeBudget;
        opts.heightBound = Int(height_s);
        opts.tol = parse_tol(tol_s);
        opts.signature = signature;

        if (selfcheck->parsed()) return run_selfcheck();

        if (family->parsed()) {
            SearchBudgets budgets;
            budgets.primeBudget = primeBudget > 500 ? primeBudget : 10000;
            FamilyReport fr = build_family(g, count, budgets);
            std::string payload = fr.to_json() + "\n";
            if (out.empty())
                std::cout << payload;
            else
                std::ofstream(out, std::ios::binary) << payload;
            return 0;
        }

        if (genExp->parsed() || genSelmer->parsed() || genMori->parsed()) {
            opts.certify = certifyFlag;
            opts.torus = certifyFlag;
            PipelineResult r;
            if (genExp->parsed()) {
                RationalPoly f = truncated_exponent(2 * g);
                r = run_pipeline("EXP", {{"g", g}}, f, opts);
            } else if (genSelmer->parsed()) {
                SelmerPoly sp = selmer(2 * g);
                r = run_pipeline("SELMER", {{"g", g}, {"reducibleRisk", sp.reducibleRisk}},
                                 sp.poly, opts);
            } else {
                Int l(l_s), p(p_s), b(b_s), c(c_s);
                AdmissibleQuadruple q = is_admissible(g, l, p, b, c);
                RationalPoly f = mori_poly_raw(g, l, p, b, c);
                r = run_pipeline("MORI",
                                 {{"g", g}, {"l", l.str()}, {"p", p.str()}, {"b", b.str()},
                                  {"c", c.str()}},
                                 f, opts, &q);
            }
            emit(r.report, out, format);
            return certifyFlag && !r.certificatesOk ? 2 : 0;
        }

        // certify / torus / invariants on a polynomial file
        RationalPoly f = load_poly(polyPath);
        opts.certify = certify->parsed();
        opts.torus = torus->parsed() || invariants->parsed();
        PipelineResult r = run_pipeline("CUSTOM", nlohmann::json::object(), f, opts);
        emit(r.report, out, format);
        return opts.certify && !r.certificatesOk ? 2 : 0;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (e.code() == Errc::Precision || e.code() == Errc::SearchBudget) return 3;
        if (e.code() == Errc::Schema) return 1;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
