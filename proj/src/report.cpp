#include "imtori/report.hpp"

#include <chrono>

#include "imtori/torus.hpp"

namespace imtori {

namespace {

nlohmann::json jparse(const std::string& s) { return nlohmann::json::parse(s); }

std::string cert_level_name(CertLevel c) {
    return c == CertLevel::Cited ? "CITED" : "PROVED_COMPUTATIONALLY";
}

nlohmann::json witness_json(const IrreducibilityWitness& w) {
    nlohmann::json j;
    switch (w.kind) {
        case WitnessKind::ModpPrime:
            j["kind"] = "MODP_IRREDUCIBLE";
            j["prime"] = w.prime.str();
            j["certLevel"] = "PROVED_COMPUTATIONALLY";
            break;
        case WitnessKind::EisensteinDumas:
            j["kind"] = "EISENSTEIN_DUMAS";
            j["prime"] = w.prime.str();
            j["certLevel"] = "PROVED_COMPUTATIONALLY";
            break;
        case WitnessKind::Cited:
            j["kind"] = "CITED";
            j["citation"] = w.citation;
            j["certLevel"] = "CITED";
            break;
    }
    return j;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

std::string serialize(const TorusReport& r) { return r.doc.dump(); }

TorusReport parse(const std::string& bytes) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::Schema, std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("schemaVersion") ||
        !doc["schemaVersion"].is_number_integer())
        fail(Errc::Schema, "missing schemaVersion");
    int v = doc["schemaVersion"].get<int>();
    if (v != kSchemaVersion)
        fail(Errc::Schema, "unsupported schemaVersion " + std::to_string(v) + ", expected " +
                               std::to_string(kSchemaVersion));
    for (const char* key : {"familyKind", "polynomial", "discriminant"})
        if (!doc.contains(key)) fail(Errc::Schema, std::string("missing field ") + key);
    static const char* kinds[] = {"EXP", "SELMER", "MORI", "CUSTOM"};
    bool known = false;
    for (const char* k : kinds)
        if (doc["familyKind"] == k) known = true;
    if (!known) fail(Errc::Schema, "unknown familyKind");
    TorusReport r;
    r.doc = std::move(doc);
    return r;
}

PipelineResult run_pipeline(const std::string& familyKind, const nlohmann::json& parameters,
                            const RationalPoly& f, const PipelineOptions& opts,
                            const AdmissibleQuadruple* quad) {
    auto t0 = std::chrono::steady_clock::now();
    PipelineResult res;
    nlohmann::json& doc = res.report.doc;
    doc["schemaVersion"] = kSchemaVersion;
    doc["familyKind"] = familyKind;
    doc["parameters"] = parameters;
    doc["polynomial"] = jparse(f.to_json());

    Rat disc = discriminant(f);
    doc["discriminant"] = {{"num", numerator(disc).str()}, {"den", denominator(disc).str()}};

    unsigned sturm = sturm_count(f);
    bool irreducibleKnown = false;

    if (opts.certify) {
        nlohmann::json certs;

        std::optional<IrreducibilityWitness> witness =
            irreducibility_witness(f, opts.primeBudget);
        if (!witness) {
            // cited fallbacks for the two literature families
            if (familyKind == "EXP")
                witness = IrreducibilityWitness{WitnessKind::Cited, Int(0), "Schur"};
            else if (familyKind == "SELMER")
                witness = IrreducibilityWitness{WitnessKind::Cited, Int(0),
                                                "Selmer; Nart-Vila; Osada"};
        }
        if (witness) {
            certs["irreducibility"] = witness_json(*witness);
            irreducibleKnown = true;
            if (witness->kind == WitnessKind::EisensteinDumas) {
                PolygonCert pc = eisenstein_dumas(f, witness->prime);
                nlohmann::json pj = jparse(pc.to_json());
                pj["certLevel"] = "PROVED_COMPUTATIONALLY";
                certs["polygon"] = pj;
            }
            GaloisEvidence ev = collect_evidence(f, opts.primeBudget, *witness);
            GaloisCertificate gc = certify(ev, disc);
            certs["galois"] = jparse(gc.to_json());
            if (!gc.noProperSubfield && gc.certLevel != CertLevel::Cited)
                res.certificatesOk = false;
        } else {
            res.certificatesOk = false;
        }

        nlohmann::json rr;
        rr["sturmCount"] = sturm;
        rr["verdict"] = sturm == 0 ? "NO_REAL_ROOTS" : "HAS_REAL_ROOTS";
        rr["certLevel"] = "PROVED_COMPUTATIONALLY";
        if (quad && quad->b > 0) {
            RealRootExclusion rre =
                real_root_exclusion(quad->g, quad->l, quad->p, quad->b, quad->c);
            rr["closedFormMin"] = {{"lo", rre.closedFormMin.lo.str()},
                                   {"hi", rre.closedFormMin.hi.str()}};
        }
        certs["realRoots"] = rr;
        if (sturm != 0) res.certificatesOk = false;

        nlohmann::json ram = nlohmann::json::array();
        if (quad) {
            for (Int ell : {Int(2), Int(3), Int(5), Int(7), Int(11), Int(13)}) {
                if (ell == quad->l) continue;
                RamificationWitness w = ramification_witness(f, ell, quad->l);
                nlohmann::json wj = jparse(w.to_json());
                wj["certLevel"] = "PROVED_COMPUTATIONALLY";
                ram.push_back(wj);
            }
        }
        certs["ramification"] = ram;
        doc["certificates"] = certs;
        res.report.timings["certify"] = seconds_since(t0);
    }

    if (quad && !quad->valid()) res.certificatesOk = false;

    if (opts.torus && sturm == 0 && (irreducibleKnown || !opts.certify)) {
        auto t1 = std::chrono::steady_clock::now();
        unsigned g = static_cast<unsigned>(f.degree()) / 2;
        std::string sigStr =
            opts.signature.empty() ? std::string(g, '0') : opts.signature;
        EmbeddingSignature sig = EmbeddingSignature::from_string(sigStr);

        // same roots, and the power basis needs a monic minimal polynomial
        RationalPoly monic = f.scaled(1 / f.leading());
        unsigned bits = opts.precisionBits;
        for (unsigned attempt = 0;; ++attempt) {
            try {
                set_precision_bits(bits);
                PeriodMatrix pm = period_matrix(monic, sig, bits);
                ComplexStructure cs = complex_structure(pm);
                nlohmann::json torus;
                torus["signature"] = sig.to_string();
                torus["precisionBits"] = bits;
                torus["periodMatrix"] = jparse(period_matrix_to_json(pm));
                torus["JResidual"] = cs.residual.str(8);
                doc["torus"] = torus;

                BigFloat tol = to_bigfloat(opts.tol);
                InvariantReport inv;
                inv.nsRank = ns_rank(cs, opts.heightBound, tol);
                inv.endRank = end_rank(cs, opts.heightBound, tol);
                inv.companionResidual = commutation_residual(companion_matrix(monic), cs.J);
                doc["invariants"] = jparse(inv.to_json());
                break;
            } catch (const Error& e) {
                if (e.code() != Errc::Precision || attempt >= opts.maxPrecisionRetries) throw;
                bits *= 2;
            }
        }
        res.report.timings["torus"] = seconds_since(t1);
    }

    res.report.timings["total"] = seconds_since(t0);
    return res;
}

} // namespace imtori
