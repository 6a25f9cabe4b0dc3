#include "imtori/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

namespace imtori {

DyadicInterval::DyadicInterval(Rat a, Rat b) : lo(std::move(a)), hi(std::move(b)) {
    if (lo > hi) fail(Errc::Degenerate, "interval endpoints out of order");
}

int DyadicInterval::sign() const {
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    return 0;
}

DyadicInterval DyadicInterval::operator+(const DyadicInterval& o) const {
    return DyadicInterval(lo + o.lo, hi + o.hi);
}

DyadicInterval DyadicInterval::operator-(const DyadicInterval& o) const {
    return DyadicInterval(lo - o.hi, hi - o.lo);
}

DyadicInterval DyadicInterval::operator*(const DyadicInterval& o) const {
    Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return DyadicInterval(std::min(std::min(a, b), std::min(c, d)),
                          std::max(std::max(a, b), std::max(c, d)));
}

RationalPoly::RationalPoly(std::vector<Int> coeffs, Int den)
    : coeffs_(std::move(coeffs)), den_(std::move(den)) {
    if (den_ == 0) fail(Errc::Degenerate, "zero denominator");
    normalize();
}

void RationalPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : coeffs_) c = -c;
    }
    Int g = den_;
    for (const auto& c : coeffs_) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    if (g > 1) {
        den_ /= g;
        for (auto& c : coeffs_) c /= g;
    }
}

RationalPoly RationalPoly::from_rationals(const std::vector<Rat>& coeffs) {
    Int den = 1;
    for (const auto& q : coeffs) den = boost::multiprecision::lcm(den, denominator(q));
    std::vector<Int> ints;
    ints.reserve(coeffs.size());
    for (const auto& q : coeffs) ints.push_back(numerator(q) * (den / denominator(q)));
    return RationalPoly(std::move(ints), den);
}

RationalPoly RationalPoly::monomial(const Rat& c, unsigned k) {
    std::vector<Rat> v(k + 1, Rat(0));
    v[k] = c;
    return from_rationals(v);
}

Rat RationalPoly::coeff(unsigned k) const {
    if (k >= coeffs_.size()) return Rat(0);
    return Rat(coeffs_[k], den_);
}

Rat RationalPoly::leading() const {
    if (is_zero()) return Rat(0);
    return Rat(coeffs_.back(), den_);
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
    std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < coeffs_.size()) c[i] += coeffs_[i] * o.den_;
        if (i < o.coeffs_.size()) c[i] += o.coeffs_[i] * den_;
    }
    return RationalPoly(std::move(c), den_ * o.den_);
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const {
    return *this + o.scaled(Rat(-1));
}

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<Int> c(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return RationalPoly(std::move(c), den_ * o.den_);
}

RationalPoly RationalPoly::scaled(const Rat& q) const {
    if (q == 0 || is_zero()) return zero();
    std::vector<Int> c = coeffs_;
    for (auto& x : c) x *= numerator(q);
    return RationalPoly(std::move(c), den_ * denominator(q));
}

RationalPoly RationalPoly::derivative() const {
    if (degree() < 1) return zero();
    std::vector<Int> c(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * Int(i);
    return RationalPoly(std::move(c), den_);
}

Rat RationalPoly::evaluate(const Rat& x) const {
    Rat acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + Rat(coeffs_[i]);
    return acc / Rat(den_);
}

DyadicInterval RationalPoly::evaluate(const DyadicInterval& x) const {
    DyadicInterval acc;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x + DyadicInterval::point(Rat(coeffs_[i]));
    }
    Rat d(1, den_);
    return acc * DyadicInterval::point(d);
}

Complex RationalPoly::evaluate(const Complex& z) const {
    Complex acc;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * z + Complex(to_bigfloat(Int(coeffs_[i])), BigFloat(0));
    }
    BigFloat d = to_bigfloat(den_);
    return {acc.re / d, acc.im / d};
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divmod(const RationalPoly& d) const {
    if (d.is_zero()) fail(Errc::Degenerate, "division by zero polynomial");
    std::vector<Rat> rem(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) rem[i] = coeff(static_cast<unsigned>(i));
    int dd = d.degree();
    Rat dl = d.leading();
    std::vector<Rat> quot;
    if (degree() >= dd) quot.assign(degree() - dd + 1, Rat(0));
    for (int k = degree(); k >= dd; --k) {
        Rat q = rem[k] / dl;
        if (q == 0) continue;
        quot[k - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= q * d.coeff(j);
    }
    return {from_rationals(quot), from_rationals(rem)};
}

namespace {

// Scale by a positive rational to a primitive integer polynomial (sign kept).
RationalPoly primitive_part(const RationalPoly& p) {
    if (p.is_zero()) return p;
    Int content = 0;
    for (const auto& c : p.coeffs()) content = boost::multiprecision::gcd(content, c);
    std::vector<Int> c = p.coeffs();
    for (auto& x : c) x /= content;
    return RationalPoly(std::move(c), 1);
}

} // namespace

RationalPoly RationalPoly::gcd(const RationalPoly& o) const {
    RationalPoly a = *this, b = o;
    while (!b.is_zero()) {
        RationalPoly r = a.divmod(b).second;
        a = b;
        b = primitive_part(r);
    }
    if (a.is_zero()) return a;
    a = primitive_part(a);
    if (a.leading() < 0) a = a.scaled(Rat(-1));
    return a;
}

RationalPoly RationalPoly::squarefree_part() const {
    if (is_zero()) return zero();
    if (degree() == 0) return *this;
    RationalPoly g = gcd(derivative());
    if (g.degree() < 1) return *this;
    return divmod(g).first;
}

Rat RationalPoly::height() const {
    Rat h(0);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        Rat a = abs(coeff(static_cast<unsigned>(i)));
        if (a > h) h = a;
    }
    return h;
}

std::string RationalPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rat c = coeff(k);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rat a = abs(c);
        if (a != 1 || k == 0) {
            os << numerator(a);
            if (denominator(a) != 1) os << "/" << denominator(a);
            if (k > 0) os << "*";
        }
        if (k > 0) {
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::string RationalPoly::to_json() const {
    nlohmann::json j;
    j["den"] = den_.str();
    j["coeffs"] = nlohmann::json::array();
    for (const auto& c : coeffs_) j["coeffs"].push_back(c.str());
    return j.dump();
}

RationalPoly RationalPoly::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("den") || !j.contains("coeffs"))
        fail(Errc::Schema, "polynomial JSON must carry den and coeffs");
    std::vector<Int> c;
    for (const auto& s : j["coeffs"]) c.emplace_back(s.get<std::string>());
    return RationalPoly(std::move(c), Int(j["den"].get<std::string>()));
}

RationalPoly RationalPoly::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) fail(Errc::Schema, "empty polynomial text");
    RationalPoly out = zero();
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            ++i;
        }
        if (i >= s.size()) fail(Errc::Schema, "dangling sign in polynomial text");
        Rat c(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            Int num(s.substr(i, j - i));
            Int den(1);
            if (j < s.size() && s[j] == '/') {
                size_t k = ++j;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                if (k == j) fail(Errc::Schema, "malformed rational coefficient");
                den = Int(s.substr(k, j - k));
            }
            c = Rat(num, den);
            have_coeff = true;
            i = j;
            if (i < s.size() && s[i] == '*') ++i;
        }
        unsigned k = 0;
        if (i < s.size() && s[i] == 'x') {
            ++i;
            k = 1;
            if (i < s.size() && s[i] == '^') {
                size_t j = ++i;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                if (j == i) fail(Errc::Schema, "malformed exponent");
                k = std::stoul(s.substr(i, j - i));
                i = j;
            }
        } else if (!have_coeff) {
            fail(Errc::Schema, "malformed polynomial term");
        }
        out = out + monomial(sign < 0 ? -c : c, k);
    }
    return out;
}

namespace {

// Determinant by exact Gaussian elimination.
Rat rational_det(std::vector<std::vector<Rat>> m) {
    size_t n = m.size();
    Rat det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rat factor = m[r][col] / m[col][col];
            for (size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return det;
}

} // namespace

Rat resultant(const RationalPoly& f, const RationalPoly& g) {
    if (f.is_zero() && g.is_zero()) fail(Errc::Degenerate, "resultant of two zero polynomials");
    if (f.is_zero() || g.is_zero()) return Rat(0);
    int m = f.degree(), n = g.degree();
    if (m == 0 && n == 0) return Rat(1);
    if (n == 0) return rat_pow(g.leading(), m);
    if (m == 0) return rat_pow(f.leading(), n);
    size_t dim = static_cast<size_t>(m + n);
    std::vector<std::vector<Rat>> s(dim, std::vector<Rat>(dim, Rat(0)));
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j) s[row][row + j] = f.coeff(m - j);
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j) s[n + row][row + j] = g.coeff(n - j);
    return rational_det(std::move(s));
}

Rat discriminant(const RationalPoly& f) {
    int n = f.degree();
    if (n < 2) fail(Errc::DegreeTooSmall, "discriminant needs degree >= 2");
    Rat r = resultant(f, f.derivative()) / f.leading();
    return (Int(n) * (n - 1) / 2) % 2 == 1 ? -r : r;
}

unsigned sturm_count(const RationalPoly& f) {
    if (f.is_zero()) fail(Errc::Degenerate, "Sturm count of the zero polynomial");
    RationalPoly p0 = f.squarefree_part();
    if (p0.degree() < 1) return 0;
    std::vector<RationalPoly> chain{primitive_part(p0), primitive_part(p0.derivative())};
    while (chain.back().degree() >= 0) {
        const RationalPoly& a = chain[chain.size() - 2];
        const RationalPoly& b = chain.back();
        if (b.degree() == 0) break;
        RationalPoly r = a.divmod(b).second;
        if (r.is_zero()) break;
        chain.push_back(primitive_part(r.scaled(Rat(-1))));
    }
    auto variations = [&](int at_infinity_sign) {
        int count = 0, last = 0;
        for (const auto& p : chain) {
            if (p.is_zero()) continue;
            int s = p.leading() > 0 ? 1 : -1;
            if (at_infinity_sign < 0 && p.degree() % 2 == 1) s = -s;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    };
    return static_cast<unsigned>(variations(-1) - variations(+1));
}

} // namespace imtori
