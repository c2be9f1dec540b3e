#include "edd/polyring/univariate.hpp"

#include <algorithm>
#include <utility>

namespace edd {

namespace {

// Wraps a coefficient for display inside a product.
std::string coefficient_factor(const GaussianRational& c) {
    const std::string text = c.to_string();
    if (!c.re().is_zero() && !c.im().is_zero()) return "(" + text + ")";
    if (!c.re().is_integer()) return "(" + text + ")";
    return text;
}

}  // namespace

UnivariatePoly::UnivariatePoly(std::vector<GaussianRational> coefficients)
    : coefficients_(std::move(coefficients)) {
    trim();
}

UnivariatePoly UnivariatePoly::constant(GaussianRational c) {
    return UnivariatePoly(std::vector<GaussianRational>{std::move(c)});
}

UnivariatePoly UnivariatePoly::monomial(GaussianRational c, std::size_t exponent) {
    if (c.is_zero()) return {};
    std::vector<GaussianRational> coefficients(exponent + 1);
    coefficients[exponent] = std::move(c);
    return UnivariatePoly(std::move(coefficients));
}

UnivariatePoly UnivariatePoly::from_roots(const std::vector<GaussianRational>& roots) {
    UnivariatePoly result = constant(1);
    for (const auto& r : roots) result = result * UnivariatePoly({-r, GaussianRational(1)});
    return result;
}

void UnivariatePoly::trim() {
    while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

GaussianRational UnivariatePoly::coefficient(std::size_t k) const {
    return k < coefficients_.size() ? coefficients_[k] : GaussianRational();
}

const GaussianRational& UnivariatePoly::leading() const {
    if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
    return coefficients_.back();
}

GaussianRational UnivariatePoly::evaluate(const GaussianRational& at) const {
    GaussianRational acc;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

UnivariatePoly UnivariatePoly::derivative() const {
    if (coefficients_.size() <= 1) return {};
    std::vector<GaussianRational> d(coefficients_.size() - 1);
    for (std::size_t k = 1; k < coefficients_.size(); ++k) d[k - 1] = coefficients_[k] * GaussianRational(Rational(k));
    return UnivariatePoly(std::move(d));
}

UnivariatePoly UnivariatePoly::monic() const {
    if (is_zero()) return {};
    if (leading().is_one()) return *this;
    return scaled(leading().inverse());
}

UnivariatePoly UnivariatePoly::scaled(const GaussianRational& c) const {
    if (c.is_zero()) return {};
    std::vector<GaussianRational> out;
    out.reserve(coefficients_.size());
    for (const auto& a : coefficients_) out.push_back(a * c);
    return UnivariatePoly(std::move(out));
}

UnivariatePoly UnivariatePoly::pow(unsigned exponent) const {
    UnivariatePoly result = constant(1);
    UnivariatePoly base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

std::string UnivariatePoly::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const auto& c = coefficients_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        std::string term;
        const bool negative_real = c.im().is_zero() && c.re().sign() < 0;
        const GaussianRational shown = negative_real ? -c : c;
        if (k == 0) {
            term = coefficient_factor(shown);
        } else {
            if (!shown.is_one()) term = coefficient_factor(shown) + "*";
            term += std::string(var);
            if (k > 1) term += "^" + std::to_string(k);
        }
        if (out.empty()) {
            out = (negative_real ? "-" : "") + term;
        } else {
            out += (negative_real ? "-" : "+") + term;
        }
    }
    return out;
}

UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b) {
    std::vector<GaussianRational> out(std::max(a.coefficients_.size(), b.coefficients_.size()));
    for (std::size_t k = 0; k < a.coefficients_.size(); ++k) out[k] += a.coefficients_[k];
    for (std::size_t k = 0; k < b.coefficients_.size(); ++k) out[k] += b.coefficients_[k];
    return UnivariatePoly(std::move(out));
}

UnivariatePoly operator-(const UnivariatePoly& a) {
    std::vector<GaussianRational> out;
    out.reserve(a.coefficients_.size());
    for (const auto& c : a.coefficients_) out.push_back(-c);
    return UnivariatePoly(std::move(out));
}

UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b) { return a + (-b); }

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussianRational> out(a.coefficients_.size() + b.coefficients_.size() - 1);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
        if (a.coefficients_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coefficients_.size(); ++j) out[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
    return UnivariatePoly(std::move(out));
}

PolyDivision divmod(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {UnivariatePoly(), a};

    const auto& bc = b.coefficients();
    const auto db = static_cast<std::size_t>(b.degree());
    const bool monic = b.leading().is_one();
    const GaussianRational lead_inv = monic ? GaussianRational(1) : b.leading().inverse();

    std::vector<GaussianRational> rem = a.coefficients();
    std::vector<GaussianRational> quot(rem.size() - db);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const GaussianRational& top = rem[k + db];
        if (top.is_zero()) continue;
        GaussianRational q = monic ? top : top * lead_inv;
        for (std::size_t j = 0; j < db; ++j) {
            if (!bc[j].is_zero()) rem[k + j] -= q * bc[j];
        }
        rem[k + db] = GaussianRational();
        quot[k] = std::move(q);
    }
    rem.resize(db);
    return {UnivariatePoly(std::move(quot)), UnivariatePoly(std::move(rem))};
}

UnivariatePoly operator%(const UnivariatePoly& a, const UnivariatePoly& b) { return divmod(a, b).remainder; }

UnivariatePoly exact_quotient(const UnivariatePoly& a, const UnivariatePoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw DomainError("polynomial division is not exact");
    return q;
}

UnivariatePoly upoly_gcd(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
    UnivariatePoly x = a.monic();
    UnivariatePoly y = b.monic();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        UnivariatePoly r = (x % y).monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

ExtendedGcd extended_gcd(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
    UnivariatePoly r0 = a, r1 = b;
    UnivariatePoly s0 = UnivariatePoly::constant(1), s1;
    UnivariatePoly t0, t1 = UnivariatePoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        UnivariatePoly s2 = s0 - q * s1;
        UnivariatePoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const GaussianRational inv = r0.leading().inverse();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

UnivariatePoly squarefree_part(const UnivariatePoly& g) {
    if (g.is_zero()) throw DomainError("squarefree part of the zero polynomial");
    if (g.degree() == 0) return UnivariatePoly::constant(1);
    return exact_quotient(g, upoly_gcd(g, g.derivative())).monic();
}

}  // namespace edd
