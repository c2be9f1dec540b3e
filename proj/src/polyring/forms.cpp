#include "edd/polyring/forms.hpp"

#include <algorithm>
#include <utility>

namespace edd {

namespace {

std::string coefficient_factor(const GaussianRational& c) {
    const std::string text = c.to_string();
    if ((!c.re().is_zero() && !c.im().is_zero()) || !c.re().is_integer() || !c.im().is_integer()) return "(" + text + ")";
    return text;
}

// Appends "c*m" with sign handling shared by both form renderers.
void append_term(std::string& out, const GaussianRational& c, const std::string& monomial) {
    const bool negative_real = c.im().is_zero() && c.re().sign() < 0;
    const GaussianRational shown = negative_real ? -c : c;
    std::string term;
    if (monomial.empty()) {
        term = coefficient_factor(shown);
    } else if (shown.is_one()) {
        term = monomial;
    } else {
        term = coefficient_factor(shown) + "*" + monomial;
    }
    if (out.empty()) {
        out = (negative_real ? "-" : "") + term;
    } else {
        out += (negative_real ? "-" : "+") + term;
    }
}

std::string power_text(const char* var, unsigned e) {
    if (e == 0) return {};
    std::string s = var;
    if (e > 1) s += "^" + std::to_string(e);
    return s;
}

std::string join_factors(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (p.empty()) continue;
        if (!out.empty()) out += "*";
        out += p;
    }
    return out;
}

template <typename Form>
std::vector<Form> powers_of(const Form& base, unsigned max_exponent, const Form& one) {
    std::vector<Form> out{one};
    for (unsigned k = 1; k <= max_exponent; ++k) out.push_back(out.back() * base);
    return out;
}

// Evaluates F at three forms of a common type, reusing cached powers.
template <typename Form>
Form substitute(const TernaryForm& f, const Form& fx, const Form& fy, const Form& fz, const Form& one,
                const Form& zero_result) {
    const unsigned d = f.degree();
    const auto px = powers_of(fx, d, one);
    const auto py = powers_of(fy, d, one);
    const auto pz = powers_of(fz, d, one);
    Form acc = zero_result;
    for (const auto& [e, c] : f.terms()) acc = acc + (px[e[0]] * py[e[1]] * pz[e[2]]).scaled(c);
    return acc;
}

}  // namespace

// ---------------------------------------------------------------- BinaryForm

BinaryForm::BinaryForm(unsigned degree, std::vector<GaussianRational> coefficients)
    : degree_(degree), coefficients_(std::move(coefficients)) {
    if (coefficients_.size() != static_cast<std::size_t>(degree) + 1) {
        throw DomainError("binary form of degree " + std::to_string(degree) + " needs " + std::to_string(degree + 1) +
                          " coefficients");
    }
}

BinaryForm BinaryForm::zero(unsigned degree) {
    return BinaryForm(degree, std::vector<GaussianRational>(static_cast<std::size_t>(degree) + 1));
}

BinaryForm BinaryForm::constant(GaussianRational c) { return BinaryForm(0, {std::move(c)}); }

BinaryForm BinaryForm::monomial(GaussianRational c, unsigned s_exp, unsigned t_exp) {
    BinaryForm out = zero(s_exp + t_exp);
    out.coefficients_[t_exp] = std::move(c);
    return out;
}

bool BinaryForm::is_zero() const {
    return std::all_of(coefficients_.begin(), coefficients_.end(), [](const auto& c) { return c.is_zero(); });
}

UnivariatePoly BinaryForm::dehomogenize() const { return UnivariatePoly(coefficients_); }

BinaryForm BinaryForm::scaled(const GaussianRational& c) const {
    BinaryForm out = *this;
    for (auto& a : out.coefficients_) a = a * c;
    return out;
}

BinaryForm BinaryForm::pow(unsigned exponent) const {
    BinaryForm result = constant(1);
    BinaryForm base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

std::string BinaryForm::to_string() const {
    std::string out;
    for (unsigned k = 0; k <= degree_; ++k) {
        const auto& c = coefficients_[k];
        if (c.is_zero()) continue;
        append_term(out, c, join_factors({power_text("s", degree_ - k), power_text("t", k)}));
    }
    return out.empty() ? "0" : out;
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
    if (a.degree_ != b.degree_) throw DomainError("adding binary forms of different degrees");
    BinaryForm out = a;
    for (std::size_t k = 0; k < out.coefficients_.size(); ++k) out.coefficients_[k] += b.coefficients_[k];
    return out;
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + b.scaled(-1); }

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    BinaryForm out = BinaryForm::zero(a.degree_ + b.degree_);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
        if (a.coefficients_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
            if (!b.coefficients_[j].is_zero()) out.coefficients_[i + j] += a.coefficients_[i] * b.coefficients_[j];
        }
    }
    return out;
}

unsigned binary_distinct_roots(const BinaryForm& g) {
    if (g.is_zero()) throw DomainError("distinct roots of the zero binary form");
    const UnivariatePoly affine = g.dehomogenize();
    const auto finite = static_cast<unsigned>(squarefree_part(affine).degree());
    const bool at_infinity = affine.degree() < static_cast<int>(g.degree());
    return finite + (at_infinity ? 1U : 0U);
}

// --------------------------------------------------------------- TernaryForm

TernaryForm TernaryForm::monomial(GaussianRational c, unsigned a, unsigned b, unsigned c_exp) {
    TernaryForm out(a + b + c_exp);
    out.add_term({a, b, c_exp}, c);
    return out;
}

GaussianRational TernaryForm::coefficient(const Exponent3& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? GaussianRational() : it->second;
}

void TernaryForm::add_term(const Exponent3& e, const GaussianRational& c) {
    if (e[0] + e[1] + e[2] != degree_) {
        throw DomainError("term of degree " + std::to_string(e[0] + e[1] + e[2]) + " added to a form of degree " +
                          std::to_string(degree_));
    }
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TernaryForm TernaryForm::partial(int variable) const {
    if (variable < 0 || variable > 2) throw std::out_of_range("ternary variable index");
    TernaryForm out(degree_ == 0 ? 0 : degree_ - 1);
    for (const auto& [e, c] : terms_) {
        const unsigned k = e[static_cast<std::size_t>(variable)];
        if (k == 0) continue;
        Exponent3 d = e;
        d[static_cast<std::size_t>(variable)] -= 1;
        out.add_term(d, c * GaussianRational(k));
    }
    return out;
}

GaussianRational TernaryForm::evaluate(const GaussianRational& x, const GaussianRational& y,
                                       const GaussianRational& z) const {
    GaussianRational acc;
    for (const auto& [e, c] : terms_) acc += c * x.pow(e[0]) * y.pow(e[1]) * z.pow(e[2]);
    return acc;
}

TernaryForm TernaryForm::scaled(const GaussianRational& c) const {
    TernaryForm out(degree_);
    if (c.is_zero()) return out;
    for (const auto& [e, a] : terms_) out.terms_.emplace(e, a * c);
    return out;
}

TernaryForm TernaryForm::pow(unsigned exponent) const {
    TernaryForm result = monomial(1, 0, 0, 0);
    for (unsigned k = 0; k < exponent; ++k) result = result * *this;
    return result;
}

bool TernaryForm::proportional_to(const TernaryForm& other) const {
    if (degree_ != other.degree_ || is_zero() || other.is_zero()) return false;
    if (terms_.size() != other.terms_.size()) return false;
    const GaussianRational ratio = terms_.begin()->second / other.terms_.begin()->second;
    return *this == other.scaled(ratio);
}

std::string TernaryForm::to_string() const {
    std::string out;
    // Descending lexicographic order on (a, b, c): x^d first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        append_term(out, c, join_factors({power_text("x", e[0]), power_text("y", e[1]), power_text("z", e[2])}));
    }
    return out.empty() ? "0" : out;
}

TernaryForm operator+(const TernaryForm& a, const TernaryForm& b) {
    if (a.degree_ != b.degree_) throw DomainError("adding ternary forms of different degrees");
    TernaryForm out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

TernaryForm operator-(const TernaryForm& a, const TernaryForm& b) { return a + b.scaled(-1); }

TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
    TernaryForm out(a.degree_ + b.degree_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    }
    return out;
}

BinaryForm ternary_substitute_param(const TernaryForm& f, const BinaryForm& phi_x, const BinaryForm& phi_y,
                                    const BinaryForm& phi_z) {
    const unsigned e = phi_x.degree();
    if (phi_y.degree() != e || phi_z.degree() != e) {
        throw DomainError("parametrizing forms must share a degree");
    }
    return substitute(f, phi_x, phi_y, phi_z, BinaryForm::constant(1), BinaryForm::zero(f.degree() * e));
}

TernaryForm ternary_compose(const TernaryForm& f, const TernaryForm& lx, const TernaryForm& ly, const TernaryForm& lz) {
    const unsigned e = lx.degree();
    if (ly.degree() != e || lz.degree() != e) throw DomainError("substituted forms must share a degree");
    return substitute(f, lx, ly, lz, TernaryForm::monomial(1, 0, 0, 0), TernaryForm(f.degree() * e));
}

}  // namespace edd
