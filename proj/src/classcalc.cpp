#include "edd/classcalc.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace edd {

namespace {

using Poly = std::vector<Rational>;

Poly poly_mul(const Poly& a, const Poly& b, std::size_t top) {
    Poly out(top + 1);
    for (std::size_t i = 0; i < a.size() && i <= top; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= top; ++j) out[i + j].add_product(a[i], b[j]);
    }
    return out;
}

// Coefficients of (1 + c*h)^e up to h^top, for any integer e.
Poly linear_power(const Rational& c, long e, std::size_t top) {
    Poly out(top + 1);
    Rational coeff = 1;
    for (std::size_t t = 0; t <= top; ++t) {
        out[t] = coeff;
        coeff *= Rational(e - static_cast<long>(t)) * c / Rational(static_cast<long>(t) + 1);
    }
    return out;
}

Rational sign_of(long exponent) { return exponent % 2 == 0 ? Rational(1) : Rational(-1); }

void require_dim(const ProjClass& alpha, unsigned dim_x) {
    if (dim_x > alpha.ambient_dim()) throw DomainError("dim_x exceeds the ambient dimension");
}

void require_same_ambient(const ProjClass& a, const ProjClass& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DomainError("classes live in different ambient spaces");
}

}  // namespace

std::string_view method_tag(EddMethod method) {
    switch (method) {
        case EddMethod::generic: return "generic";
        case EddMethod::segre: return "segre";
        case EddMethod::milnor: return "milnor";
        case EddMethod::csm: return "csm";
        case EddMethod::euler: return "euler";
        case EddMethod::product: return "product";
        case EddMethod::plane_curve: return "plane-curve";
        case EddMethod::rational_curve: return "rational-curve";
    }
    return "unknown";
}

EddReport make_report(EddMethod method, const Rational& total, std::map<std::string, Rational> intermediates) {
    if (!total.is_integer()) throw DomainError("ED degree evaluates to the non-integer " + total.to_string());
    EddReport report;
    report.value = total.to_integer();
    report.method = method;
    report.intermediates = std::move(intermediates);
    if (report.value.sign() < 0) {
        report.warnings.push_back("negative ED degree " + report.value.to_string() +
                                  ": the inputs do not come from an actual variety");
    }
    return report;
}

// ProjClass -------------------------------------------------------------------

ProjClass::ProjClass(unsigned ambient_dim, std::vector<Rational> degrees)
    : ambient_dim_(ambient_dim), degrees_(std::move(degrees)) {
    if (degrees_.size() > ambient_dim_ + 1U) throw DomainError("more degrees than dimensions of P^N");
    degrees_.resize(ambient_dim_ + 1U);
}

ProjClass ProjClass::fundamental(unsigned ambient_dim, unsigned dim, const Rational& degree) {
    if (dim > ambient_dim) throw DomainError("variety dimension exceeds the ambient dimension");
    ProjClass out(ambient_dim);
    out.degrees_[dim] = degree;
    return out;
}

ProjClass ProjClass::parse(std::string_view text, int ambient_dim) {
    std::vector<Rational> values;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        std::string_view piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                    : comma - start);
        while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
        while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
        values.push_back(Rational::parse(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    const unsigned n = ambient_dim < 0 ? static_cast<unsigned>(values.size() - 1) : static_cast<unsigned>(ambient_dim);
    return ProjClass(n, std::move(values));
}

Rational ProjClass::operator[](int j) const {
    if (j < 0 || j > static_cast<int>(ambient_dim_)) return Rational();
    return degrees_[static_cast<std::size_t>(j)];
}

bool ProjClass::is_zero() const {
    return std::all_of(degrees_.begin(), degrees_.end(), [](const Rational& r) { return r.is_zero(); });
}

int ProjClass::top_dimension() const {
    for (int j = static_cast<int>(ambient_dim_); j >= 0; --j) {
        if (!degrees_[static_cast<std::size_t>(j)].is_zero()) return j;
    }
    return -1;
}

Rational ProjClass::alternating_sum() const {
    Rational acc;
    for (std::size_t j = 0; j < degrees_.size(); ++j) {
        if (j % 2 == 0) acc += degrees_[j]; else acc -= degrees_[j];
    }
    return acc;
}

std::string ProjClass::to_string() const {
    std::ostringstream os;
    for (std::size_t j = 0; j < degrees_.size(); ++j) os << (j ? "," : "") << degrees_[j];
    return os.str();
}

ProjClass ProjClass::scaled(const Rational& c) const {
    ProjClass out = *this;
    for (auto& v : out.degrees_) v *= c;
    return out;
}

ProjClass operator+(const ProjClass& a, const ProjClass& b) {
    require_same_ambient(a, b);
    ProjClass out = a;
    for (std::size_t j = 0; j < out.degrees_.size(); ++j) out.degrees_[j] += b.degrees_[j];
    return out;
}

ProjClass operator-(const ProjClass& a, const ProjClass& b) {
    require_same_ambient(a, b);
    ProjClass out = a;
    for (std::size_t j = 0; j < out.degrees_.size(); ++j) out.degrees_[j] -= b.degrees_[j];
    return out;
}

// Class calculus ------------------------------------------------------------

ProjClass cap_with_poly(const ProjClass& alpha, std::span<const Rational> poly) {
    const unsigned n = alpha.ambient_dim();
    std::vector<Rational> out(n + 1U);
    for (unsigned j = 0; j <= n; ++j) {
        for (std::size_t k = 0; k < poly.size() && j + k <= n; ++k) {
            out[j].add_product(poly[k], alpha.degrees()[j + k]);
        }
    }
    return ProjClass(n, std::move(out));
}

ProjClass class_dual(const ProjClass& alpha, unsigned m) {
    require_dim(alpha, m);
    std::vector<Rational> out = alpha.degrees();
    for (unsigned j = 0; j < out.size(); ++j) {
        if ((static_cast<long>(m) - static_cast<long>(j)) % 2 != 0) out[j] = -out[j];
    }
    return ProjClass(alpha.ambient_dim(), std::move(out));
}

ProjClass class_tensor(const ProjClass& alpha, long ell, unsigned m) {
    require_dim(alpha, m);
    const unsigned n = alpha.ambient_dim();
    std::vector<Rational> out(n + 1U);
    for (unsigned j = 0; j <= n; ++j) {
        const Rational& a = alpha.degrees()[j];
        if (a.is_zero()) continue;
        const long codim = static_cast<long>(m) - static_cast<long>(j);
        const Poly factor = linear_power(Rational(ell), -codim, j);
        for (unsigned t = 0; t <= j; ++t) out[j - t].add_product(factor[t], a);
    }
    return ProjClass(n, std::move(out));
}

std::vector<Rational> chern_polynomial(const ProjClass& chern_tx, unsigned dim_x) {
    require_dim(chern_tx, dim_x);
    const Rational deg = chern_tx.degrees()[dim_x];
    if (deg.is_zero()) throw DomainError("Chern class has zero degree in dimension dim_x");
    std::vector<Rational> out(dim_x + 1U);
    for (unsigned k = 0; k <= dim_x; ++k) out[k] = chern_tx.degrees()[dim_x - k] / deg;
    return out;
}

ProjClass twisted_cotangent_chern(const ProjClass& chern_tx, unsigned dim_x, long ell) {
    require_dim(chern_tx, dim_x);
    std::vector<Rational> out(chern_tx.ambient_dim() + 1U);
    const Rational l(ell);
    for (unsigned i = 0; i <= dim_x; ++i) {
        Rational acc;
        for (unsigned k = 0; k <= i; ++k) {
            Rational term = Rational(binomial(dim_x - k, i - k)) * l.pow(static_cast<long>(i - k)) *
                            chern_tx.degrees()[dim_x - k];
            if (k % 2 == 1) term = -term;
            acc += term;
        }
        out[dim_x - i] = acc;
    }
    return ProjClass(chern_tx.ambient_dim(), std::move(out));
}

ProjClass hypersurface_chern(unsigned n, unsigned d) {
    if (n < 2 || d < 1) throw DomainError("hypersurface_chern needs n >= 2 and d >= 1");
    const unsigned dim_x = n - 2;
    const Poly series = poly_mul(linear_power(1, static_cast<long>(n), dim_x),
                                 linear_power(Rational(d), -1, dim_x), dim_x);
    std::vector<Rational> out(n);
    for (unsigned j = 0; j <= dim_x; ++j) out[j] = Rational(d) * series[dim_x - j];
    return ProjClass(n - 1, std::move(out));
}

ProjClass chern_fulton_quadric_section(const ProjClass& chern_x, unsigned dim_x) {
    require_dim(chern_x, dim_x);
    Poly factor = linear_power(2, -1, dim_x);
    factor.insert(factor.begin(), Rational());
    for (auto& c : factor) c *= 2;
    return cap_with_poly(chern_x, factor);
}

// ED-degree paths -------------------------------------------------------------

Rational gedd_value(const ProjClass& chern, unsigned dim_x) {
    require_dim(chern, dim_x);
    if (chern.top_dimension() > static_cast<int>(dim_x)) throw DomainError("Chern class has pieces above dim_x");
    Rational acc;
    for (unsigned j = 0; j <= dim_x; ++j) {
        const Rational weight = Rational(Integer(2).pow(j + 1) - 1) * sign_of(static_cast<long>(dim_x + j));
        acc.add_product(weight, chern.degrees()[j]);
    }
    return acc;
}

Integer gedd_from_chern(const ProjClass& chern, unsigned dim_x) {
    const Rational v = gedd_value(chern, dim_x);
    if (!v.is_integer()) throw DomainError("generic ED degree evaluates to the non-integer " + v.to_string());
    return v.to_integer();
}

Rational gamma_from_segre(const ProjClass& chern_tx, unsigned dim_x, const ProjClass& segre) {
    require_same_ambient(chern_tx, segre);
    if (segre.is_zero()) return Rational();
    const Rational deg = chern_tx.degrees().at(dim_x);
    if (deg.is_zero()) throw DomainError("Chern class has zero degree in dimension dim_x");
    const ProjClass twisted = twisted_cotangent_chern(chern_tx, dim_x, 2);
    Poly twisted_poly(dim_x + 1U);
    for (unsigned k = 0; k <= dim_x; ++k) twisted_poly[k] = twisted.degrees()[dim_x - k] / deg;
    const Poly cofactor = poly_mul(poly_mul(Poly{1, 2}, twisted_poly, dim_x), linear_power(1, -1, dim_x), dim_x);
    return cap_with_poly(segre, cofactor).degrees()[0];
}

EddReport edd_smooth_via_segre(const ProjClass& chern_tx, unsigned dim_x, const ProjClass& segre) {
    const Rational g = gedd_value(chern_tx, dim_x);
    const Rational gamma = gamma_from_segre(chern_tx, dim_x, segre);
    const Rational total = g - gamma;
    if (total.sign() < 0) throw DomainError("Segre-class correction exceeds the generic ED degree: " + total.to_string());
    return make_report(EddMethod::segre, total, {{"gEdd", g}, {"gamma", gamma}});
}

ProjClass milnor_from_segre(const ProjClass& chern_tx, unsigned dim_x, const ProjClass& segre, long ell) {
    require_same_ambient(chern_tx, segre);
    if (segre.is_zero()) return ProjClass(segre.ambient_dim());
    const Poly chern = chern_polynomial(chern_tx, dim_x);
    const Poly cofactor = poly_mul(chern, linear_power(Rational(ell), -1, dim_x), dim_x);
    const ProjClass transformed = class_tensor(class_dual(segre, dim_x), ell, dim_x);
    return cap_with_poly(transformed, cofactor).scaled(sign_of(dim_x));
}

EddReport edd_from_milnor(const ProjClass& chern_tx, unsigned dim_x, const ProjClass& milnor) {
    require_same_ambient(chern_tx, milnor);
    const Rational g = gedd_value(chern_tx, dim_x);
    const Rational correction = milnor.alternating_sum();
    EddReport report = make_report(EddMethod::milnor, g - correction, {{"gEdd", g}, {"milnor_sum", correction}});
    if (milnor.top_dimension() >= static_cast<int>(dim_x)) {
        report.warnings.emplace_back("Milnor class has a piece of dimension >= dim_x");
    }
    return report;
}

EddReport edd_from_csm(const ProjClass& chern_x, unsigned dim_x, const ProjClass& csm_qx) {
    require_same_ambient(chern_x, csm_qx);
    require_dim(chern_x, dim_x);
    const Rational chi_x = chern_x.alternating_sum();
    const Rational chi_q = csm_qx.alternating_sum();
    const Rational total = sign_of(dim_x) * (chi_x - chi_q);
    EddReport report = make_report(EddMethod::csm, total, {{"chern_sum", chi_x}, {"csm_sum", chi_q}});
    if (csm_qx.top_dimension() >= static_cast<int>(dim_x) && csm_qx != chern_x) {
        report.warnings.emplace_back("CSM class of Q∩X has a piece of dimension >= dim_x although X is not inside Q");
    }
    return report;
}

EddReport edd_from_euler(const EulerData& data) {
    const Integer alt = data.chi_x - data.chi_xq - data.chi_xh + data.chi_xqh;
    const Rational total = sign_of(data.dim_x) * Rational(alt);
    return make_report(EddMethod::euler, total,
                       {{"chi_x", data.chi_x}, {"chi_xq", data.chi_xq}, {"chi_xh", data.chi_xh}, {"chi_xqh", data.chi_xqh}});
}

EddReport curve_edd(unsigned d, unsigned num_qc, const Integer& chi_c) {
    const Integer total = Integer(d) + Integer(num_qc) - chi_c;
    return make_report(EddMethod::euler, total, {{"d", d}, {"num_qc", num_qc}, {"chi_c", chi_c}});
}

EddReport surface_p3_edd(unsigned d, const Integer& chi_c) {
    const Integer dd(d);
    const Integer total = dd * (dd * dd - 3 * dd + 5) - chi_c;
    EddReport report = make_report(EddMethod::euler, total, {{"d", d}, {"chi_c", chi_c}});
    if (d == 2) {
        report.warnings.emplace_back("quadric surface: formula assumes S ∩ Q is reduced");
    }
    return report;
}

// Spheres ---------------------------------------------------------------------

Integer quadric_euler_characteristic(int ambient_dim) {
    if (ambient_dim <= 0) return 0;
    return ambient_dim % 2 == 1 ? Integer(ambient_dim + 1) : Integer(ambient_dim);
}

SphereData sphere_data(unsigned n) {
    if (n < 2) throw DomainError("a sphere needs n >= 2");
    SphereData out;
    out.n = n;
    out.dim_x = n - 2;
    out.chern = hypersurface_chern(n, 2);
    std::vector<Rational> section(out.dim_x + 1U);
    for (unsigned k = 1; k <= out.dim_x; ++k) section[k] = k % 2 ? 1 : -1;
    out.segre = cap_with_poly(ProjClass::fundamental(n - 1, out.dim_x, 2), section);
    out.milnor = milnor_from_segre(out.chern, out.dim_x, out.segre);
    out.csm = chern_fulton_quadric_section(out.chern, out.dim_x) + out.milnor.scaled(sign_of(out.dim_x));
    const int m = static_cast<int>(n);
    out.euler = {out.dim_x, quadric_euler_characteristic(m - 1), quadric_euler_characteristic(m - 2),
                 quadric_euler_characteristic(m - 2), quadric_euler_characteristic(m - 3)};
    return out;
}

}  // namespace edd
