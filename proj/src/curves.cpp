#include "edd/curves.hpp"

#include "edd/polyring/resultant.hpp"
#include "edd/polyring/univariate.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace edd {

namespace {

// Raised by the dynamic-evaluation gcd when a coefficient is a zero divisor
// modulo m; m = first * second with coprime factors.
struct Split {
    UnivariatePoly first;
    UnivariatePoly second;
};

using ModPoly = std::vector<UnivariatePoly>;  // coefficients in K[x]/(m), entry k multiplies y^k

void reduce(ModPoly& p, const UnivariatePoly& m) {
    for (auto& c : p) c = c % m;
}

// Drops leading coefficients that vanish modulo m and makes the remaining
// leading coefficient 1. Throws Split when the leading coefficient is neither
// zero nor a unit.
void normalize(ModPoly& p, const UnivariatePoly& m) {
    while (!p.empty()) {
        const UnivariatePoly& lead = p.back();
        if (lead.is_zero()) {
            p.pop_back();
            continue;
        }
        const ExtendedGcd eg = extended_gcd(lead, m);
        if (eg.gcd.degree() == 0) {
            const UnivariatePoly inv = eg.u.scaled(eg.gcd.leading().inverse());
            for (auto& c : p) c = (c * inv) % m;
            return;
        }
        throw Split{eg.gcd, exact_quotient(m, eg.gcd)};
    }
}

// a mod b for monic b over K[x]/(m).
ModPoly mod_remainder(ModPoly a, const ModPoly& b, const UnivariatePoly& m) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const UnivariatePoly factor = a.back();
        const std::size_t shift = a.size() - 1 - db;
        if (!factor.is_zero()) {
            for (std::size_t k = 0; k <= db; ++k) a[shift + k] = (a[shift + k] - factor * b[k]) % m;
        }
        a.pop_back();
    }
    return a;
}

ModPoly mod_gcd(ModPoly a, ModPoly b, const UnivariatePoly& m) {
    normalize(a, m);
    normalize(b, m);
    while (!b.empty()) {
        ModPoly r = mod_remainder(std::move(a), b, m);
        normalize(r, m);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// True if at some root x0 of the squarefree m the polynomials share a root in y.
bool common_root_over(const UnivariatePoly& m, const std::vector<ModPoly>& polys) {
    if (m.degree() < 1) return false;
    try {
        ModPoly g = polys.front();
        reduce(g, m);
        for (std::size_t i = 1; i < polys.size(); ++i) {
            ModPoly next = polys[i];
            reduce(next, m);
            g = mod_gcd(std::move(g), std::move(next), m);
        }
        normalize(g, m);
        return g.size() >= 2;
    } catch (const Split& split) {
        return common_root_over(split.first, polys) || common_root_over(split.second, polys);
    }
}

// Coefficients of f(x, y, 1) grouped by powers of y.
BivariatePoly affine_part(const TernaryForm& f) {
    std::vector<std::vector<GaussianRational>> rows(f.degree() + 1U);
    for (const auto& [e, c] : f.terms()) {
        auto& row = rows[e[1]];
        if (row.size() <= e[0]) row.resize(e[0] + 1U);
        row[e[0]] = c;
    }
    BivariatePoly out;
    for (auto& row : rows) out.emplace_back(std::move(row));
    return out;
}

// f(1, y, 0) as a polynomial in y.
UnivariatePoly line_at_infinity(const TernaryForm& f) {
    std::vector<GaussianRational> coeffs(f.degree() + 1U);
    for (const auto& [e, c] : f.terms()) {
        if (e[2] == 0) coeffs[e[1]] = c;
    }
    return UnivariatePoly(std::move(coeffs));
}

}  // namespace

BinaryForm isotropic_pullback(const TernaryForm& f) {
    const BinaryForm s = BinaryForm::s();
    const BinaryForm t = BinaryForm::t();
    const BinaryForm px = s * s - t * t;
    const BinaryForm py = (s * t).scaled(2);
    const BinaryForm pz = (s * s + t * t).scaled(GaussianRational::i());
    return ternary_substitute_param(f, px, py, pz);
}

Smoothness smoothness_check_plane(const TernaryForm& f, unsigned bound) {
    if (f.is_zero()) throw DomainError("the zero form does not define a curve");
    const unsigned d = f.degree();
    if (d == 0) throw DomainError("a nonzero constant does not define a curve");
    if (d > bound) return Smoothness::unchecked;
    if (d == 1) return Smoothness::smooth;

    const TernaryForm fx = f.partial(0);
    const TernaryForm fy = f.partial(1);
    const TernaryForm fz = f.partial(2);
    // A missing variable makes V(F) a cone over points of a line.
    if (fx.is_zero() || fy.is_zero() || fz.is_zero()) return Smoothness::singular;

    // Find (a, b) such that after x -> x + a*y, z -> z + b*y every partial has
    // a nonzero y^(d-1) coefficient, i.e. F_x, F_z and F do not vanish at (a, 1, b).
    const long side = 3L * d + 2;
    std::optional<std::pair<long, long>> shift;
    for (long radius = 0; radius <= side && !shift; ++radius) {
        for (long a = 0; a <= radius && !shift; ++a) {
            for (long b = 0; b <= radius && !shift; ++b) {
                if (std::max(a, b) != radius) continue;
                const GaussianRational ga(a);
                const GaussianRational gb(b);
                if (fx.evaluate(ga, 1, gb).is_zero() || fz.evaluate(ga, 1, gb).is_zero() ||
                    f.evaluate(ga, 1, gb).is_zero()) {
                    continue;
                }
                shift = std::make_pair(a, b);
            }
        }
    }
    if (!shift) throw std::logic_error("no admissible coordinate change found");

    const TernaryForm g = ternary_compose(f, TernaryForm::x() + TernaryForm::y().scaled(shift->first), TernaryForm::y(),
                                          TernaryForm::z() + TernaryForm::y().scaled(shift->second));
    const TernaryForm partials[3] = {g.partial(0), g.partial(1), g.partial(2)};

    // Points (1 : y : 0). The point (0 : 1 : 0) is excluded by the choice of shift.
    UnivariatePoly line_gcd;
    for (const auto& p : partials) {
        const UnivariatePoly restricted = line_at_infinity(p);
        if (restricted.is_zero()) continue;
        line_gcd = line_gcd.is_zero() ? restricted.monic() : upoly_gcd(line_gcd, restricted);
    }
    if (line_gcd.is_zero() || line_gcd.degree() >= 1) return Smoothness::singular;

    // Affine chart z = 1. Every partial has constant leading coefficient in y,
    // so the resultant vanishes exactly at x-coordinates of common zeros.
    const BivariatePoly a = affine_part(partials[0]);
    const BivariatePoly b = affine_part(partials[1]);
    const UnivariatePoly r = sylvester_resultant(a, b);
    if (r.is_zero()) return Smoothness::singular;
    if (r.degree() == 0) return Smoothness::smooth;

    const std::vector<ModPoly> polys = {a, b, affine_part(partials[2])};
    return common_root_over(squarefree_part(r), polys) ? Smoothness::singular : Smoothness::smooth;
}

EddReport plane_curve_edd(const PlaneCurveInput& input) {
    const TernaryForm& f = input.f;
    if (f.is_zero() || f.degree() == 0) throw DomainError("a plane curve needs a form of positive degree");
    const unsigned d = f.degree();

    std::vector<std::string> warnings;
    if (input.assume_smooth) {
        warnings.emplace_back("smoothness assumed, not checked");
    } else {
        switch (smoothness_check_plane(f, input.smoothness_bound)) {
            case Smoothness::smooth: break;
            case Smoothness::singular: throw DomainError("the curve is singular");
            case Smoothness::unchecked:
                throw UnsupportedError("degree " + std::to_string(d) + " exceeds the smoothness check bound " +
                                       std::to_string(input.smoothness_bound) + "; pass assume_smooth");
        }
    }

    const BinaryForm g = isotropic_pullback(f);
    if (g.is_zero()) {
        const TernaryForm q = TernaryForm::x().pow(2) + TernaryForm::y().pow(2) + TernaryForm::z().pow(2);
        if (d == 2 && f.proportional_to(q)) {
            EddReport report = make_report(EddMethod::plane_curve, 0, {{"d", d}});
            report.warnings = std::move(warnings);
            report.warnings.emplace_back("the curve is the isotropic conic");
            return report;
        }
        throw DomainError("the isotropic conic divides F, so F is not a smooth irreducible curve");
    }

    const unsigned r = binary_distinct_roots(g);
    if (r > 2 * d) throw std::logic_error("more than 2d distinct points on the isotropic conic");
    const Integer dd(d);
    EddReport report = make_report(EddMethod::plane_curve, dd * (dd - 2) + Integer(r), {{"d", d}, {"R", r}});
    report.warnings.insert(report.warnings.begin(), warnings.begin(), warnings.end());
    return report;
}

EddReport rational_curve_edd(const RationalCurveInput& input) {
    const auto& phi = input.phi;
    if (phi.empty()) throw DomainError("a parametrization needs at least one coordinate");
    const unsigned e = phi.front().degree();
    if (e < 1) throw DomainError("the parametrizing forms must have positive degree");
    for (const auto& p : phi) {
        if (p.degree() != e) throw DomainError("the parametrizing forms must share a degree");
    }
    if (input.square_weights && input.square_weights->size() != phi.size()) {
        throw DomainError("square_weights length does not match the number of coordinates");
    }

    // Base points: a common zero at (0:1), or a common root of the phi_j(1, t).
    bool all_zero_at_infinity = true;
    UnivariatePoly common;
    bool any_nonzero = false;
    for (std::size_t j = 0; j < phi.size(); ++j) {
        if (input.square_weights && (*input.square_weights)[j].is_zero()) continue;
        if (phi[j].is_zero()) continue;
        any_nonzero = true;
        all_zero_at_infinity = all_zero_at_infinity && phi[j].vanishes_at_infinity();
        const UnivariatePoly a = phi[j].dehomogenize();
        common = common.is_zero() ? a.monic() : upoly_gcd(common, a);
    }
    if (!any_nonzero) throw DomainError("all coordinates of the parametrization vanish");
    if (all_zero_at_infinity || common.degree() >= 1) throw DomainError("the parametrization has a base point");

    BinaryForm sum = BinaryForm::zero(2 * e);
    for (std::size_t j = 0; j < phi.size(); ++j) {
        const GaussianRational w = input.square_weights ? (*input.square_weights)[j] : GaussianRational(1);
        sum = sum + (phi[j] * phi[j]).scaled(w);
    }
    if (sum.is_zero()) {
        EddReport report = make_report(EddMethod::rational_curve, 0, {{"e", e}});
        report.warnings.emplace_back("the curve lies on the isotropic quadric");
        return report;
    }
    const unsigned r = binary_distinct_roots(sum);
    return make_report(EddMethod::rational_curve, Integer(e) + Integer(r) - 2, {{"e", e}, {"R", r}, {"chi", 2}});
}

RationalCurveInput rational_normal_curve(unsigned n) {
    if (n < 2) throw DomainError("a rational normal curve needs n >= 2");
    RationalCurveInput input;
    input.square_weights.emplace();
    for (unsigned j = 0; j < n; ++j) {
        input.phi.push_back(BinaryForm::monomial(1, n - 1 - j, j));
        input.square_weights->emplace_back(Rational(binomial(n - 1, j)));
    }
    return input;
}

}  // namespace edd
