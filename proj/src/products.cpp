#include "edd/products.hpp"

#include "edd/polyring/series.hpp"

#include <algorithm>

namespace edd {

namespace {

std::vector<unsigned> caps_of(const std::vector<unsigned>& dims) {
    std::vector<unsigned> caps;
    for (const unsigned m : dims) caps.push_back(m - 1);
    return caps;
}

Integer integral_coefficient(const Rational& c) {
    if (!c.is_integer()) throw DomainError("coefficient " + c.to_string() + " is not an integer");
    return c.to_integer();
}

}  // namespace

void validate(const ProductSpec& spec) {
    if (spec.dims.empty()) throw DomainError("a product needs at least one factor");
    if (spec.weights.size() != spec.dims.size()) throw DomainError("weights and dims have different lengths");
    for (const unsigned m : spec.dims) {
        if (m < 1) throw DomainError("factor sizes m_i must be at least 1");
    }
    for (const unsigned w : spec.weights) {
        if (w < 1) throw DomainError("weights must be at least 1");
    }
}

Integer snc_edd(const std::vector<unsigned>& dims, const std::vector<unsigned>& weights,
                const std::vector<std::vector<long>>& divisor_multidegrees) {
    validate({dims, weights, CoordinateChoice::general});
    const std::size_t p = dims.size();
    const auto caps = caps_of(dims);

    // c(T*X) = prod (1 - h_i)^(m_i), built from sparse univariate factors.
    TruncatedMultiSeries series = TruncatedMultiSeries::one(caps);
    for (std::size_t i = 0; i < p; ++i) {
        std::vector<Rational> coeffs;
        for (unsigned k = 0; k <= dims[i]; ++k) {
            Rational c(binomial(dims[i], k));
            coeffs.push_back(k % 2 ? -c : c);
        }
        series = ts_mul(series, TruncatedMultiSeries::univariate(caps, i, coeffs));
    }

    for (const auto& divisor : divisor_multidegrees) {
        if (divisor.size() != p) throw DomainError("divisor multidegree length does not match the number of factors");
        std::vector<Rational> neg;
        for (const long d : divisor) neg.emplace_back(-d);
        series = ts_divide_linear(series, 1, neg);
    }

    std::vector<Rational> hyperplane;
    for (const unsigned w : weights) hyperplane.emplace_back(-static_cast<long>(w));
    series = ts_divide_linear(series, 1, hyperplane);

    return integral_coefficient(ts_coefficient(series, caps));
}

Integer edd_segre(const std::vector<unsigned>& dims) {
    return edd_segre_veronese({dims, std::vector<unsigned>(dims.size(), 1), CoordinateChoice::general});
}

Integer edd_segre_veronese(const ProductSpec& spec) {
    validate(spec);
    const std::size_t p = spec.dims.size();
    std::vector<std::vector<long>> divisors(p, std::vector<long>(p, 0));
    for (std::size_t i = 0; i < p; ++i) {
        divisors[i][i] = spec.coords == CoordinateChoice::general ? 2L * spec.weights[i] : 2L;
    }
    return snc_edd(spec.dims, spec.weights, divisors);
}

Integer edd_fo(const std::vector<unsigned>& dims, const std::vector<unsigned>& weights) {
    validate({dims, weights, CoordinateChoice::general});
    const std::size_t p = dims.size();
    const auto caps = caps_of(dims);

    std::vector<TruncatedMultiSeries> factors;
    for (std::size_t i = 0; i < p; ++i) {
        std::vector<Rational> zhat_coeffs;
        for (std::size_t j = 0; j < p; ++j) {
            zhat_coeffs.emplace_back(static_cast<long>(weights[j]) - (i == j ? 1L : 0L));
        }
        const auto zhat = TruncatedMultiSeries::linear(caps, 0, zhat_coeffs);
        // Horner: sum_{k=0}^{m-1} zhat^(m-1-k) z^k.
        TruncatedMultiSeries acc = TruncatedMultiSeries::one(caps);
        for (unsigned k = 1; k < dims[i]; ++k) {
            std::vector<Rational> zk(k + 1);
            zk[k] = 1;
            acc = ts_mul(acc, zhat) + TruncatedMultiSeries::univariate(caps, i, zk);
        }
        factors.push_back(std::move(acc));
    }

    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return a.nonzero_count() < b.nonzero_count(); });
    TruncatedMultiSeries product = TruncatedMultiSeries::one(caps);
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) product = ts_mul(product, factors[i]);
    return integral_coefficient(ts_product_coefficient(product, factors.back(), caps));
}

Integer veronese_closed_form(unsigned m, unsigned w) {
    if (m < 1 || w < 1) throw DomainError("veronese_closed_form needs m >= 1 and w >= 1");
    if (w == 2) return Integer(m);
    const Integer num = (Integer(w) - 1).pow(m) - 1;
    return num / (Integer(w) - 2);
}

}  // namespace edd
