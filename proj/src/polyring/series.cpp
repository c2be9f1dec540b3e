#include "edd/polyring/series.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace edd {

namespace {

void require_same_caps(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b) {
    if (a.caps() != b.caps()) throw DomainError("truncated series with different caps");
}

struct SparseEntry {
    std::size_t index;
    const Rational* value;
};

// Nonzero entries with their exponent tuples flattened into `exponents`.
std::vector<SparseEntry> nonzero_entries(const TruncatedMultiSeries& a, std::vector<unsigned>& exponents) {
    std::vector<SparseEntry> out;
    const std::size_t p = a.var_count();
    for (std::size_t idx = 0; idx < a.size(); ++idx) {
        const Rational& v = a.at_index(idx);
        if (v.is_zero()) continue;
        out.push_back({idx, &v});
        const auto e = a.exponent_at(idx);
        exponents.insert(exponents.end(), e.begin(), e.begin() + static_cast<std::ptrdiff_t>(p));
    }
    return out;
}

}  // namespace

TruncatedMultiSeries::TruncatedMultiSeries(std::vector<unsigned> caps) : caps_(std::move(caps)) {
    strides_.assign(caps_.size(), 1);
    std::size_t total = 1;
    for (std::size_t i = caps_.size(); i-- > 0;) {
        strides_[i] = total;
        total *= static_cast<std::size_t>(caps_[i]) + 1;
    }
    table_.assign(total, Rational());
}

TruncatedMultiSeries TruncatedMultiSeries::constant(std::vector<unsigned> caps, const Rational& c) {
    TruncatedMultiSeries out(std::move(caps));
    out.table_.front() = c;
    return out;
}

TruncatedMultiSeries TruncatedMultiSeries::variable(std::vector<unsigned> caps, std::size_t variable,
                                                    const Rational& c) {
    TruncatedMultiSeries out(std::move(caps));
    if (variable >= out.var_count()) throw DomainError("series variable index out of range");
    if (out.caps_[variable] >= 1) out.table_[out.strides_[variable]] = c;
    return out;
}

TruncatedMultiSeries TruncatedMultiSeries::linear(std::vector<unsigned> caps, const Rational& c0,
                                                  const std::vector<Rational>& coefficients) {
    TruncatedMultiSeries out = constant(std::move(caps), c0);
    if (coefficients.size() != out.var_count()) throw DomainError("linear form length does not match variable count");
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        if (out.caps_[i] >= 1) out.table_[out.strides_[i]] = coefficients[i];
    }
    return out;
}

TruncatedMultiSeries TruncatedMultiSeries::univariate(std::vector<unsigned> caps, std::size_t variable,
                                                      const std::vector<Rational>& coefficients) {
    TruncatedMultiSeries out(std::move(caps));
    if (variable >= out.var_count()) throw DomainError("series variable index out of range");
    const std::size_t top = std::min<std::size_t>(coefficients.size(), out.caps_[variable] + 1U);
    for (std::size_t k = 0; k < top; ++k) out.table_[k * out.strides_[variable]] = coefficients[k];
    return out;
}

std::size_t TruncatedMultiSeries::nonzero_count() const {
    return static_cast<std::size_t>(
        std::count_if(table_.begin(), table_.end(), [](const Rational& r) { return !r.is_zero(); }));
}

std::vector<unsigned> TruncatedMultiSeries::exponent_at(std::size_t index) const {
    std::vector<unsigned> e(caps_.size());
    for (std::size_t i = 0; i < caps_.size(); ++i) {
        e[i] = static_cast<unsigned>(index / strides_[i]);
        index %= strides_[i];
    }
    return e;
}

std::size_t TruncatedMultiSeries::index_of(std::span<const unsigned> exponent) const {
    if (exponent.size() != caps_.size()) throw DomainError("exponent tuple has the wrong number of variables");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < caps_.size(); ++i) {
        if (exponent[i] > caps_[i]) throw DomainError("exponent exceeds the truncation cap");
        idx += exponent[i] * strides_[i];
    }
    return idx;
}

TruncatedMultiSeries TruncatedMultiSeries::scaled(const Rational& c) const {
    TruncatedMultiSeries out = *this;
    for (auto& v : out.table_) v *= c;
    return out;
}

TruncatedMultiSeries TruncatedMultiSeries::pow(unsigned exponent) const {
    TruncatedMultiSeries result = one(caps_);
    for (unsigned k = 0; k < exponent; ++k) result = ts_mul(result, *this);
    return result;
}

std::string TruncatedMultiSeries::to_string() const {
    std::vector<std::size_t> order(table_.size());
    std::iota(order.begin(), order.end(), 0);
    auto total_degree = [this](std::size_t idx) {
        const auto e = exponent_at(idx);
        return std::accumulate(e.begin(), e.end(), 0U);
    };
    // Graded, then h1 before h2 before ... within a degree.
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto da = total_degree(a);
        const auto db = total_degree(b);
        if (da != db) return da < db;
        return exponent_at(a) > exponent_at(b);
    });

    std::string out;
    for (const std::size_t idx : order) {
        const Rational& c = table_[idx];
        if (c.is_zero()) continue;
        std::string mono;
        const auto e = exponent_at(idx);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += caps_.size() == 1 ? "h" : "h" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        std::string term;
        if (mono.empty()) {
            term = mag.to_string();
        } else if (mag.is_one()) {
            term = mono;
        } else {
            term = (mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")") + "*" + mono;
        }
        if (out.empty()) {
            out = (negative ? "-" : "") + term;
        } else {
            out += (negative ? "-" : "+") + term;
        }
    }
    return out.empty() ? "0" : out;
}

TruncatedMultiSeries operator+(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b) {
    require_same_caps(a, b);
    TruncatedMultiSeries out = a;
    for (std::size_t i = 0; i < out.table_.size(); ++i) out.table_[i] += b.table_[i];
    return out;
}

TruncatedMultiSeries operator-(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b) {
    require_same_caps(a, b);
    TruncatedMultiSeries out = a;
    for (std::size_t i = 0; i < out.table_.size(); ++i) out.table_[i] -= b.table_[i];
    return out;
}

TruncatedMultiSeries operator*(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b) { return ts_mul(a, b); }

TruncatedMultiSeries ts_mul(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b) {
    require_same_caps(a, b);
    const std::size_t p = a.var_count();
    const auto& caps = a.caps();

    std::vector<unsigned> ea;
    std::vector<unsigned> eb;
    const auto na = nonzero_entries(a, ea);
    const auto nb = nonzero_entries(b, eb);

    TruncatedMultiSeries out(caps);
    for (std::size_t i = 0; i < na.size(); ++i) {
        const unsigned* xa = ea.data() + i * p;
        for (std::size_t j = 0; j < nb.size(); ++j) {
            const unsigned* xb = eb.data() + j * p;
            bool inside = true;
            for (std::size_t v = 0; v < p; ++v) {
                if (xa[v] + xb[v] > caps[v]) {
                    inside = false;
                    break;
                }
            }
            if (!inside) continue;
            out.table_[na[i].index + nb[j].index].add_product(*na[i].value, *nb[j].value);
        }
    }
    return out;
}

TruncatedMultiSeries ts_inverse(const TruncatedMultiSeries& a) {
    if (a.constant_term().is_zero()) throw DomainError("series with zero constant term is not invertible");
    const std::size_t p = a.var_count();

    std::vector<unsigned> ea;
    auto na = nonzero_entries(a, ea);
    // Drop the constant entry: it is always first in index order.
    na.erase(na.begin());
    ea.erase(ea.begin(), ea.begin() + static_cast<std::ptrdiff_t>(p));

    const Rational neg_inv = -a.constant_term().inverse();
    TruncatedMultiSeries out(a.caps());
    out.table_.front() = a.constant_term().inverse();

    for (std::size_t idx = 1; idx < out.table_.size(); ++idx) {
        const auto e = out.exponent_at(idx);
        Rational acc;
        for (std::size_t k = 0; k < na.size(); ++k) {
            if (na[k].index > idx) break;
            const unsigned* f = ea.data() + k * p;
            bool below = true;
            for (std::size_t v = 0; v < p; ++v) {
                if (f[v] > e[v]) {
                    below = false;
                    break;
                }
            }
            if (below) acc.add_product(*na[k].value, out.table_[idx - na[k].index]);
        }
        out.table_[idx] = acc * neg_inv;
    }
    return out;
}

Rational ts_coefficient(const TruncatedMultiSeries& a, std::span<const unsigned> exponent) {
    return a.coefficient(exponent);
}

Rational ts_product_coefficient(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b,
                                std::span<const unsigned> exponent) {
    require_same_caps(a, b);
    const std::size_t target = a.index_of(exponent);
    const std::size_t p = a.var_count();
    Rational acc;
    for (std::size_t idx = 0; idx <= target; ++idx) {
        const Rational& x = a.table_[idx];
        if (x.is_zero()) continue;
        const auto e = a.exponent_at(idx);
        bool below = true;
        for (std::size_t v = 0; v < p; ++v) {
            if (e[v] > exponent[v]) {
                below = false;
                break;
            }
        }
        if (below) acc.add_product(x, b.table_[target - idx]);
    }
    return acc;
}

TruncatedMultiSeries ts_divide_linear(const TruncatedMultiSeries& a, const Rational& c0,
                                      const std::vector<Rational>& coefficients) {
    if (c0.is_zero()) throw DomainError("linear form with zero constant term is not invertible");
    if (coefficients.size() != a.var_count()) throw DomainError("linear form length does not match variable count");
    const Rational inv = c0.inverse();
    const std::size_t p = a.var_count();
    std::vector<Rational> neg;
    for (const auto& c : coefficients) neg.push_back(-c);
    TruncatedMultiSeries out(a.caps());
    std::vector<unsigned> e(p, 0);
    for (std::size_t idx = 0; idx < out.table_.size(); ++idx) {
        Rational acc = a.table_[idx];
        for (std::size_t v = 0; v < p; ++v) {
            if (e[v] == 0 || coefficients[v].is_zero()) continue;
            acc.add_product(neg[v], out.table_[idx - out.strides_[v]]);
        }
        out.table_[idx] = inv.is_one() ? std::move(acc) : acc * inv;
        // Advance the mixed-radix counter, last variable fastest.
        for (std::size_t v = p; v-- > 0;) {
            if (e[v] < a.caps_[v]) {
                ++e[v];
                break;
            }
            e[v] = 0;
        }
    }
    return out;
}

}  // namespace edd
