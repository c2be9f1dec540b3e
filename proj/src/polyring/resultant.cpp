#include "edd/polyring/resultant.hpp"

#include <utility>

namespace edd {

int y_degree(const BivariatePoly& p) {
    for (std::size_t k = p.size(); k-- > 0;) {
        if (!p[k].is_zero()) return static_cast<int>(k);
    }
    return -1;
}

UnivariatePoly bareiss_determinant(std::vector<std::vector<UnivariatePoly>> matrix) {
    const std::size_t n = matrix.size();
    if (n == 0) return UnivariatePoly::constant(1);
    for (const auto& row : matrix) {
        if (row.size() != n) throw DomainError("determinant of a non-square matrix");
    }

    bool negate = false;
    UnivariatePoly previous = UnivariatePoly::constant(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (matrix[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && matrix[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return {};
            std::swap(matrix[k], matrix[pivot]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                UnivariatePoly numer = matrix[i][j] * matrix[k][k] - matrix[i][k] * matrix[k][j];
                matrix[i][j] = exact_quotient(numer, previous);
            }
            matrix[i][k] = UnivariatePoly();
        }
        previous = matrix[k][k];
    }
    UnivariatePoly det = matrix[n - 1][n - 1];
    return negate ? -det : det;
}

UnivariatePoly sylvester_resultant(const BivariatePoly& a, const BivariatePoly& b) {
    const int m = y_degree(a);
    const int n = y_degree(b);
    if (m < 0 || n < 0) return {};
    if (m == 0 && n == 0) return UnivariatePoly::constant(1);
    if (m == 0) return a[0].pow(static_cast<unsigned>(n));
    if (n == 0) return b[0].pow(static_cast<unsigned>(m));

    const auto size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<UnivariatePoly>> sylvester(size, std::vector<UnivariatePoly>(size));
    // Rows hold coefficients from the leading one down, shifted one column per row.
    for (std::size_t row = 0; row < static_cast<std::size_t>(n); ++row) {
        for (int k = m; k >= 0; --k) sylvester[row][row + static_cast<std::size_t>(m - k)] = a[static_cast<std::size_t>(k)];
    }
    for (std::size_t row = 0; row < static_cast<std::size_t>(m); ++row) {
        for (int k = n; k >= 0; --k) {
            sylvester[static_cast<std::size_t>(n) + row][row + static_cast<std::size_t>(n - k)] = b[static_cast<std::size_t>(k)];
        }
    }
    return bareiss_determinant(std::move(sylvester));
}

}  // namespace edd
