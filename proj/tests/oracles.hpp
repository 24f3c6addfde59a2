#pragma once

// Test-only oracles, independent of the library's reduction path.

#include "asphera/intmat.hpp"

#include <random>

namespace asphera::testing {

// Fraction-free Bareiss determinant; exact divisions throughout.
inline Int bareiss_det(IntMatrix a)
{
    const int n = a.rows();
    if (n != a.cols())
        throw std::logic_error("bareiss_det: square matrices only");
    if (n == 0)
        return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0)
                return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return Int(sign) * a(n - 1, n - 1);
}

inline IntMatrix random_matrix(std::mt19937_64& rng, int max_dim, int max_abs)
{
    std::uniform_int_distribution<int> dim(1, max_dim);
    std::uniform_int_distribution<int> entry(-max_abs, max_abs);
    IntMatrix m(dim(rng), dim(rng));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            m(i, j) = entry(rng);
    return m;
}

} // namespace asphera::testing
