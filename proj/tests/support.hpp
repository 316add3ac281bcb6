#pragma once

#include <random>
#include <vector>

#include "nccr/int_matrix.hpp"

namespace testsupport {

using nccr::Int;
using nccr::IntMatrix;

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = dist(rng);
    return m;
}

// Random unimodular matrix as a product of elementary row operations.
inline IntMatrix random_unimodular(std::mt19937& rng, std::size_t n, int ops = 12) {
    IntMatrix u = IntMatrix::identity(n);
    if (n < 2)
        return u;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> kind(0, 2);
    for (int k = 0; k < ops; ++k) {
        std::size_t a = pick(rng), b = pick(rng);
        switch (kind(rng)) {
        case 0:
            if (a != b)
                u.add_row(a, b, coef(rng));
            break;
        case 1:
            u.swap_rows(a, b);
            break;
        default:
            u.negate_row(a);
            break;
        }
    }
    return u;
}

// Independent oracle: d_k = gcd of all k x k minors; invariant factor k is
// d_k / d_{k-1}. Used to cross-check snf on small matrices.
inline Int minor_det(const IntMatrix& A, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols) {
    IntMatrix sub(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            sub(i, j) = A(rows[i], cols[j]);
    return nccr::determinant(sub);
}

inline void combinations(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i)
        cur[i] = i;
    if (k > n)
        return;
    for (;;) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (cur[i] != i + n - k) {
                ++cur[i];
                for (std::size_t j = i + 1; j < k; ++j)
                    cur[j] = cur[j - 1] + 1;
                break;
            }
            if (i == 0)
                return;
        }
    }
}

inline std::vector<Int> invariant_factors_by_minor_gcd(const IntMatrix& A) {
    std::vector<Int> out;
    Int prev = 1;
    const std::size_t kmax = std::min(A.rows(), A.cols());
    for (std::size_t k = 1; k <= kmax; ++k) {
        std::vector<std::vector<std::size_t>> rsel, csel;
        combinations(A.rows(), k, rsel);
        combinations(A.cols(), k, csel);
        Int g = 0;
        for (const auto& r : rsel)
            for (const auto& c : csel)
                g = nccr::gcd_int(g, minor_det(A, r, c));
        if (g == 0)
            break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

} // namespace testsupport
