#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <vector>

#include "nccr/error.hpp"

namespace nccr {

// All lattice arithmetic is exact at any magnitude.
using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// g = gcd(a,b) together with x,y such that x*a + y*b = g.
inline void ext_gcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
    if (b == 0) {
        g = abs_int(a);
        x = a < 0 ? -1 : (a > 0 ? 1 : 0);
        y = 0;
        return;
    }
    Int x1, y1;
    ext_gcd(b, Int(a % b), g, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
}

// Dense row-major integer matrix.
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        require(data_.size() == rows_ * cols_, "matrix_shape",
                "entry count does not match rows x cols");
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<IntVec>& rows) {
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? 0 : rows[0].size();
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            require(rows[i].size() == c, "matrix_shape", "ragged row list");
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& b) const {
        require(cols_ == b.rows_, "matrix_shape", "dimension mismatch in product");
        IntMatrix p(rows_, b.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& a = (*this)(i, k);
                if (a == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    p(i, j) += a * b(k, j);
            }
        return p;
    }

    IntVec row(std::size_t i) const {
        IntVec v(cols_);
        for (std::size_t j = 0; j < cols_; ++j)
            v[j] = (*this)(i, j);
        return v;
    }

    IntVec col(std::size_t j) const {
        IntVec v(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            v[i] = (*this)(i, j);
        return v;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }

    // row a += f * row b
    void add_row(std::size_t a, std::size_t b, const Int& f) {
        if (f == 0)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(a, j) += f * (*this)(b, j);
    }

    void add_col(std::size_t a, std::size_t b, const Int& f) {
        if (f == 0)
            return;
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, a) += f * (*this)(i, b);
    }

    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(a, j) = -(*this)(a, j);
    }

    void negate_col(std::size_t a) {
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, a) = -(*this)(i, a);
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i ? ", [" : "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j)
                    s += ", ";
                s += (*this)(i, j).str();
            }
            s += "]";
        }
        return s + "]";
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

struct HermiteResult {
    IntMatrix H; // row Hermite normal form, U * A == H
    IntMatrix U; // unimodular
    std::vector<std::size_t> pivot_cols;
};

// Row-style Hermite normal form. Pivots positive, entries above each pivot
// reduced into [0, pivot). Output is the unique HNF of the row lattice with
// zero rows last, so equal row lattices give byte-identical results.
inline HermiteResult hnf(const IntMatrix& A) {
    const std::size_t m = A.rows(), n = A.cols();
    HermiteResult r{A, IntMatrix::identity(m), {}};
    IntMatrix& H = r.H;
    IntMatrix& U = r.U;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        // Clear the column below `row` by gcd steps, accumulating into `row`.
        for (std::size_t i = row + 1; i < m; ++i) {
            if (H(i, col) == 0)
                continue;
            if (H(row, col) == 0) {
                H.swap_rows(row, i);
                U.swap_rows(row, i);
                continue;
            }
            Int g, x, y;
            ext_gcd(H(row, col), H(i, col), g, x, y);
            const Int a = H(row, col) / g, b = H(i, col) / g;
            for (std::size_t j = 0; j < n; ++j) {
                Int hr = H(row, j), hi = H(i, j);
                H(row, j) = x * hr + y * hi;
                H(i, j) = -b * hr + a * hi;
            }
            for (std::size_t j = 0; j < m; ++j) {
                Int ur = U(row, j), ui = U(i, j);
                U(row, j) = x * ur + y * ui;
                U(i, j) = -b * ur + a * ui;
            }
        }
        if (H(row, col) == 0)
            continue;
        if (H(row, col) < 0) {
            H.negate_row(row);
            U.negate_row(row);
        }
        // Reduce entries above the pivot into [0, pivot).
        const Int& p = H(row, col);
        for (std::size_t i = 0; i < row; ++i) {
            Int q = H(i, col) / p;
            if (H(i, col) - q * p < 0)
                q -= 1; // floor division
            if (q != 0) {
                H.add_row(i, row, -q);
                U.add_row(i, row, -q);
            }
        }
        r.pivot_cols.push_back(col);
        ++row;
    }
    return r;
}

inline std::size_t rank(const IntMatrix& A) { return hnf(A).pivot_cols.size(); }

// Determinant by fraction-free (Bareiss) elimination.
inline Int determinant(const IntMatrix& A) {
    require(A.rows() == A.cols(), "matrix_shape", "determinant of non-square matrix");
    const std::size_t n = A.rows();
    if (n == 0)
        return 1;
    IntMatrix M = A;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && M(piv, k) == 0)
                ++piv;
            if (piv == n)
                return 0;
            M.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
        prev = M(k, k);
    }
    return sign * M(n - 1, n - 1);
}

struct SmithDecomposition {
    IntMatrix U; // rows x rows, unimodular
    IntMatrix D; // rows x cols, diagonal, d_i | d_{i+1}, zeros trailing
    IntMatrix V; // cols x cols, unimodular
    std::vector<Int> invariant_factors; // nonzero diagonal entries in order
};

namespace detail {

// Pick the nonzero entry of smallest absolute value in the trailing block
// starting at (t,t); bounds coefficient growth. Ties break row-then-column.
inline bool smallest_pivot(const IntMatrix& M, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best = 0;
    for (std::size_t i = t; i < M.rows(); ++i)
        for (std::size_t j = t; j < M.cols(); ++j) {
            if (M(i, j) == 0)
                continue;
            Int a = abs_int(M(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

} // namespace detail

// Smith normal form: U*A*V = D.
inline SmithDecomposition snf(const IntMatrix& A) {
    const std::size_t m = A.rows(), n = A.cols();
    SmithDecomposition r{IntMatrix::identity(m), A, IntMatrix::identity(n), {}};
    IntMatrix& D = r.D;
    IntMatrix& U = r.U;
    IntMatrix& V = r.V;

    const std::size_t t_max = std::min(m, n);
    for (std::size_t t = 0; t < t_max; ++t) {
        std::size_t pi = t, pj = t;
        if (!detail::smallest_pivot(D, t, pi, pj))
            break;
        D.swap_rows(t, pi);
        U.swap_rows(t, pi);
        D.swap_cols(t, pj);
        V.swap_cols(t, pj);
        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D(i, t) == 0)
                    continue;
                Int q = D(i, t) / D(t, t);
                D.add_row(i, t, -q);
                U.add_row(i, t, -q);
                if (D(i, t) != 0) {
                    // Remainder smaller than pivot: promote it and restart.
                    D.swap_rows(t, i);
                    U.swap_rows(t, i);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D(t, j) == 0)
                    continue;
                Int q = D(t, j) / D(t, t);
                D.add_col(j, t, -q);
                V.add_col(j, t, -q);
                if (D(t, j) != 0) {
                    D.swap_cols(t, j);
                    V.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (!dirty)
                break;
        }
        if (D(t, t) < 0) {
            D.negate_row(t);
            U.negate_row(t);
        }
    }

    // Enforce the divisibility chain d_i | d_{i+1}.
    for (;;) {
        bool changed = false;
        for (std::size_t i = 0; i + 1 < t_max; ++i) {
            const Int &a = D(i, i), &b = D(i + 1, i + 1);
            if (a == 0 && b != 0) {
                D.swap_rows(i, i + 1);
                U.swap_rows(i, i + 1);
                D.swap_cols(i, i + 1);
                V.swap_cols(i, i + 1);
                changed = true;
                continue;
            }
            if (a == 0 || b == 0 || b % a == 0)
                continue;
            // Fold b into the pivot: (a,b) -> (gcd, lcm).
            Int g, x, y;
            ext_gcd(a, b, g, x, y);
            Int l = a / g * b;
            // col i += col i+1; then 2x2 clean-up with the Bezout relation.
            D.add_col(i, i + 1, 1);
            V.add_col(i, i + 1, 1);
            // Rows i, i+1 of D now look like [a, 0; b, b].
            Int a2 = a / g, b2 = b / g;
            for (std::size_t j = 0; j < n; ++j) {
                Int ri = D(i, j), rk = D(i + 1, j);
                D(i, j) = x * ri + y * rk;
                D(i + 1, j) = -b2 * ri + a2 * rk;
            }
            for (std::size_t j = 0; j < m; ++j) {
                Int ri = U(i, j), rk = U(i + 1, j);
                U(i, j) = x * ri + y * rk;
                U(i + 1, j) = -b2 * ri + a2 * rk;
            }
            // Clear the leftover entry y*b in column i+1 (g divides it).
            if (D(i, i + 1) != 0) {
                Int f = D(i, i + 1) / D(i, i);
                D.add_col(i + 1, i, -f);
                V.add_col(i + 1, i, -f);
            }
            check_internal(D(i, i) == g && D(i + 1, i + 1) == l && D(i, i + 1) == 0 && D(i + 1, i) == 0,
                           "snf divisibility step produced unexpected block");
            changed = true;
        }
        if (!changed)
            break;
    }

    for (std::size_t i = 0; i < t_max; ++i)
        if (D(i, i) != 0)
            r.invariant_factors.push_back(D(i, i));
    return r;
}

// Basis of {x : A x = 0} as matrix columns, in HNF-canonical form.
inline IntMatrix kernel_basis(const IntMatrix& A) {
    // Rows of U that map to zero rows in hnf(A^T) span the kernel lattice.
    HermiteResult h = hnf(A.transposed());
    const std::size_t rk = h.pivot_cols.size();
    const std::size_t n = A.cols();
    const std::size_t k = n - rk;
    std::vector<IntVec> basis_rows;
    basis_rows.reserve(k);
    for (std::size_t i = rk; i < n; ++i)
        basis_rows.push_back(h.U.row(i));
    IntMatrix B = hnf(IntMatrix::from_rows(basis_rows)).H; // canonical basis
    // Return as columns.
    IntMatrix K(n, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j)
            K(j, i) = B(i, j);
    return K;
}

inline bool is_unimodular(const IntMatrix& A) {
    return A.rows() == A.cols() && abs_int(determinant(A)) == 1;
}

} // namespace nccr
