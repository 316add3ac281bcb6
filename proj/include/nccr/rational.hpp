#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "nccr/error.hpp"
#include "nccr/int_matrix.hpp"

namespace nccr {

using Rat = boost::multiprecision::cpp_rational;
using RatVec = std::vector<Rat>;

inline Rat rat(const Int& a) { return Rat(a); }

// Solves M x = b exactly over the rationals. Returns one solution if the
// system is consistent (the solution is unique when M has full column rank).
inline std::optional<RatVec> solve_rational(const IntMatrix& M, const std::vector<Int>& b) {
    const std::size_t m = M.rows(), n = M.cols();
    require(b.size() == m, "matrix_shape", "rhs length mismatch");
    std::vector<RatVec> a(m, RatVec(n + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = rat(M(i, j));
        a[i][n] = rat(b[i]);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && a[piv][col] == 0)
            ++piv;
        if (piv == m)
            continue;
        std::swap(a[row], a[piv]);
        Rat p = a[row][col];
        for (std::size_t j = col; j <= n; ++j)
            a[row][j] /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || a[i][col] == 0)
                continue;
            Rat f = a[i][col];
            for (std::size_t j = col; j <= n; ++j)
                a[i][j] -= f * a[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < m; ++i)
        if (a[i][n] != 0)
            return std::nullopt;
    RatVec x(n, Rat(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        x[pivot_col[i]] = a[i][n];
    return x;
}

// One linear constraint sum_j coeff[j] x_j + constant >= 0.
struct LinIneq {
    RatVec coeff;
    Rat constant;
};

namespace detail {

inline void normalize_ineq(LinIneq& q) {
    Int num_gcd = 0, den_lcm = 1;
    auto fold = [&](const Rat& r) {
        num_gcd = gcd_int(num_gcd, numerator(r));
        if (r != 0)
            den_lcm = den_lcm / gcd_int(den_lcm, denominator(r)) * denominator(r);
    };
    for (const Rat& c : q.coeff)
        fold(c);
    fold(q.constant);
    if (num_gcd == 0)
        return;
    Rat scale = Rat(den_lcm, num_gcd);
    for (Rat& c : q.coeff)
        c *= scale;
    q.constant *= scale;
}

} // namespace detail

// Exact Fourier-Motzkin feasibility for a system of >= 0 constraints.
// Desk scale only: meant for a handful of variables.
inline bool fm_feasible(std::vector<LinIneq> system, std::size_t num_vars) {
    for (std::size_t var = num_vars; var-- > 0;) {
        std::vector<LinIneq> lower, upper, rest;
        for (LinIneq& q : system) {
            if (q.coeff[var] > 0)
                lower.push_back(std::move(q));
            else if (q.coeff[var] < 0)
                upper.push_back(std::move(q));
            else
                rest.push_back(std::move(q));
        }
        for (const LinIneq& lo : lower)
            for (const LinIneq& up : upper) {
                // Combine so the variable cancels; preserves feasibility.
                LinIneq c;
                c.coeff.assign(var, Rat(0));
                Rat a = lo.coeff[var], b = -up.coeff[var];
                for (std::size_t j = 0; j < var; ++j)
                    c.coeff[j] = b * lo.coeff[j] + a * up.coeff[j];
                c.constant = b * lo.constant + a * up.constant;
                detail::normalize_ineq(c);
                rest.push_back(std::move(c));
            }
        for (LinIneq& q : rest)
            q.coeff.resize(var);
        // Deduplicate to fight the usual FM blowup.
        std::sort(rest.begin(), rest.end(), [](const LinIneq& x, const LinIneq& y) {
            if (x.coeff != y.coeff)
                return x.coeff < y.coeff;
            return x.constant < y.constant;
        });
        rest.erase(std::unique(rest.begin(), rest.end(),
                               [](const LinIneq& x, const LinIneq& y) {
                                   return x.coeff == y.coeff && x.constant == y.constant;
                               }),
                   rest.end());
        system = std::move(rest);
    }
    for (const LinIneq& q : system)
        if (q.constant < 0)
            return false;
    return true;
}

// Is v in the cone generated by gens (nonnegative rational combinations)?
// Decided through the Farkas dual: v lies outside exactly when a functional
// separates it, nonnegative on every generator and <= -1 on v. That keeps
// the elimination in the ambient dimension rather than in the generator
// count.
inline bool in_cone_of(const std::vector<IntVec>& gens, const IntVec& v) {
    const std::size_t d = v.size();
    std::vector<LinIneq> sys;
    for (const IntVec& g : gens) {
        LinIneq q;
        q.coeff.assign(d, Rat(0));
        for (std::size_t j = 0; j < d; ++j)
            q.coeff[j] = rat(g[j]);
        q.constant = 0;
        sys.push_back(std::move(q));
    }
    LinIneq sep;
    sep.coeff.assign(d, Rat(0));
    for (std::size_t j = 0; j < d; ++j)
        sep.coeff[j] = -rat(v[j]);
    sep.constant = -1;
    sys.push_back(std::move(sep));
    return !fm_feasible(std::move(sys), d);
}

// Does a functional m exist with <m, g> >= 1 for all generators? True
// exactly when the cone they generate is strongly convex.
inline bool has_strictly_positive_functional(const std::vector<IntVec>& gens, std::size_t dim) {
    std::vector<LinIneq> sys;
    for (const IntVec& g : gens) {
        LinIneq q;
        q.coeff.assign(dim, Rat(0));
        for (std::size_t j = 0; j < dim; ++j)
            q.coeff[j] = rat(g[j]);
        q.constant = -1;
        sys.push_back(std::move(q));
    }
    return fm_feasible(std::move(sys), dim);
}

} // namespace nccr
