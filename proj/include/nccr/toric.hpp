#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nccr/abelian_group.hpp"
#include "nccr/error.hpp"
#include "nccr/int_matrix.hpp"
#include "nccr/rational.hpp"

namespace nccr {

// Strongly convex rational polyhedral cone of full dimension, listed by its
// extreme rays (primitive, no duplicates).
struct ConeData {
    std::size_t dim = 0;
    std::vector<IntVec> rays;
};

// Cl(R) together with the class of each torus-invariant divisor D_i.
struct ClassGroup {
    FinAbGroup group;
    std::vector<GroupElement> ray_classes;
};

// R = S^G for a finite abelian G acting diagonally through the listed
// characters, one per coordinate, written in invariant-factor coordinates.
struct QuotientPresentation {
    FinAbGroup group;
    std::vector<GroupElement> weights;
};

inline IntVec primitive(IntVec v) {
    Int g = 0;
    for (const Int& x : v)
        g = gcd_int(g, x);
    if (g > 1)
        for (Int& x : v)
            x /= g;
    return v;
}

// Rows are the rays: the matrix of m -> (<m, v_i>)_i restricted to the
// standard basis.
inline IntMatrix pairing_matrix(const ConeData& C) {
    IntMatrix P(C.rays.size(), C.dim);
    for (std::size_t i = 0; i < C.rays.size(); ++i)
        for (std::size_t j = 0; j < C.dim; ++j)
            P(i, j) = C.rays[i][j];
    return P;
}

inline ConeData validate_cone(const std::vector<IntVec>& raw_rays, std::size_t dim) {
    require(dim >= 2, "bad_dim", "cone dimension must be at least 2");
    const std::size_t n = raw_rays.size();
    require(n >= dim, "not_full_dimensional",
            "need at least dim rays to span a full-dimensional cone");
    for (std::size_t i = 0; i < n; ++i) {
        require(raw_rays[i].size() == dim, "ray_dim_mismatch",
                "ray " + std::to_string(i) + " has wrong length", static_cast<long long>(i));
        Int g = 0;
        for (const Int& x : raw_rays[i])
            g = gcd_int(g, x);
        require(g != 0, "zero_ray", "ray " + std::to_string(i) + " is zero",
                static_cast<long long>(i));
        require(g == 1, "non_primitive_ray",
                "ray " + std::to_string(i) + " is not primitive (entry gcd " + g.str() + ")",
                static_cast<long long>(i));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            require(raw_rays[i] != raw_rays[j], "duplicate_ray",
                    "rays " + std::to_string(i) + " and " + std::to_string(j) + " coincide",
                    static_cast<long long>(j));

    ConeData C{dim, raw_rays};
    require(rank(pairing_matrix(C)) == dim, "not_full_dimensional",
            "rays do not span the ambient space");
    require(has_strictly_positive_functional(C.rays, dim), "not_strongly_convex",
            "cone contains a line");
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<IntVec> others;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i)
                others.push_back(raw_rays[j]);
        require(!in_cone_of(others, raw_rays[i]), "non_extreme_ray",
                "ray " + std::to_string(i) + " lies in the cone of the remaining rays",
                static_cast<long long>(i));
    }
    return C;
}

// Cl as the cokernel of the pairing map M -> Z^n.  Deterministic canonical
// form: the same cone always yields the same presentation.
inline ClassGroup class_group(const ConeData& C) {
    Cokernel c = cokernel(pairing_matrix(C));
    return ClassGroup{std::move(c.group), std::move(c.images)};
}

// Extreme-ray count d means exactly one ray per facet of the dual: simplicial.
inline bool is_simplicial(const ConeData& C) { return C.rays.size() == C.dim; }

// Finiteness of Cl and simpliciality are equivalent; computing both and
// cross-checking turns a bug into a hard fault instead of a wrong verdict.
inline bool cl_is_finite(const ConeData& C) {
    bool finite = class_group(C).group.free_rank == 0;
    check_internal(finite == is_simplicial(C),
                   "class-group finiteness disagrees with simpliciality");
    return finite;
}

// Integral m with <m, v_i> = 1 for every ray, if one exists.
inline std::optional<IntVec> is_gorenstein(const ConeData& C) {
    std::vector<Int> ones(C.rays.size(), Int(1));
    auto sol = solve_rational(pairing_matrix(C), ones);
    if (!sol)
        return std::nullopt;
    IntVec m(C.dim);
    for (std::size_t j = 0; j < C.dim; ++j) {
        if (denominator((*sol)[j]) != 1)
            return std::nullopt;
        m[j] = numerator((*sol)[j]);
    }
    return m;
}

// For a simplicial cone, presents Z^d / (ray lattice) as a finite abelian
// group together with the character through which each coordinate x_i
// transforms. With U * A * V = D for the column-ray matrix A, the class of
// n in Z^d has torsion coordinates (U n)_j mod d_j, and x_i pairs with the
// j-th generator through V_ij / d_j, read as the residue V_ij mod d_j under
// the fixed identification of the character group with the group itself.
inline QuotientPresentation quotient_presentation(const ConeData& C) {
    require(is_simplicial(C), "not_simplicial",
            "quotient presentation requires a simplicial cone");
    const std::size_t d = C.dim;
    IntMatrix A(d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i)
            A(i, j) = C.rays[j][i];
    SmithDecomposition s = snf(A);
    check_internal(s.invariant_factors.size() == d, "simplicial ray matrix is singular");

    QuotientPresentation out;
    std::vector<std::size_t> torsion_coords;
    for (std::size_t j = 0; j < d; ++j)
        if (s.invariant_factors[j] > 1) {
            out.group.torsion.push_back(s.invariant_factors[j]);
            torsion_coords.push_back(j);
        }
    for (std::size_t i = 0; i < d; ++i) {
        IntVec residues;
        residues.reserve(torsion_coords.size());
        for (std::size_t k = 0; k < torsion_coords.size(); ++k)
            residues.push_back(mod_reduce(s.V(i, torsion_coords[k]), out.group.torsion[k]));
        out.weights.push_back(GroupElement{{}, std::move(residues)});
    }
    return out;
}

namespace detail {

// Pairing of a group element against a character, scaled to Z/D for the
// largest invariant factor D: zero exactly when the pairing is trivial.
inline Int character_pairing(const FinAbGroup& G, const GroupElement& character,
                             const GroupElement& g) {
    if (G.torsion.empty())
        return 0;
    const Int D = G.torsion.back();
    Int acc = 0;
    for (std::size_t j = 0; j < G.torsion.size(); ++j)
        acc += character.torsion_part[j] * g.torsion_part[j] * (D / G.torsion[j]);
    return mod_reduce(acc, D);
}

} // namespace detail

// Builds a simplicial cone whose quotient presentation is (G, weights), up
// to a character-group automorphism and coordinate permutation. The ambient
// lattice is the overlattice N = Z^d + sum_j Z * (1/d_j)(w_1[j],...,w_d[j]);
// rays are the standard basis vectors rewritten in an HNF basis of N.
inline ConeData group_to_cone(const FinAbGroup& G, const std::vector<GroupElement>& weights,
                              std::vector<std::string>* warnings = nullptr) {
    require(G.is_finite(), "infinite_group", "quotient data needs a finite group");
    const std::size_t d = weights.size();
    require(d >= 2, "bad_dim", "need at least two characters");
    for (const GroupElement& w : weights)
        check_shape(G, w);

    // Joint faithfulness: only the identity may pair trivially with every
    // character. A nonidentity element pairing trivially with all but one
    // fixes a hyperplane (pseudo-reflection); surfaced as a warning only.
    for (const GroupElement& g : enumerate(G)) {
        if (is_identity(g))
            continue;
        std::size_t nontrivial = 0;
        for (const GroupElement& w : weights)
            if (detail::character_pairing(G, w, g) != 0)
                ++nontrivial;
        require(nontrivial > 0, "non_faithful_weights",
                "characters are not jointly faithful: a nonidentity element acts trivially");
        if (nontrivial == 1 && warnings) {
            std::string s = "element (";
            for (std::size_t j = 0; j < g.torsion_part.size(); ++j)
                s += (j ? "," : "") + g.torsion_part[j].str();
            s += ") acts as a pseudo-reflection (fixes a hyperplane)";
            warnings->push_back(std::move(s));
        }
    }

    const std::size_t k = G.torsion.size();
    const Int D = k == 0 ? Int(1) : G.torsion.back();
    // Generators of D*N as rows: D*e_i and, per torsion factor, the scaled
    // character column (D/d_j) * (w_1[j], ..., w_d[j]).
    std::vector<IntVec> gens;
    for (std::size_t i = 0; i < d; ++i) {
        IntVec e(d, Int(0));
        e[i] = D;
        gens.push_back(std::move(e));
    }
    for (std::size_t j = 0; j < k; ++j) {
        IntVec u(d);
        for (std::size_t i = 0; i < d; ++i)
            u[i] = weights[i].torsion_part[j] * (D / G.torsion[j]);
        gens.push_back(std::move(u));
    }
    IntMatrix H = hnf(IntMatrix::from_rows(gens)).H; // basis of D*N in rows 0..d-1
    IntMatrix B(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            B(i, j) = H(i, j);

    // Coordinates of D*e_i in the basis B are integral; the ray for e_i is
    // that coordinate vector made primitive.
    std::vector<IntVec> rays;
    IntMatrix Bt = B.transposed();
    for (std::size_t i = 0; i < d; ++i) {
        IntVec rhs(d, Int(0));
        rhs[i] = D;
        auto sol = solve_rational(Bt, rhs);
        check_internal(sol.has_value(), "overlattice basis is singular");
        IntVec coords(d);
        for (std::size_t j = 0; j < d; ++j) {
            check_internal(denominator((*sol)[j]) == 1,
                           "standard basis vector is not integral in the overlattice basis");
            coords[j] = numerator((*sol)[j]);
        }
        rays.push_back(primitive(std::move(coords)));
    }
    return validate_cone(rays, d);
}

// ---- Lattice equivalence ----------------------------------------------

// Canonical representative of the GL(d,Z)-orbit of the ray configuration:
// the lexicographically least column Hermite form over all ray orderings.
// Complete invariant for cones with at most eight rays.
inline IntMatrix cone_canonical_form(const ConeData& C) {
    const std::size_t n = C.rays.size();
    require(n <= 8, "too_many_rays", "canonical form implemented for at most 8 rays");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<IntMatrix> best;
    auto lex_less = [](const IntMatrix& a, const IntMatrix& b) {
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) {
                if (a(i, j) != b(i, j))
                    return a(i, j) < b(i, j);
            }
        return false;
    };
    do {
        IntMatrix M(n, C.dim);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < C.dim; ++j)
                M(i, j) = C.rays[perm[i]][j];
        IntMatrix col_hnf = hnf(M.transposed()).H.transposed();
        if (!best || lex_less(col_hnf, *best))
            best = std::move(col_hnf);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return *best;
}

inline bool lattice_equivalent(const ConeData& a, const ConeData& b) {
    if (a.dim != b.dim || a.rays.size() != b.rays.size())
        return false;
    return cone_canonical_form(a) == cone_canonical_form(b);
}

// Explicit witness search: a unimodular T with T * rays(a) = rays(b) as
// sets. Exponential in the ray count; used as the test oracle for the
// canonical form.
inline std::optional<IntMatrix> find_unimodular_equivalence(const ConeData& a, const ConeData& b) {
    if (a.dim != b.dim || a.rays.size() != b.rays.size())
        return std::nullopt;
    const std::size_t d = a.dim, n = a.rays.size();
    // Lexicographically first independent d-subset of a's rays.
    std::vector<std::size_t> base;
    {
        std::vector<IntVec> acc;
        for (std::size_t i = 0; i < n && base.size() < d; ++i) {
            acc.push_back(a.rays[i]);
            if (rank(IntMatrix::from_rows(acc)) == acc.size())
                base.push_back(i);
            else
                acc.pop_back();
        }
        if (base.size() < d)
            return std::nullopt;
    }
    IntMatrix R(d, d);
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t r = 0; r < d; ++r)
            R(r, c) = a.rays[base[c]][r];

    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<std::size_t> tuple(d);
    std::vector<bool> used(n, false);
    std::optional<IntMatrix> found;

    auto try_tuple = [&]() -> bool {
        IntMatrix S(d, d);
        for (std::size_t c = 0; c < d; ++c)
            for (std::size_t r = 0; r < d; ++r)
                S(r, c) = b.rays[tuple[c]][r];
        // T R = S; solve column by column over Q and demand integrality.
        IntMatrix T(d, d);
        IntMatrix Rt = R.transposed();
        for (std::size_t r = 0; r < d; ++r) {
            auto sol = solve_rational(Rt, S.row(r));
            if (!sol)
                return false;
            for (std::size_t c = 0; c < d; ++c) {
                if (denominator((*sol)[c]) != 1)
                    return false;
                T(r, c) = numerator((*sol)[c]);
            }
        }
        if (!is_unimodular(T))
            return false;
        std::set<IntVec> target(b.rays.begin(), b.rays.end());
        for (const IntVec& v : a.rays) {
            IntVec img(d, Int(0));
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c)
                    img[r] += T(r, c) * v[c];
            if (target.erase(img) == 0)
                return false;
        }
        found = T;
        return true;
    };

    // Depth-first over ordered d-tuples of distinct target rays.
    std::function<bool(std::size_t)> rec = [&](std::size_t depth) -> bool {
        if (depth == d)
            return try_tuple();
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i])
                continue;
            used[i] = true;
            tuple[depth] = i;
            if (rec(depth + 1)) {
                used[i] = false;
                return true;
            }
            used[i] = false;
        }
        return false;
    };
    rec(0);
    return found;
}

// ---- Weight-data equivalence -------------------------------------------

enum class MatchVerdict { Yes, No, Unverified };

// Are two character tuples related by a group automorphism together with a
// permutation of coordinates? Brute force over automorphisms; groups beyond
// the bound report Unverified rather than guessing.
inline MatchVerdict weights_equivalent(const FinAbGroup& G, std::vector<GroupElement> w1,
                                       std::vector<GroupElement> w2, Int max_order = 200) {
    if (w1.size() != w2.size())
        return MatchVerdict::No;
    for (const auto& w : w1)
        check_shape(G, w);
    for (const auto& w : w2)
        check_shape(G, w);
    if (!G.is_finite() || G.order() > max_order)
        return MatchVerdict::Unverified;

    auto elems = enumerate(G);
    const std::size_t k = G.torsion.size();
    std::sort(w2.begin(), w2.end());

    // Candidate images per generator: elements killed by d_j.
    std::vector<std::vector<GroupElement>> candidates(k);
    for (std::size_t j = 0; j < k; ++j)
        for (const auto& g : elems) {
            bool killed = true;
            for (std::size_t t = 0; t < k; ++t)
                if (mod_reduce(G.torsion[j] * g.torsion_part[t], G.torsion[t]) != 0) {
                    killed = false;
                    break;
                }
            if (killed)
                candidates[j].push_back(g);
        }
    double total = 1;
    for (std::size_t j = 0; j < k; ++j)
        total *= static_cast<double>(candidates[j].size());
    if (total > 2e6)
        return MatchVerdict::Unverified;

    std::vector<GroupElement> images(k, identity_element(G));
    std::function<bool(std::size_t)> rec = [&](std::size_t j) -> bool {
        if (j == k) {
            // Bijectivity check, then compare the transported tuple.
            std::set<GroupElement> seen;
            for (const auto& g : elems) {
                GroupElement img = identity_element(G);
                for (std::size_t t = 0; t < k; ++t) {
                    GroupElement scaled = images[t];
                    for (std::size_t c = 0; c < k; ++c)
                        scaled.torsion_part[c] =
                            mod_reduce(scaled.torsion_part[c] * g.torsion_part[t], G.torsion[c]);
                    img = elem_add(G, img, scaled);
                }
                if (!seen.insert(img).second)
                    return false;
            }
            std::vector<GroupElement> mapped;
            for (const auto& w : w1) {
                GroupElement img = identity_element(G);
                for (std::size_t t = 0; t < k; ++t) {
                    GroupElement scaled = images[t];
                    for (std::size_t c = 0; c < k; ++c)
                        scaled.torsion_part[c] =
                            mod_reduce(scaled.torsion_part[c] * w.torsion_part[t], G.torsion[c]);
                    img = elem_add(G, img, scaled);
                }
                mapped.push_back(img);
            }
            std::sort(mapped.begin(), mapped.end());
            return mapped == w2;
        }
        for (const auto& cand : candidates[j]) {
            images[j] = cand;
            if (rec(j + 1))
                return true;
        }
        return false;
    };
    if (k == 0)
        return w1.size() == w2.size() ? MatchVerdict::Yes : MatchVerdict::No;
    return rec(0) ? MatchVerdict::Yes : MatchVerdict::No;
}

} // namespace nccr
