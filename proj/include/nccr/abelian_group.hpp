#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nccr/error.hpp"
#include "nccr/int_matrix.hpp"

namespace nccr {

// Finitely generated abelian group in invariant-factor form:
// Z^free_rank + Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... and every d_i >= 2.
struct FinAbGroup {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    bool is_finite() const { return free_rank == 0; }

    Int order() const {
        require(is_finite(), "infinite_group", "order of an infinite group");
        Int n = 1;
        for (const Int& d : torsion)
            n *= d;
        return n;
    }

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

    bool operator==(const FinAbGroup& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
    bool operator!=(const FinAbGroup& o) const { return !(*this == o); }
};

// Element of a FinAbGroup. Plain data, no back-reference to the group;
// every operation takes the group explicitly and validates shape.
struct GroupElement {
    IntVec free_part;    // length = free_rank
    IntVec torsion_part; // residues, stored reduced into [0, d_i)

    bool operator==(const GroupElement& o) const {
        return free_part == o.free_part && torsion_part == o.torsion_part;
    }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }
    bool operator<(const GroupElement& o) const {
        if (free_part != o.free_part)
            return free_part < o.free_part;
        return torsion_part < o.torsion_part;
    }
};

inline Int mod_reduce(const Int& a, const Int& d) {
    Int r = a % d;
    if (r < 0)
        r += d;
    return r;
}

inline void check_shape(const FinAbGroup& G, const GroupElement& a) {
    require(a.free_part.size() == G.free_rank && a.torsion_part.size() == G.torsion.size(),
            "shape_mismatch", "element shape does not match group");
    for (std::size_t i = 0; i < G.torsion.size(); ++i)
        require(a.torsion_part[i] >= 0 && a.torsion_part[i] < G.torsion[i], "shape_mismatch",
                "torsion residue out of range", static_cast<long long>(i));
}

inline GroupElement identity_element(const FinAbGroup& G) {
    return GroupElement{IntVec(G.free_rank, Int(0)), IntVec(G.torsion.size(), Int(0))};
}

// Builds an element from arbitrary integer coordinates, reducing residues.
inline GroupElement make_element(const FinAbGroup& G, IntVec free_part, IntVec torsion_part) {
    require(free_part.size() == G.free_rank && torsion_part.size() == G.torsion.size(),
            "shape_mismatch", "coordinate count does not match group");
    for (std::size_t i = 0; i < torsion_part.size(); ++i)
        torsion_part[i] = mod_reduce(torsion_part[i], G.torsion[i]);
    return GroupElement{std::move(free_part), std::move(torsion_part)};
}

inline GroupElement elem_add(const FinAbGroup& G, const GroupElement& a, const GroupElement& b) {
    check_shape(G, a);
    check_shape(G, b);
    GroupElement c = a;
    for (std::size_t i = 0; i < G.free_rank; ++i)
        c.free_part[i] += b.free_part[i];
    for (std::size_t i = 0; i < G.torsion.size(); ++i)
        c.torsion_part[i] = mod_reduce(c.torsion_part[i] + b.torsion_part[i], G.torsion[i]);
    return c;
}

inline GroupElement elem_neg(const FinAbGroup& G, const GroupElement& a) {
    check_shape(G, a);
    GroupElement c = a;
    for (std::size_t i = 0; i < G.free_rank; ++i)
        c.free_part[i] = -c.free_part[i];
    for (std::size_t i = 0; i < G.torsion.size(); ++i)
        c.torsion_part[i] = mod_reduce(-c.torsion_part[i], G.torsion[i]);
    return c;
}

inline GroupElement elem_sub(const FinAbGroup& G, const GroupElement& a, const GroupElement& b) {
    return elem_add(G, a, elem_neg(G, b));
}

inline bool is_identity(const GroupElement& a) {
    for (const Int& x : a.free_part)
        if (x != 0)
            return false;
    for (const Int& x : a.torsion_part)
        if (x != 0)
            return false;
    return true;
}

constexpr std::int64_t kDefaultEnumerationBound = 1000000;

// All |G| elements in lexicographic order of their residue tuples.
inline std::vector<GroupElement> enumerate(const FinAbGroup& G,
                                           std::int64_t max_order = kDefaultEnumerationBound) {
    require(G.is_finite(), "infinite_group", "cannot enumerate an infinite group");
    require(G.order() <= max_order, "enumeration_bound",
            "group order exceeds the enumeration bound of " + std::to_string(max_order));
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(G.order()));
    const std::size_t k = G.torsion.size();
    IntVec cur(k, Int(0));
    for (;;) {
        out.push_back(GroupElement{{}, cur});
        std::size_t i = k;
        while (i > 0) {
            --i;
            cur[i] += 1;
            if (cur[i] < G.torsion[i])
                break;
            cur[i] = 0;
            if (i == 0)
                return out;
        }
        if (k == 0)
            return out;
    }
}

// Smallest subgroup containing S: closure of {0} under +-generators.
inline std::set<GroupElement> subgroup_generated(const FinAbGroup& G,
                                                 const std::set<GroupElement>& S,
                                                 std::int64_t max_order = kDefaultEnumerationBound) {
    require(G.is_finite(), "infinite_group", "subgroup closure needs a finite group");
    require(G.order() <= max_order, "enumeration_bound",
            "group order exceeds the enumeration bound of " + std::to_string(max_order));
    for (const GroupElement& s : S)
        check_shape(G, s);
    std::set<GroupElement> closure;
    std::vector<GroupElement> work;
    GroupElement id = identity_element(G);
    closure.insert(id);
    work.push_back(id);
    while (!work.empty()) {
        GroupElement x = work.back();
        work.pop_back();
        for (const GroupElement& s : S) {
            for (int sign = 0; sign < 2; ++sign) {
                GroupElement y = sign ? elem_sub(G, x, s) : elem_add(G, x, s);
                if (closure.insert(y).second)
                    work.push_back(y);
            }
        }
    }
    return closure;
}

// A module decomposes over a nonempty class set, so M = {} is an error
// distinct from "not a subgroup".
inline bool is_subgroup(const FinAbGroup& G, const std::set<GroupElement>& M) {
    require(G.is_finite(), "infinite_group", "subgroup test needs a finite group");
    require(!M.empty(), "empty_class_set", "class set must be nonempty");
    for (const GroupElement& a : M)
        check_shape(G, a);
    if (M.find(identity_element(G)) == M.end())
        return false;
    for (const GroupElement& a : M)
        for (const GroupElement& b : M)
            if (M.find(elem_sub(G, a, b)) == M.end())
                return false;
    return true;
}

// Canonical invariant-factor form of Z^free_rank + sum Z/t_i for arbitrary
// t_i >= 1: drops 1s and enforces the divisibility chain.
inline FinAbGroup iso_invariants(std::size_t free_rank, const std::vector<Int>& torsion) {
    for (std::size_t i = 0; i < torsion.size(); ++i)
        require(torsion[i] >= 1, "bad_torsion", "torsion entries must be >= 1",
                static_cast<long long>(i));
    IntMatrix diag(torsion.size(), torsion.size());
    for (std::size_t i = 0; i < torsion.size(); ++i)
        diag(i, i) = torsion[i];
    SmithDecomposition s = snf(diag);
    FinAbGroup G;
    G.free_rank = free_rank;
    for (const Int& d : s.invariant_factors)
        if (d > 1)
            G.torsion.push_back(d);
    return G;
}

// Cokernel Z^rows / (column lattice of A) together with the classes of the
// standard basis vectors e_i. This is the shape of every class-group
// computation downstream.
struct Cokernel {
    FinAbGroup group;
    std::vector<GroupElement> images;
};

inline Cokernel cokernel(const IntMatrix& A) {
    const std::size_t m = A.rows();
    SmithDecomposition s = snf(A);
    const std::size_t r = s.invariant_factors.size();

    Cokernel out;
    out.group.free_rank = m - r;
    std::vector<std::size_t> torsion_coords; // indices i with d_i > 1
    for (std::size_t i = 0; i < r; ++i)
        if (s.invariant_factors[i] > 1) {
            out.group.torsion.push_back(s.invariant_factors[i]);
            torsion_coords.push_back(i);
        }

    // In U-coordinates the column lattice is diagonal, so the class of e_j
    // reads off column j of U.
    out.images.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        IntVec free_part, torsion_part;
        free_part.reserve(m - r);
        torsion_part.reserve(torsion_coords.size());
        for (std::size_t i : torsion_coords)
            torsion_part.push_back(mod_reduce(s.U(i, j), out.group.torsion[torsion_part.size()]));
        for (std::size_t i = r; i < m; ++i)
            free_part.push_back(s.U(i, j));
        out.images.push_back(GroupElement{std::move(free_part), std::move(torsion_part)});
    }
    return out;
}

} // namespace nccr
