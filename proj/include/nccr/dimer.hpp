#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nccr/abelian_group.hpp"
#include "nccr/error.hpp"
#include "nccr/polygon.hpp"
#include "nccr/toric.hpp"

namespace nccr {

enum class Color { Black, White };

// Raw dimer data as read from a file: a bipartite graph on the two-torus
// with deck-translation shifts (black copy -> white copy) and a
// counterclockwise rotation system.
struct RawDimerVertex {
    long long id;
    Color color;
};

struct RawDimerEdge {
    long long id;
    long long black;
    long long white;
    Pt shift;
};

struct RawDimer {
    std::vector<RawDimerVertex> vertices;
    std::vector<RawDimerEdge> edges;
    std::map<long long, std::vector<long long>> rotations;
};

// Validated model with face tracing cached. Darts are directed edge sides:
// dart 2e is edge e traversed black -> white, dart 2e+1 the reverse.
struct DimerModel {
    std::vector<long long> vertex_ids;
    std::vector<Color> colors;
    std::vector<long long> edge_ids;
    std::vector<int> edge_black; // vertex index
    std::vector<int> edge_white;
    std::vector<Pt> shifts;
    std::vector<std::vector<int>> rotation; // per vertex, incident edge indices ccw

    std::vector<std::vector<int>> faces; // dart cycles, each face once
    std::vector<int> dart_face;

    std::size_t num_vertices() const { return vertex_ids.size(); }
    std::size_t num_edges() const { return edge_ids.size(); }
    std::size_t num_faces() const { return faces.size(); }

    int dart_head(int dart) const {
        int e = dart / 2;
        return (dart % 2 == 0) ? edge_white[e] : edge_black[e];
    }
    int dart_tail(int dart) const {
        int e = dart / 2;
        return (dart % 2 == 0) ? edge_black[e] : edge_white[e];
    }
    // Homology contribution of traversing the dart.
    Pt dart_shift(int dart) const {
        int e = dart / 2;
        return (dart % 2 == 0) ? shifts[e] : Pt{-shifts[e][0], -shifts[e][1]};
    }
    int dart_away_from(int vertex, int e) const {
        return colors[vertex] == Color::Black ? 2 * e : 2 * e + 1;
    }
};

namespace detail {

// Position of edge e in the rotation list of vertex v.
inline std::size_t rotation_pos(const DimerModel& m, int v, int e) {
    const auto& rot = m.rotation[v];
    for (std::size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == e)
            return i;
    throw internal_error("edge missing from rotation list");
}

// Face tracing successor: arrive at v, leave along the clockwise-next edge
// (the predecessor in the counterclockwise list). Traces each face once,
// counterclockwise.
inline int face_next(const DimerModel& m, int dart) {
    int v = m.dart_head(dart);
    int e = dart / 2;
    const auto& rot = m.rotation[v];
    std::size_t p = rotation_pos(m, v, e);
    int e2 = rot[(p + rot.size() - 1) % rot.size()];
    return m.dart_away_from(v, e2);
}

// Zigzag successor: into a white vertex turn clockwise, into a black vertex
// counterclockwise.
inline int zigzag_next(const DimerModel& m, int dart) {
    int v = m.dart_head(dart);
    int e = dart / 2;
    const auto& rot = m.rotation[v];
    std::size_t p = rotation_pos(m, v, e);
    int e2 = m.colors[v] == Color::White ? rot[(p + rot.size() - 1) % rot.size()]
                                         : rot[(p + 1) % rot.size()];
    return m.dart_away_from(v, e2);
}

} // namespace detail

inline DimerModel validate_dimer(const RawDimer& raw) {
    DimerModel m;
    std::map<long long, int> vindex;
    for (const auto& v : raw.vertices) {
        require(vindex.emplace(v.id, static_cast<int>(m.vertex_ids.size())).second,
                "duplicate_vertex_id", "vertex id " + std::to_string(v.id) + " repeats", v.id);
        m.vertex_ids.push_back(v.id);
        m.colors.push_back(v.color);
    }
    require(!raw.vertices.empty(), "empty_dimer", "dimer model has no vertices");

    std::map<long long, int> eindex;
    std::vector<std::vector<int>> incident(m.num_vertices());
    for (const auto& e : raw.edges) {
        require(eindex.emplace(e.id, static_cast<int>(m.edge_ids.size())).second,
                "duplicate_edge_id", "edge id " + std::to_string(e.id) + " repeats", e.id);
        auto bi = vindex.find(e.black);
        auto wi = vindex.find(e.white);
        require(bi != vindex.end() && wi != vindex.end(), "unknown_vertex",
                "edge " + std::to_string(e.id) + " references an unknown vertex", e.id);
        require(m.colors[bi->second] == Color::Black && m.colors[wi->second] == Color::White,
                "non_bipartite_edge",
                "edge " + std::to_string(e.id) + " must join a black vertex to a white vertex",
                e.id);
        int idx = static_cast<int>(m.edge_ids.size());
        m.edge_ids.push_back(e.id);
        m.edge_black.push_back(bi->second);
        m.edge_white.push_back(wi->second);
        m.shifts.push_back(e.shift);
        incident[bi->second].push_back(idx);
        incident[wi->second].push_back(idx);
    }

    for (std::size_t v = 0; v < m.num_vertices(); ++v)
        require(incident[v].size() >= 2, "degree_too_small",
                "vertex " + std::to_string(m.vertex_ids[v]) + " has degree < 2",
                m.vertex_ids[v]);

    // Rotation lists: exactly the incident edges, each once, in ccw order.
    m.rotation.assign(m.num_vertices(), {});
    for (std::size_t v = 0; v < m.num_vertices(); ++v) {
        auto it = raw.rotations.find(m.vertex_ids[v]);
        require(it != raw.rotations.end(), "rotation_inconsistent",
                "missing rotation list for vertex " + std::to_string(m.vertex_ids[v]),
                m.vertex_ids[v]);
        std::vector<int> rot;
        for (long long eid : it->second) {
            auto e = eindex.find(eid);
            require(e != eindex.end(), "rotation_inconsistent",
                    "rotation of vertex " + std::to_string(m.vertex_ids[v]) +
                        " names unknown edge " + std::to_string(eid),
                    m.vertex_ids[v]);
            rot.push_back(e->second);
        }
        std::vector<int> a = rot, b = incident[v];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        require(a == b && std::adjacent_find(a.begin(), a.end()) == a.end(),
                "rotation_inconsistent",
                "rotation of vertex " + std::to_string(m.vertex_ids[v]) +
                    " is not a permutation of its incident edges",
                m.vertex_ids[v]);
        m.rotation[v] = std::move(rot);
    }
    require(raw.rotations.size() == m.num_vertices(), "rotation_inconsistent",
            "rotation table lists unknown vertices");

    // Connectivity.
    {
        std::vector<char> seen(m.num_vertices(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : incident[v]) {
                int u = m.edge_black[e] == v ? m.edge_white[e] : m.edge_black[e];
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        for (std::size_t v = 0; v < m.num_vertices(); ++v)
            require(seen[v], "disconnected", "graph is not connected");
    }

    // Face tracing and the torus checks.
    const std::size_t num_darts = 2 * m.num_edges();
    m.dart_face.assign(num_darts, -1);
    for (std::size_t d0 = 0; d0 < num_darts; ++d0) {
        if (m.dart_face[d0] != -1)
            continue;
        int f = static_cast<int>(m.faces.size());
        std::vector<int> cycle;
        int d = static_cast<int>(d0);
        do {
            check_internal(m.dart_face[d] == -1, "face tracing revisited a dart");
            m.dart_face[d] = f;
            cycle.push_back(d);
            d = detail::face_next(m, d);
        } while (d != static_cast<int>(d0));
        m.faces.push_back(std::move(cycle));
    }
    long long euler = static_cast<long long>(m.num_vertices()) -
                      static_cast<long long>(m.num_edges()) +
                      static_cast<long long>(m.num_faces());
    require(euler == 0, "euler_characteristic",
            "rotation system describes a surface of Euler characteristic " +
                std::to_string(euler) + ", not a torus");

    // Every face must close up in the universal cover.
    for (const auto& face : m.faces) {
        Pt total{0, 0};
        for (int d : face)
            total = total + m.dart_shift(d);
        require(total == Pt{0, 0}, "face_not_closed",
                "a face boundary does not close on the torus (net shift " +
                    std::to_string(total[0]) + "," + std::to_string(total[1]) + ")");
    }

    // The shifts must mark the torus itself: cycle classes span Z^2.
    {
        std::vector<char> seen(m.num_vertices(), 0);
        std::vector<Pt> potential(m.num_vertices(), Pt{0, 0});
        std::vector<char> in_tree(m.num_edges(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : incident[v]) {
                int u = m.edge_black[e] == v ? m.edge_white[e] : m.edge_black[e];
                if (seen[u])
                    continue;
                seen[u] = 1;
                in_tree[e] = 1;
                potential[u] = m.colors[v] == Color::Black ? potential[v] + m.shifts[e]
                                                           : potential[v] - m.shifts[e];
                stack.push_back(u);
            }
        }
        std::vector<IntVec> classes;
        for (std::size_t e = 0; e < m.num_edges(); ++e) {
            if (in_tree[e])
                continue;
            Pt c = potential[m.edge_black[e]] + m.shifts[e] - potential[m.edge_white[e]];
            classes.push_back(IntVec{Int(c[0]), Int(c[1])});
        }
        // The cycle classes must span all of Z^2, not a finite-index sublattice.
        bool unimodular_marking = false;
        if (classes.size() >= 2) {
            auto s = snf(IntMatrix::from_rows(classes));
            unimodular_marking = s.invariant_factors.size() == 2 &&
                                 s.invariant_factors[0] == 1 && s.invariant_factors[1] == 1;
        }
        require(unimodular_marking, "degenerate_shift_marking",
                "edge shifts do not identify the surface with the torus "
                "(cycle classes do not span Z^2)");
    }
    return m;
}

// ---- Perfect matchings ---------------------------------------------------

struct PerfectMatching {
    std::vector<int> edges; // internal edge indices, sorted
    Pt hclass;              // relative to the first matching found
};

constexpr std::size_t kDefaultMatchingEdgeBound = 64;

// Exhaustive backtracking over black vertices in index order, candidate
// edges in index order: the output order is deterministic and the first
// matching found serves as the homology reference M0.
inline std::vector<PerfectMatching> perfect_matchings(
    const DimerModel& m, std::size_t max_edges = kDefaultMatchingEdgeBound) {
    require(m.num_edges() <= max_edges,
            "matching_bound", "model has " + std::to_string(m.num_edges()) +
                                  " edges, above the enumeration bound of " +
                                  std::to_string(max_edges));
    std::vector<int> blacks, white_of;
    std::vector<std::vector<int>> candidates;
    for (std::size_t v = 0; v < m.num_vertices(); ++v)
        if (m.colors[v] == Color::Black)
            blacks.push_back(static_cast<int>(v));
    candidates.resize(blacks.size());
    for (std::size_t i = 0; i < blacks.size(); ++i)
        for (std::size_t e = 0; e < m.num_edges(); ++e)
            if (m.edge_black[e] == blacks[i])
                candidates[i].push_back(static_cast<int>(e));

    std::vector<char> white_used(m.num_vertices(), 0);
    std::vector<int> chosen;
    std::vector<PerfectMatching> out;

    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == blacks.size()) {
            PerfectMatching pm;
            pm.edges = chosen;
            std::sort(pm.edges.begin(), pm.edges.end());
            pm.hclass = {0, 0};
            for (int e : pm.edges)
                pm.hclass = pm.hclass + m.shifts[e];
            out.push_back(std::move(pm));
            return;
        }
        for (int e : candidates[i]) {
            int w = m.edge_white[e];
            if (white_used[w])
                continue;
            white_used[w] = 1;
            chosen.push_back(e);
            rec(i + 1);
            chosen.pop_back();
            white_used[w] = 0;
        }
    };
    rec(0);
    require(!out.empty(), "no_perfect_matching", "model admits no perfect matching");
    Pt ref = out[0].hclass;
    for (auto& pm : out)
        pm.hclass = pm.hclass - ref;
    return out;
}

inline LatticePolygon toric_polygon(const DimerModel& m,
                                    std::size_t max_edges = kDefaultMatchingEdgeBound) {
    std::map<Pt, std::int64_t> pts;
    for (const auto& pm : perfect_matchings(m, max_edges))
        pts[pm.hclass] += 1;
    return make_polygon(pts);
}

// Cone over the polygon placed at height one.
inline ConeData polygon_to_cone(const LatticePolygon& p) {
    require(p.hull.size() >= 3, "degenerate_hull",
            "polygon hull is not two-dimensional");
    std::vector<IntVec> rays;
    for (const Pt& v : p.hull) {
        IntVec r;
        r.emplace_back(v[0]);
        r.emplace_back(v[1]);
        r.emplace_back(1);
        rays.push_back(std::move(r));
    }
    return validate_cone(rays, 3);
}

// ---- Zigzag paths and consistency ----------------------------------------

struct ZigzagPath {
    std::vector<int> darts; // traversal order, starting at the least dart
    Pt hclass;
};

inline std::vector<ZigzagPath> zigzag_paths(const DimerModel& m) {
    const std::size_t num_darts = 2 * m.num_edges();
    std::vector<char> seen(num_darts, 0);
    std::vector<ZigzagPath> out;
    for (std::size_t d0 = 0; d0 < num_darts; ++d0) {
        if (seen[d0])
            continue;
        ZigzagPath z;
        z.hclass = {0, 0};
        int d = static_cast<int>(d0);
        do {
            check_internal(!seen[d], "zigzag orbits are not disjoint");
            seen[d] = 1;
            z.darts.push_back(d);
            z.hclass = z.hclass + m.dart_shift(d);
            d = detail::zigzag_next(m, d);
        } while (d != static_cast<int>(d0));
        out.push_back(std::move(z));
    }
    return out;
}

struct ConsistencyFailure {
    std::string kind; // trivial_zigzag | self_intersection | double_crossing
    std::vector<std::size_t> zigzags; // indices into zigzag_paths(m)
    std::vector<long long> edge_ids;
};

struct ConsistencyReport {
    bool consistent = false;
    std::int64_t window_radius = 0; // 2 + max |hclass|_inf, recorded for audit
    std::vector<ZigzagPath> zigzags;
    std::optional<ConsistencyFailure> failure;
};

namespace detail {

// Cover-edge occurrences of a zigzag: edge index plus the translate of the
// edge instance the path traverses, accumulated from the start of the cycle.
struct ZigzagOccurrences {
    std::vector<int> edges;
    std::vector<Pt> translates;
};

inline ZigzagOccurrences zigzag_occurrences(const DimerModel& m, const ZigzagPath& z) {
    ZigzagOccurrences occ;
    Pt pos{0, 0};
    for (int d : z.darts) {
        int e = d / 2;
        occ.edges.push_back(e);
        occ.translates.push_back(d % 2 == 0 ? pos : pos - m.shifts[e]);
        pos = pos + m.dart_shift(d);
    }
    return occ;
}

inline bool multiple_of(Pt delta, Pt h) {
    // delta == k * h for an integer k?
    if (h == Pt{0, 0})
        return delta == Pt{0, 0};
    if (delta == Pt{0, 0})
        return true;
    if (delta[0] * h[1] != delta[1] * h[0])
        return false;
    if (h[0] != 0)
        return delta[0] % h[0] == 0;
    return delta[1] % h[1] == 0;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t d) {
    std::int64_t r = a % d;
    return r < 0 ? r + d : r;
}

} // namespace detail

// Zigzag consistency: (i) no homologically trivial zigzag, (ii) no zigzag
// self-intersects in the universal cover, (iii) no two distinct lifts of
// zigzags share more than one crossing. A crossing is a transversally
// shared cover edge: lifts of independent classes cross wherever they share
// an edge, same-direction parallel lifts may not share edges at all, and
// opposite-direction lifts touching along an edge do not cross. Lifts are
// periodic, so pairs are compared by residue classes of their instance
// translates, which covers every deck translate at once.
inline ConsistencyReport is_consistent(const DimerModel& m) {
    ConsistencyReport rep;
    rep.zigzags = zigzag_paths(m);

    for (const auto& z : rep.zigzags) {
        std::int64_t w = std::max(std::abs(z.hclass[0]), std::abs(z.hclass[1]));
        rep.window_radius = std::max(rep.window_radius, 2 + w);
    }

    auto fail = [&](std::string kind, std::vector<std::size_t> zz, std::vector<int> edges) {
        ConsistencyFailure f;
        f.kind = std::move(kind);
        f.zigzags = std::move(zz);
        std::set<long long> ids;
        for (int e : edges)
            ids.insert(m.edge_ids[e]);
        f.edge_ids.assign(ids.begin(), ids.end());
        rep.failure = std::move(f);
        rep.consistent = false;
    };

    // (i)
    for (std::size_t i = 0; i < rep.zigzags.size(); ++i)
        if (rep.zigzags[i].hclass == Pt{0, 0}) {
            std::vector<int> edges;
            for (int d : rep.zigzags[i].darts)
                edges.push_back(d / 2);
            fail("trivial_zigzag", {i}, std::move(edges));
            return rep;
        }

    std::vector<detail::ZigzagOccurrences> occs;
    occs.reserve(rep.zigzags.size());
    for (const auto& z : rep.zigzags)
        occs.push_back(detail::zigzag_occurrences(m, z));

    // (ii) and the parallel part of (iii) within one zigzag: a repeated
    // underlying edge either repeats a cover edge (self-intersection) or is
    // shared between two parallel lifts, which then overlap periodically.
    for (std::size_t i = 0; i < rep.zigzags.size(); ++i) {
        const auto& o = occs[i];
        for (std::size_t a = 0; a < o.edges.size(); ++a)
            for (std::size_t b = a + 1; b < o.edges.size(); ++b) {
                if (o.edges[a] != o.edges[b])
                    continue;
                Pt delta = o.translates[a] - o.translates[b];
                if (detail::multiple_of(delta, rep.zigzags[i].hclass))
                    fail("self_intersection", {i}, {o.edges[a]});
                else
                    fail("double_crossing", {i, i}, {o.edges[a]});
                return rep;
            }
    }

    // (iii) across distinct zigzags.
    for (std::size_t i = 0; i < rep.zigzags.size(); ++i)
        for (std::size_t j = i + 1; j < rep.zigzags.size(); ++j) {
            Pt h = rep.zigzags[i].hclass, g = rep.zigzags[j].hclass;
            std::int64_t det = h[0] * g[1] - h[1] * g[0];
            if (det == 0) {
                // Same-direction lifts sharing an edge overlap in the same
                // order along the whole period: a doubled crossing. Lifts of
                // opposite direction pass shared edges in reversed order, a
                // tangency rather than a crossing, and stay admissible.
                bool same_direction = h[0] * g[0] + h[1] * g[1] > 0;
                if (!same_direction)
                    continue;
                for (std::size_t a = 0; a < occs[i].edges.size(); ++a)
                    for (std::size_t b = 0; b < occs[j].edges.size(); ++b)
                        if (occs[i].edges[a] == occs[j].edges[b]) {
                            fail("double_crossing", {i, j}, {occs[i].edges[a]});
                            return rep;
                        }
                continue;
            }
            // Independent classes: residues of translate differences modulo
            // the lattice spanned by (h, g); two pairs in one class cross
            // the same pair of lifts twice.
            std::map<std::pair<std::int64_t, std::int64_t>, std::pair<int, int>> seen;
            std::int64_t D = std::abs(det);
            for (std::size_t a = 0; a < occs[i].edges.size(); ++a)
                for (std::size_t b = 0; b < occs[j].edges.size(); ++b) {
                    if (occs[i].edges[a] != occs[j].edges[b])
                        continue;
                    Pt delta = occs[i].translates[a] - occs[j].translates[b];
                    // Coordinates of delta in the (h, g) frame, times det.
                    std::int64_t alpha = delta[0] * g[1] - delta[1] * g[0];
                    std::int64_t beta = h[0] * delta[1] - h[1] * delta[0];
                    auto key = std::make_pair(detail::floor_mod(alpha, D),
                                              detail::floor_mod(beta, D));
                    auto [it, inserted] = seen.emplace(key, std::make_pair(static_cast<int>(a),
                                                                           static_cast<int>(b)));
                    if (!inserted) {
                        fail("double_crossing", {i, j},
                             {occs[i].edges[a], occs[i].edges[it->second.first]});
                        return rep;
                    }
                }
        }

    rep.consistent = true;
    return rep;
}

inline bool all_faces_hexagonal(const DimerModel& m) {
    for (const auto& f : m.faces)
        if (f.size() != 6)
            return false;
    return true;
}

// ---- Hexagonal dimer generator -------------------------------------------

// Quotient of the honeycomb tiling by the kernel of the cell-labelling map
// (i,j) -> i*w1 - j*w2. Faces are labelled by G; the dual quiver has arrow
// families g -> g + w1, g + w2, g + w3.
inline DimerModel generate_hexagonal_dimer(const FinAbGroup& G,
                                           const std::vector<GroupElement>& weights) {
    require(G.is_finite(), "infinite_group", "need a finite group");
    require(weights.size() == 3, "bad_weights", "exactly three characters required");
    for (const auto& w : weights)
        check_shape(G, w);
    GroupElement sum = elem_add(G, elem_add(G, weights[0], weights[1]), weights[2]);
    require(is_identity(sum), "weight_sum_nonzero",
            "characters must sum to zero (SL(3) condition)");
    std::set<GroupElement> gens{weights[0], weights[1]};
    require(Int(subgroup_generated(G, gens).size()) == G.order(), "not_surjective",
            "the first two characters must generate the group");

    const std::size_t k = G.torsion.size();
    // Kernel of (i,j) -> i*w1 - j*w2 in G, as a sublattice of Z^2: project
    // the integer kernel of [w1 | -w2 | diag(d)] to its first two columns.
    std::vector<IntVec> rows;
    for (std::size_t t = 0; t < k; ++t) {
        IntVec row(2 + k, Int(0));
        row[0] = weights[0].torsion_part[t];
        row[1] = -weights[1].torsion_part[t];
        row[2 + t] = G.torsion[t];
        rows.push_back(std::move(row));
    }
    std::int64_t la = 1, lb = 0, lc = 1; // HNF basis ((la, lb), (0, lc))
    if (k > 0) {
        IntMatrix ker = kernel_basis(IntMatrix::from_rows(rows));
        std::vector<IntVec> proj;
        for (std::size_t c = 0; c < ker.cols(); ++c)
            proj.push_back(IntVec{ker(0, c), ker(1, c)});
        IntMatrix H = hnf(IntMatrix::from_rows(proj)).H;
        check_internal(H.rows() >= 2 && H(0, 0) != 0 && H(1, 1) != 0 && H(1, 0) == 0,
                       "cell lattice is not finite-index");
        la = static_cast<std::int64_t>(H(0, 0));
        lb = static_cast<std::int64_t>(H(0, 1));
        lc = static_cast<std::int64_t>(H(1, 1));
    }
    check_internal(Int(la) * Int(lc) == G.order(), "cell lattice index mismatch");

    const std::int64_t cells = la * lc;
    auto cell_of = [&](std::int64_t x, std::int64_t y) {
        return x * lc + y;
    };
    // Reduce (i,j) to its representative and the deck translate used.
    auto reduce = [&](std::int64_t i, std::int64_t j) {
        std::int64_t mdiv = i >= 0 ? i / la : -((-i + la - 1) / la);
        std::int64_t x = i - mdiv * la;
        std::int64_t jj = j - mdiv * lb;
        std::int64_t ndiv = jj >= 0 ? jj / lc : -((-jj + lc - 1) / lc);
        std::int64_t y = jj - ndiv * lc;
        return std::make_pair(cell_of(x, y), Pt{mdiv, ndiv});
    };

    RawDimer raw;
    for (std::int64_t c = 0; c < cells; ++c)
        raw.vertices.push_back({c, Color::Black});
    for (std::int64_t c = 0; c < cells; ++c)
        raw.vertices.push_back({cells + c, Color::White});

    // Edge types from a black cell: 0 up to the same cell's white, 1 to the
    // cell one step (1,-1) away, 2 to the cell below.
    const Pt deltas[3] = {Pt{0, 0}, Pt{1, -1}, Pt{0, -1}};
    for (std::int64_t c = 0; c < cells; ++c) {
        std::int64_t x = c / lc, y = c % lc;
        for (int t = 0; t < 3; ++t) {
            auto [wcell, tr] = reduce(x + deltas[t][0], y + deltas[t][1]);
            raw.edges.push_back({3 * c + t, c, cells + wcell, tr});
        }
    }
    for (std::int64_t c = 0; c < cells; ++c) {
        std::int64_t x = c / lc, y = c % lc;
        // Black rotation ccw: right-down, up, left-down.
        raw.rotations[c] = {3 * c + 1, 3 * c + 0, 3 * c + 2};
        // White rotation ccw: the edges arriving from the cell above, from
        // the upper-left cell, and from this cell.
        std::int64_t above = reduce(x + 0, y + 1).first;
        std::int64_t upleft = reduce(x - 1, y + 1).first;
        raw.rotations[cells + c] = {3 * above + 2, 3 * upleft + 1, 3 * c + 0};
    }
    return validate_dimer(raw);
}

} // namespace nccr
