#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "nccr/abelian_group.hpp"
#include "nccr/dimer.hpp"
#include "nccr/error.hpp"

namespace nccr {

// Directed multigraph; arrow index ranges identify arrows elsewhere.
struct Quiver {
    struct Arrow {
        int tail;
        int head;
    };
    std::size_t num_vertices = 0;
    std::vector<Arrow> arrows;
    std::vector<std::string> vertex_labels; // optional, same length or empty
};

// Dual of a dimer model: faces become vertices, edges become arrows crossing
// them with the white endpoint on the left; the potential pairs each arrow
// into one cycle around a white vertex and one around a black vertex.
struct QuiverWithPotential {
    Quiver quiver; // arrow i is dual to edge i of the source model
    std::vector<std::vector<int>> positive_cycles; // around white vertices
    std::vector<std::vector<int>> negative_cycles; // around black vertices
};

namespace detail {

// Rotate a cycle so its smallest arrow comes first (deterministic output).
inline void canonicalize_cycle(std::vector<int>& cycle) {
    auto it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), it, cycle.end());
}

} // namespace detail

inline QuiverWithPotential dual_quiver(const DimerModel& m) {
    QuiverWithPotential qp;
    qp.quiver.num_vertices = m.num_faces();
    for (std::size_t e = 0; e < m.num_edges(); ++e) {
        int tail = m.dart_face[2 * static_cast<int>(e)];     // face left of black->white
        int head = m.dart_face[2 * static_cast<int>(e) + 1]; // face left of white->black
        qp.quiver.arrows.push_back({tail, head});
    }
    for (std::size_t f = 0; f < m.num_faces(); ++f)
        qp.quiver.vertex_labels.push_back(std::to_string(f));

    // Around a white vertex the dual arrows chain head-to-tail in ccw
    // rotation order; around a black vertex in the reversed order.
    for (std::size_t v = 0; v < m.num_vertices(); ++v) {
        std::vector<int> cycle = m.rotation[v];
        if (m.colors[v] == Color::Black)
            std::reverse(cycle.begin(), cycle.end());
        detail::canonicalize_cycle(cycle);
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const auto& cur = qp.quiver.arrows[cycle[i]];
            const auto& nxt = qp.quiver.arrows[cycle[(i + 1) % cycle.size()]];
            check_internal(cur.head == nxt.tail, "potential cycle does not chain");
        }
        if (m.colors[v] == Color::White)
            qp.positive_cycles.push_back(std::move(cycle));
        else
            qp.negative_cycles.push_back(std::move(cycle));
    }
    return qp;
}

// Vertices are the group elements in enumeration order; each element g gets
// one arrow g -> g + w for every character w of the action.
inline Quiver mckay_quiver(const FinAbGroup& G, const std::vector<GroupElement>& weights) {
    require(G.is_finite(), "infinite_group", "need a finite group");
    require(weights.size() == 3, "bad_weights", "exactly three characters required");
    for (const auto& w : weights)
        check_shape(G, w);
    GroupElement sum = elem_add(G, elem_add(G, weights[0], weights[1]), weights[2]);
    require(is_identity(sum), "weight_sum_nonzero",
            "characters must sum to zero (SL(3) condition)");
    std::set<GroupElement> nontrivial;
    for (const GroupElement& g : enumerate(G)) {
        if (is_identity(g))
            continue;
        bool pairs = false;
        for (const auto& w : weights)
            if (detail::character_pairing(G, w, g) != 0)
                pairs = true;
        require(pairs, "non_faithful_weights",
                "characters are not jointly faithful: a nonidentity element acts trivially");
    }

    auto elems = enumerate(G);
    std::map<GroupElement, int> index;
    for (std::size_t i = 0; i < elems.size(); ++i)
        index[elems[i]] = static_cast<int>(i);

    Quiver q;
    q.num_vertices = elems.size();
    for (std::size_t i = 0; i < elems.size(); ++i) {
        std::string label;
        for (std::size_t j = 0; j < elems[i].torsion_part.size(); ++j)
            label += (j ? "," : "") + elems[i].torsion_part[j].str();
        q.vertex_labels.push_back(label.empty() ? "0" : label);
        for (const auto& w : weights)
            q.arrows.push_back({static_cast<int>(i), index.at(elem_add(G, elems[i], w))});
    }
    return q;
}

constexpr std::size_t kQuiverIsoVertexBound = 40;

// Exact multigraph isomorphism by backtracking over a BFS vertex order with
// degree-profile pruning. Desk scale: both quivers at most forty vertices.
inline bool quiver_isomorphic(const Quiver& q1, const Quiver& q2) {
    require(q1.num_vertices <= kQuiverIsoVertexBound && q2.num_vertices <= kQuiverIsoVertexBound,
            "size_bound", "isomorphism check limited to 40 vertices");
    if (q1.num_vertices != q2.num_vertices || q1.arrows.size() != q2.arrows.size())
        return false;
    const std::size_t n = q1.num_vertices;
    if (n == 0)
        return true;

    auto mult = [](const Quiver& q) {
        std::vector<std::vector<int>> a(q.num_vertices, std::vector<int>(q.num_vertices, 0));
        for (const auto& ar : q.arrows)
            a[ar.tail][ar.head] += 1;
        return a;
    };
    std::vector<std::vector<int>> a1 = mult(q1), a2 = mult(q2);

    // Degree profile: sorted out- and in-multiplicity lists plus loop count.
    auto profile = [n](const std::vector<std::vector<int>>& a, std::size_t v) {
        std::vector<int> out, in;
        for (std::size_t u = 0; u < n; ++u) {
            if (a[v][u])
                out.push_back(a[v][u]);
            if (a[u][v])
                in.push_back(a[u][v]);
        }
        std::sort(out.begin(), out.end());
        std::sort(in.begin(), in.end());
        out.push_back(-1);
        out.insert(out.end(), in.begin(), in.end());
        out.push_back(a[v][v]);
        return out;
    };
    std::vector<std::vector<int>> p1(n), p2(n);
    for (std::size_t v = 0; v < n; ++v) {
        p1[v] = profile(a1, v);
        p2[v] = profile(a2, v);
    }
    {
        auto s1 = p1, s2 = p2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2)
            return false;
    }

    // Order vertices of q1 so each one touches an earlier one when possible.
    std::vector<int> order;
    {
        std::vector<char> placed(n, 0);
        std::vector<int> frontier;
        for (std::size_t s = 0; s < n; ++s) {
            if (placed[s])
                continue;
            frontier.push_back(static_cast<int>(s));
            placed[s] = 1;
            while (!frontier.empty()) {
                int v = frontier.front();
                frontier.erase(frontier.begin());
                order.push_back(v);
                for (std::size_t u = 0; u < n; ++u)
                    if (!placed[u] && (a1[v][u] || a1[u][v])) {
                        placed[u] = 1;
                        frontier.push_back(static_cast<int>(u));
                    }
            }
        }
    }

    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(std::size_t)> rec = [&](std::size_t pos) -> bool {
        if (pos == n)
            return true;
        int v = order[pos];
        for (std::size_t w = 0; w < n; ++w) {
            if (used[w] || p1[v] != p2[w])
                continue;
            bool ok = true;
            for (std::size_t q = 0; q < pos && ok; ++q) {
                int u = order[q];
                ok = a1[v][u] == a2[w][map[u]] && a1[u][v] == a2[map[u]][w];
            }
            if (a1[v][v] != a2[w][w])
                ok = false;
            if (!ok)
                continue;
            map[v] = static_cast<int>(w);
            used[w] = 1;
            if (rec(pos + 1))
                return true;
            used[w] = 0;
            map[v] = -1;
        }
        return false;
    };
    return rec(0);
}

// DOT export, one arrow per line, stable ordering.
inline std::string quiver_to_dot(const Quiver& q, const std::string& name = "quiver") {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (std::size_t v = 0; v < q.num_vertices; ++v) {
        os << "  v" << v;
        if (v < q.vertex_labels.size())
            os << " [label=\"" << q.vertex_labels[v] << "\"]";
        os << ";\n";
    }
    std::vector<std::pair<int, int>> sorted;
    for (const auto& a : q.arrows)
        sorted.emplace_back(a.tail, a.head);
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [t, h] : sorted)
        os << "  v" << t << " -> v" << h << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace nccr
