#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "nccr/error.hpp"
#include "nccr/int_matrix.hpp"

namespace nccr {

using Pt = std::array<std::int64_t, 2>;

inline Pt operator+(Pt a, Pt b) { return {a[0] + b[0], a[1] + b[1]}; }
inline Pt operator-(Pt a, Pt b) { return {a[0] - b[0], a[1] - b[1]}; }

inline std::int64_t cross(Pt o, Pt a, Pt b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Multiset of lattice points (one per perfect-matching class) together with
// their convex hull, hull vertices counterclockwise starting from the
// lexicographically least.
struct LatticePolygon {
    std::map<Pt, std::int64_t> points; // point -> multiplicity
    std::vector<Pt> hull;
};

// Andrew monotone chain; collinear boundary points are not hull vertices.
inline std::vector<Pt> convex_hull(std::vector<Pt> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n <= 2)
        return pts;
    std::vector<Pt> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0)
            --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0)
            --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    // Starts at the lexicographic minimum and runs counterclockwise.
    return h;
}

inline LatticePolygon make_polygon(const std::map<Pt, std::int64_t>& points) {
    LatticePolygon p;
    p.points = points;
    std::vector<Pt> pts;
    pts.reserve(points.size());
    for (const auto& [pt, mult] : points) {
        require(mult > 0, "bad_multiplicity", "point multiplicities must be positive");
        pts.push_back(pt);
    }
    p.hull = convex_hull(std::move(pts));
    return p;
}

// Twice the Euclidean area of the hull (shoelace; integer for lattice data).
inline std::int64_t twice_hull_area(const LatticePolygon& p) {
    const auto& h = p.hull;
    if (h.size() < 3)
        return 0;
    std::int64_t s = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const Pt& a = h[i];
        const Pt& b = h[(i + 1) % h.size()];
        s += a[0] * b[1] - a[1] * b[0];
    }
    return s; // positive for counterclockwise hulls
}

// Boundary profile: the primitive direction of each counterclockwise hull
// edge, one copy per lattice point step. This is the zigzag-class multiset
// of a consistent dimer model with the conventions fixed in dimer.hpp (the
// outward normals rotated a quarter turn).
inline std::vector<Pt> boundary_profile(const LatticePolygon& p) {
    std::vector<Pt> out;
    const auto& h = p.hull;
    if (h.size() < 2)
        return out;
    for (std::size_t i = 0; i < h.size(); ++i) {
        Pt d = h[(i + 1) % h.size()] - h[i];
        if (h.size() == 2 && i == 1)
            break; // a segment has one edge
        std::int64_t g = gcd64(d[0], d[1]);
        Pt prim{d[0] / g, d[1] / g};
        for (std::int64_t k = 0; k < g; ++k)
            out.push_back(prim);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Affine lattice equivalence of hulls: an element of GL(2,Z) plus a
// translation matching vertex cycles. Multiplicities of interior points are
// ignored, matching how the hull is used downstream.
inline bool hulls_affine_equivalent(const LatticePolygon& a, const LatticePolygon& b) {
    const auto& ha = a.hull;
    const auto& hb = b.hull;
    if (ha.size() != hb.size())
        return false;
    const std::size_t n = ha.size();
    if (n == 0)
        return true;
    if (n == 1)
        return true; // single points are always translates
    auto try_map = [&](bool reversed, std::size_t offset) {
        auto vb = [&](std::size_t i) -> const Pt& {
            std::size_t idx = reversed ? (offset + n - i % n) % n : (offset + i) % n;
            return hb[idx];
        };
        if (n == 2) {
            // Segments: need a unimodular map between the edge vectors.
            Pt u = ha[1] - ha[0], v = vb(1) - vb(0);
            std::int64_t gu = gcd64(u[0], u[1]), gv = gcd64(v[0], v[1]);
            return gu == gv;
        }
        Pt u1 = ha[1] - ha[0], u2 = ha[2] - ha[1];
        Pt v1 = vb(1) - vb(0), v2 = vb(2) - vb(1);
        // Solve T u1 = v1, T u2 = v2 over the rationals via Cramer.
        std::int64_t det = u1[0] * u2[1] - u1[1] * u2[0];
        if (det == 0)
            return false;
        std::array<std::int64_t, 4> numer = {
            v1[0] * u2[1] - v2[0] * u1[1], v2[0] * u1[0] - v1[0] * u2[0],
            v1[1] * u2[1] - v2[1] * u1[1], v2[1] * u1[0] - v1[1] * u2[0]};
        std::array<std::int64_t, 4> T;
        for (int i = 0; i < 4; ++i) {
            if (numer[i] % det != 0)
                return false;
            T[i] = numer[i] / det;
        }
        if (std::abs(T[0] * T[3] - T[1] * T[2]) != 1)
            return false;
        for (std::size_t i = 0; i < n; ++i) {
            Pt d = ha[(i + 1) % n] - ha[i];
            Pt img{T[0] * d[0] + T[1] * d[1], T[2] * d[0] + T[3] * d[1]};
            Pt want = vb(i + 1) - vb(i);
            if (img != want)
                return false;
        }
        return true;
    };
    for (std::size_t offset = 0; offset < n; ++offset)
        if (try_map(false, offset) || try_map(true, offset))
            return true;
    return false;
}

} // namespace nccr
