#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "nccr/decision.hpp"
#include "nccr/dimer.hpp"
#include "nccr/io.hpp"
#include "nccr/quiver.hpp"

using namespace nccr;

namespace {

const std::string kFixtures = NCCR_FIXTURE_DIR;

// Every abelian group of order <= 20 presentable with two generators.
std::vector<FinAbGroup> two_generated_groups() {
    std::vector<FinAbGroup> out;
    out.push_back(FinAbGroup{}); // trivial
    for (int n = 2; n <= 20; ++n) {
        FinAbGroup g;
        g.torsion.emplace_back(n);
        out.push_back(g);
    }
    auto add2 = [&](int a, int b) {
        FinAbGroup g;
        g.torsion.emplace_back(a);
        g.torsion.emplace_back(b);
        out.push_back(g);
    };
    add2(2, 2);
    add2(2, 4);
    add2(2, 6);
    add2(2, 8);
    add2(2, 10);
    add2(3, 3);
    add2(3, 6);
    add2(4, 4);
    return out;
}

// Literal universal-cover oracle for the consistency verdict: materialize
// zigzag lifts as cover-edge sets over enough periods, then compare every
// pair of lifts inside the deck-translate window of radius B. Transversal
// crossings only: same-direction parallel lifts may share nothing, while
// opposite-direction lifts may share edges freely.
bool windowed_consistency_oracle(const DimerModel& m) {
    auto zz = zigzag_paths(m);
    for (const auto& z : zz)
        if (z.hclass == Pt{0, 0})
            return false;
    std::int64_t B = 0;
    for (const auto& z : zz)
        B = std::max(B, 2 + std::max(std::abs(z.hclass[0]), std::abs(z.hclass[1])));

    struct Lift {
        std::set<std::pair<int, Pt>> cover_edges;
        Pt hclass;
    };
    // Periods large enough that every crossing inside the window appears.
    const int K = static_cast<int>(4 * B + 8);
    std::vector<Lift> lifts;
    for (const auto& z : zz) {
        Lift lift;
        lift.hclass = z.hclass;
        Pt pos{0, 0};
        std::vector<std::pair<int, Pt>> base;
        for (int d : z.darts) {
            int e = d / 2;
            base.emplace_back(e, d % 2 == 0 ? pos : pos - m.shifts[e]);
            pos = pos + m.dart_shift(d);
        }
        for (int k = -K; k <= K; ++k)
            for (const auto& [e, t] : base)
                lift.cover_edges.insert({e, t + Pt{k * z.hclass[0], k * z.hclass[1]}});
        lifts.push_back(std::move(lift));
    }

    auto shifted_overlap = [&](const Lift& a, const Lift& b, Pt t) {
        // Count distinct shared cover edges near the origin region.
        int count = 0;
        for (const auto& [e, pos] : a.cover_edges) {
            if (std::abs(pos[0]) > 3 * B || std::abs(pos[1]) > 3 * B)
                continue;
            if (b.cover_edges.count({e, pos - t}))
                ++count;
        }
        return count;
    };

    for (std::size_t i = 0; i < lifts.size(); ++i)
        for (std::size_t j = i; j < lifts.size(); ++j) {
            Pt h = lifts[i].hclass, g = lifts[j].hclass;
            std::int64_t det = h[0] * g[1] - h[1] * g[0];
            bool parallel = det == 0;
            bool same_direction = parallel && h[0] * g[0] + h[1] * g[1] > 0;
            for (std::int64_t tx = -B; tx <= B; ++tx)
                for (std::int64_t ty = -B; ty <= B; ++ty) {
                    Pt t{tx, ty};
                    if (i == j) {
                        // Skip the identical lift (translates along h).
                        if (detail::multiple_of(t, h))
                            continue;
                    }
                    int overlap = shifted_overlap(lifts[i], lifts[j], t);
                    if (parallel) {
                        if (same_direction && overlap > 0)
                            return false;
                    } else if (overlap > 1) {
                        return false;
                    }
                }
        }
    return true;
}

GroupElement from_residues(const FinAbGroup& G, const std::vector<long long>& rs) {
    IntVec t;
    for (long long r : rs)
        t.emplace_back(r);
    return make_element(G, {}, std::move(t));
}

} // namespace

TEST_CASE("generated hexagonal dimers exhaustively over small data") {
    long long cases = 0;
    for (const FinAbGroup& G : two_generated_groups()) {
        auto elems = enumerate(G);
        for (const auto& w1 : elems)
            for (const auto& w2 : elems) {
                if (Int(subgroup_generated(G, {w1, w2}).size()) != G.order())
                    continue;
                GroupElement w3 = elem_neg(G, elem_add(G, w1, w2));
                std::vector<GroupElement> w = {w1, w2, w3};
                DimerModel m = generate_hexagonal_dimer(G, w); // validates internally
                CHECK(Int(m.num_faces()) == G.order());
                CHECK(all_faces_hexagonal(m));
                auto cons = is_consistent(m);
                CHECK(cons.consistent);
                QuiverWithPotential qp = dual_quiver(m);
                bool iso = quiver_isomorphic(qp.quiver, mckay_quiver(G, w));
                if (!iso) {
                    CAPTURE(format_group(G), format_element(w1), format_element(w2));
                    REQUIRE(iso);
                }
                ++cases;
            }
    }
    CHECK(cases >= 500);
}

TEST_CASE("zigzag class sums vanish on every shipped fixture") {
    for (const char* name : {"one_hexagon.json", "conifold.json", "sigma_dimer.json",
                             "inconsistent_parallel.json"}) {
        DimerModel m = load_dimer_file(kFixtures + "/" + name);
        Pt sum{0, 0};
        std::size_t darts = 0;
        for (const auto& z : zigzag_paths(m)) {
            sum = sum + z.hclass;
            darts += z.darts.size();
        }
        CAPTURE(name);
        CHECK(sum == Pt{0, 0});
        CHECK(darts == 2 * m.num_edges());
    }
}

TEST_CASE("zigzag classes match the polygon boundary profile on consistent fixtures") {
    std::vector<DimerModel> models;
    models.push_back(load_dimer_file(kFixtures + "/one_hexagon.json"));
    models.push_back(load_dimer_file(kFixtures + "/conifold.json"));
    models.push_back(load_dimer_file(kFixtures + "/sigma_dimer.json"));
    FinAbGroup z14;
    z14.torsion.emplace_back(14);
    models.push_back(generate_hexagonal_dimer(
        z14, {from_residues(z14, {1}), from_residues(z14, {5}), from_residues(z14, {8})}));
    for (const auto& m : models) {
        REQUIRE(is_consistent(m).consistent);
        auto profile = boundary_profile(toric_polygon(m));
        std::vector<Pt> zz;
        for (const auto& z : zigzag_paths(m))
            zz.push_back(z.hclass);
        std::sort(zz.begin(), zz.end());
        CHECK(zz == profile);
        // Faces = 2 * area for consistent models.
        CHECK(static_cast<std::int64_t>(m.num_faces()) == twice_hull_area(toric_polygon(m)));
    }
}

TEST_CASE("consistency agrees with the windowed universal-cover oracle") {
    std::vector<std::pair<std::string, DimerModel>> models;
    for (const char* name : {"one_hexagon.json", "conifold.json", "sigma_dimer.json",
                             "inconsistent_parallel.json"})
        models.emplace_back(name, load_dimer_file(kFixtures + "/" + name));
    FinAbGroup z5;
    z5.torsion.emplace_back(5);
    models.emplace_back("gen5", generate_hexagonal_dimer(z5, {from_residues(z5, {1}),
                                                              from_residues(z5, {2}),
                                                              from_residues(z5, {2})}));
    FinAbGroup z22;
    z22.torsion = {Int(2), Int(2)};
    models.emplace_back("gen22", generate_hexagonal_dimer(z22, {from_residues(z22, {1, 0}),
                                                                from_residues(z22, {0, 1}),
                                                                from_residues(z22, {1, 1})}));

    // Adversarial variants: shuffle rotations of the sigma fixture; keep the
    // ones that still validate as torus models and compare verdicts.
    std::mt19937 rng(20240811);
    RawDimer sigma_raw =
        load_dimer_json(detail::parse_json_text(detail::read_file(kFixtures + "/sigma_dimer.json"),
                                                "sigma"),
                        "sigma");
    int mutants = 0;
    for (int iter = 0; iter < 400 && mutants < 12; ++iter) {
        RawDimer mut = sigma_raw;
        std::uniform_int_distribution<std::size_t> pick(0, mut.vertices.size() - 1);
        long long vid = mut.vertices[pick(rng)].id;
        std::shuffle(mut.rotations[vid].begin(), mut.rotations[vid].end(), rng);
        try {
            DimerModel m = validate_dimer(mut);
            models.emplace_back("sigma-mutant", std::move(m));
            ++mutants;
        } catch (const validation_error&) {
        }
    }

    for (const auto& [name, m] : models) {
        CAPTURE(name);
        CHECK(is_consistent(m).consistent == windowed_consistency_oracle(m));
    }
}

TEST_CASE("the inconsistent fixture fails with a trivial zigzag certificate") {
    DimerModel m = load_dimer_file(kFixtures + "/inconsistent_parallel.json");
    auto rep = is_consistent(m);
    CHECK_FALSE(rep.consistent);
    REQUIRE(rep.failure.has_value());
    CHECK(rep.failure->kind == "trivial_zigzag");
    CHECK_FALSE(rep.failure->edge_ids.empty());

    DimerReport dr = steady_decision_dimer(m);
    CHECK_FALSE(dr.steady);
}

TEST_CASE("polygon is independent of the reference matching up to translation") {
    // Relabelling edges permutes the enumeration order and hence may change
    // the reference matching; the polygon must only move by a translation.
    RawDimer base;
    base.vertices = {{0, Color::Black}, {1, Color::White}};
    base.edges = {{0, 0, 1, {0, 0}}, {1, 0, 1, {1, 0}}, {2, 0, 1, {0, 1}}, {3, 0, 1, {1, 1}}};
    base.rotations[0] = {0, 1, 3, 2};
    base.rotations[1] = {0, 1, 3, 2};
    LatticePolygon p0 = toric_polygon(validate_dimer(base));

    RawDimer relabeled;
    relabeled.vertices = base.vertices;
    // New ids reverse the old order.
    for (const auto& e : base.edges)
        relabeled.edges.push_back({3 - e.id, e.black, e.white, e.shift});
    relabeled.rotations[0] = {3, 2, 0, 1};
    relabeled.rotations[1] = {3, 2, 0, 1};
    LatticePolygon p1 = toric_polygon(validate_dimer(relabeled));

    REQUIRE(p0.points.size() == p1.points.size());
    Pt delta = p1.hull[0] - p0.hull[0];
    for (const auto& [pt, mult] : p0.points) {
        auto it = p1.points.find(pt + delta);
        REQUIRE(it != p1.points.end());
        CHECK(it->second == mult);
    }
    CHECK(hulls_affine_equivalent(p0, p1));
}
