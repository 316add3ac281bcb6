#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nccr/abelian_group.hpp"

using namespace nccr;

namespace {

FinAbGroup cyclic(long long n) {
    FinAbGroup g;
    if (n > 1)
        g.torsion.push_back(n);
    return g;
}

GroupElement el(const FinAbGroup& G, std::initializer_list<long long> residues) {
    IntVec t;
    for (long long r : residues)
        t.emplace_back(r);
    return make_element(G, IntVec(G.free_rank, Int(0)), std::move(t));
}

} // namespace

TEST_CASE("elem_add basics") {
    FinAbGroup z4 = cyclic(4);
    CHECK(elem_add(z4, el(z4, {3}), el(z4, {2})) == el(z4, {1}));

    FinAbGroup g; // Z + Z/2
    g.free_rank = 1;
    g.torsion.push_back(2);
    GroupElement a{IntVec{Int(1)}, IntVec{Int(1)}};
    GroupElement b{IntVec{Int(-1)}, IntVec{Int(1)}};
    CHECK(is_identity(elem_add(g, a, b)));

    CHECK_THROWS_AS(elem_add(z4, el(z4, {1}), identity_element(g)), validation_error);
}

TEST_CASE("inverse law") {
    FinAbGroup g;
    g.free_rank = 2;
    g.torsion = {Int(2), Int(6)};
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(-20, 20);
    for (int i = 0; i < 100; ++i) {
        IntVec fp, tp;
        fp.emplace_back(d(rng));
        fp.emplace_back(d(rng));
        tp.emplace_back(d(rng));
        tp.emplace_back(d(rng));
        GroupElement a = make_element(g, std::move(fp), std::move(tp));
        CHECK(is_identity(elem_add(g, a, elem_neg(g, a))));
    }
}

TEST_CASE("enumerate") {
    FinAbGroup trivial;
    auto e0 = enumerate(trivial);
    REQUIRE(e0.size() == 1);
    CHECK(is_identity(e0[0]));

    FinAbGroup z2z2;
    z2z2.torsion = {Int(2), Int(2)};
    CHECK(enumerate(z2z2).size() == 4);

    FinAbGroup z14 = cyclic(14);
    auto e = enumerate(z14);
    REQUIRE(e.size() == 14);
    for (int i = 0; i < 14; ++i)
        CHECK(e[i].torsion_part[0] == i);

    FinAbGroup inf;
    inf.free_rank = 1;
    CHECK_THROWS_AS(enumerate(inf), validation_error);
    FinAbGroup big = cyclic(50);
    CHECK_THROWS_AS(enumerate(big, 10), validation_error);
}

TEST_CASE("subgroup_generated") {
    FinAbGroup z6 = cyclic(6);
    auto s = subgroup_generated(z6, {el(z6, {2})});
    CHECK(s == std::set<GroupElement>{el(z6, {0}), el(z6, {2}), el(z6, {4})});

    FinAbGroup z4 = cyclic(4);
    auto empty = subgroup_generated(z4, {});
    REQUIRE(empty.size() == 1);
    CHECK(empty.count(identity_element(z4)) == 1);

    FinAbGroup z2z2;
    z2z2.torsion = {Int(2), Int(2)};
    auto whole = subgroup_generated(z2z2, {el(z2z2, {1, 0}), el(z2z2, {0, 1})});
    CHECK(whole.size() == 4);
}

TEST_CASE("is_subgroup") {
    FinAbGroup z4 = cyclic(4);
    CHECK(is_subgroup(z4, {el(z4, {0}), el(z4, {2})}));
    CHECK_FALSE(is_subgroup(z4, {el(z4, {0}), el(z4, {1}), el(z4, {2})}));
    FinAbGroup z6 = cyclic(6);
    CHECK(is_subgroup(z6, {el(z6, {0}), el(z6, {2}), el(z6, {4})}));
    CHECK_THROWS_AS(is_subgroup(z4, {}), validation_error);
}

TEST_CASE("iso_invariants") {
    auto a = iso_invariants(0, {Int(2), Int(3)});
    REQUIRE(a.torsion.size() == 1);
    CHECK(a.torsion[0] == 6);

    auto b = iso_invariants(0, {Int(2), Int(2)});
    REQUIRE(b.torsion.size() == 2);
    CHECK(b.torsion[0] == 2);
    CHECK(b.torsion[1] == 2);

    // Oracle: snf of diag(4,6) has diagonal (2,12).
    auto c = iso_invariants(0, {Int(4), Int(6)});
    REQUIRE(c.torsion.size() == 2);
    CHECK(c.torsion[0] == 2);
    CHECK(c.torsion[1] == 12);

    auto d = iso_invariants(2, {Int(1), Int(1)});
    CHECK(d.free_rank == 2);
    CHECK(d.torsion.empty());

    // Idempotent on its own output.
    auto e = iso_invariants(c.free_rank, c.torsion);
    CHECK(e == c);
}
