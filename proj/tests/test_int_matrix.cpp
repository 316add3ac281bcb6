#include <catch2/catch_amalgamated.hpp>

#include "nccr/abelian_group.hpp"
#include "nccr/int_matrix.hpp"
#include "support.hpp"

using namespace nccr;

namespace {

IntMatrix mat(std::size_t r, std::size_t c, std::initializer_list<long long> xs) {
    std::vector<Int> v;
    for (long long x : xs)
        v.emplace_back(x);
    return IntMatrix(r, c, std::move(v));
}

// Pairing matrix of the cone over the square with vertices (+-1, +-1):
// rows are the rays, columns evaluate the coordinate functionals.
IntMatrix sigma_pairing() {
    return mat(4, 3, {1, 1, 1, -1, 1, 1, -1, -1, 1, 1, -1, 1});
}

} // namespace

TEST_CASE("hnf identity and zero") {
    IntMatrix id = IntMatrix::identity(2);
    auto h = hnf(id);
    CHECK(h.H == id);
    CHECK(h.U == id);

    IntMatrix z(3, 2);
    auto hz = hnf(z);
    CHECK(hz.H == z);
    CHECK(hz.U == IntMatrix::identity(3));
}

TEST_CASE("hnf of [[2,4],[6,8]]") {
    IntMatrix a = mat(2, 2, {2, 4, 6, 8});
    auto h = hnf(a);
    // Exhaustive row reduction by hand: r1 -= 3 r0 gives [0,-4]; normalize
    // and reduce above the second pivot.
    CHECK(h.H == mat(2, 2, {2, 0, 0, 4}));
    CHECK(h.U * a == h.H);
    CHECK(is_unimodular(h.U));
}

TEST_CASE("hnf pivots and reduction ranges") {
    IntMatrix a = mat(3, 3, {0, 5, 7, 3, -2, 1, 6, 1, 4});
    auto h = hnf(a);
    CHECK(h.U * a == h.H);
    CHECK(is_unimodular(h.U));
    std::size_t row = 0;
    for (std::size_t col : h.pivot_cols) {
        CHECK(h.H(row, col) > 0);
        for (std::size_t i = 0; i < row; ++i) {
            CHECK(h.H(i, col) >= 0);
            CHECK(h.H(i, col) < h.H(row, col));
        }
        ++row;
    }
}

TEST_CASE("snf identity") {
    auto s = snf(IntMatrix::identity(3));
    CHECK(s.D == IntMatrix::identity(3));
    REQUIRE(s.invariant_factors.size() == 3);
    for (const Int& d : s.invariant_factors)
        CHECK(d == 1);
}

TEST_CASE("snf of [[2,4],[6,8]]") {
    // Oracle: gcd of entries is 2, |det| = 16 - 48 = -32... the 2x2 minor is
    // 2*8 - 4*6 = -8, so d1 = 2 and d1*d2 = 8.
    IntMatrix a = mat(2, 2, {2, 4, 6, 8});
    auto s = snf(a);
    REQUIRE(s.invariant_factors.size() == 2);
    CHECK(s.invariant_factors[0] == 2);
    CHECK(s.invariant_factors[1] == 4);
    CHECK(s.U * a * s.V == s.D);
    CHECK(is_unimodular(s.U));
    CHECK(is_unimodular(s.V));
    CHECK(s.invariant_factors == testsupport::invariant_factors_by_minor_gcd(a));
}

TEST_CASE("snf of the sigma pairing matrix") {
    IntMatrix a = sigma_pairing();
    // Oracle by minor gcds: entries have gcd 1, the 2x2 minors gcd 2, the
    // 3x3 minors gcd 4, giving factors (1, 2, 2).
    auto byminors = testsupport::invariant_factors_by_minor_gcd(a);
    REQUIRE(byminors.size() == 3);
    CHECK(byminors[0] == 1);
    CHECK(byminors[1] == 2);
    CHECK(byminors[2] == 2);
    auto s = snf(a);
    CHECK(s.invariant_factors == byminors);
    CHECK(s.U * a * s.V == s.D);
}

TEST_CASE("kernel basis") {
    CHECK(kernel_basis(IntMatrix::identity(2)).cols() == 0);

    IntMatrix a = mat(1, 2, {1, 1});
    IntMatrix k = kernel_basis(a);
    REQUIRE(k.cols() == 1);
    CHECK(k(0, 0) == 1);
    CHECK(k(1, 0) == -1);

    IntMatrix b = mat(1, 2, {2, 4});
    IntMatrix kb = kernel_basis(b);
    REQUIRE(kb.cols() == 1);
    // Primitive generator up to canonical sign: (2,-1).
    CHECK(kb(0, 0) == 2);
    CHECK(kb(1, 0) == -1);
    CHECK((a * k).is_zero());
    CHECK((b * kb).is_zero());
}

TEST_CASE("cokernel basics") {
    auto c1 = cokernel(IntMatrix::identity(3));
    CHECK(c1.group.is_trivial());
    for (const auto& g : c1.images)
        CHECK(is_identity(g));

    auto c2 = cokernel(mat(1, 1, {2}));
    CHECK(c2.group.free_rank == 0);
    REQUIRE(c2.group.torsion.size() == 1);
    CHECK(c2.group.torsion[0] == 2);
    REQUIRE(c2.images.size() == 1);
    CHECK(c2.images[0].torsion_part[0] == 1);
}

TEST_CASE("cokernel of the sigma pairing matrix") {
    // Free rank 4 - 3 = 1 plus the torsion left by factors (1,2,2).
    auto c = cokernel(sigma_pairing());
    CHECK(c.group.free_rank == 1);
    REQUIRE(c.group.torsion.size() == 2);
    CHECK(c.group.torsion[0] == 2);
    CHECK(c.group.torsion[1] == 2);
}

TEST_CASE("determinant") {
    CHECK(determinant(IntMatrix::identity(4)) == 1);
    CHECK(determinant(mat(2, 2, {2, 4, 6, 8})) == -8);
    CHECK(determinant(mat(3, 3, {0, 1, 0, 0, 0, 1, 1, 0, 0})) == 1);
    CHECK(determinant(mat(2, 2, {2, 4, 1, 2})) == 0);
}
