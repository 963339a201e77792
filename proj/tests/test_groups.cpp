#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyq/groups.hpp"

#include <random>

using cyq::Cyclotomic;
using cyq::CycMatrix;
using cyq::CycVector;
using cyq::Permutation;
using cyq::Rational;

namespace {

Permutation random_permutation(int n, std::mt19937& rng) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    std::shuffle(im.begin(), im.end(), rng);
    return Permutation(std::move(im));
}

}  // namespace

TEST_CASE("cycle generator and permutation matrix") {
    CHECK(cyq::cycle_generator(1) == Permutation::identity(1));

    const CycMatrix p8 = cyq::permutation_matrix(cyq::cycle_generator(8));
    CHECK(cyq::matrix_order(p8) == 8);
    CHECK(cyq::is_unitary(p8));

    // Row/column sums are 1: the all-ones vector is fixed.
    const CycVector ones = CycVector::Constant(8, Cyclotomic(1));
    CHECK(cyq::exact_equal(p8 * ones, ones));

    CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("permutation matrix is a homomorphism") {
    std::mt19937 rng(41);
    for (int i = 0; i < 20; ++i) {
        const Permutation p = random_permutation(6, rng);
        const Permutation q = random_permutation(6, rng);
        CHECK(cyq::exact_equal(cyq::permutation_matrix(p * q),
                               cyq::permutation_matrix(p) * cyq::permutation_matrix(q)));
    }
    const Permutation p = random_permutation(6, rng);
    CHECK(p * p.inverse() == Permutation::identity(6));
}

TEST_CASE("element orders") {
    CHECK(cyq::element_order(Permutation::identity(5)) == 1);
    CHECK(cyq::element_order(cyq::cycle_generator(8)) == 8);
    // Disjoint 2-cycle and 3-cycle: order lcm(2,3) = 6.
    CHECK(cyq::element_order(Permutation({1, 0, 3, 4, 2})) == 6);
    CHECK(cyq::group_exponent_cyclic(8) == 8);
}

TEST_CASE("mz splitter") {
    const CycMatrix s8 = cyq::mz_splitter(8);
    // At N = 8: z + z^7 = z - z^3 and z - z^7 = z + z^3, so S_8 is exactly
    // the cyclotomic 50/50 splitter.
    const Cyclotomic z = cyq::root_of_unity(8, 1);
    const Cyclotomic z3 = cyq::root_of_unity(8, 3);
    const Cyclotomic half(Rational(1) / 2);
    CycMatrix expected(2, 2);
    expected << (z - z3) * half, (z + z3) * half, (z + z3) * half, (z - z3) * half;
    CHECK(cyq::exact_equal(s8, expected));
    CHECK(cyq::matrix_order(s8) == 8);

    CHECK(cyq::matrix_order(cyq::mz_splitter(4)) == 4);
    for (unsigned n = 3; n <= 32; ++n) {
        const CycMatrix s = cyq::mz_splitter(n);
        CHECK(cyq::is_unitary(s));
        CHECK(cyq::matrix_order(s, 64) == n);
    }
    CHECK_THROWS_AS(cyq::mz_splitter(2), std::invalid_argument);
}

TEST_CASE("icosahedral triplet") {
    const cyq::GeneratedRep rep = cyq::a5_rep3prime();
    REQUIRE(rep.size() == 3);
    CHECK(rep.generators[0].first == "U");
    CHECK(cyq::matrix_order(rep.matrix(0), 10) == 2);
    CHECK(cyq::matrix_order(rep.matrix(1), 10) == 3);
    CHECK(cyq::matrix_order(rep.matrix(2), 10) == 5);
    for (std::size_t i = 0; i < 3; ++i) CHECK(cyq::is_unitary(rep.matrix(i)));

    // V is a cyclic 3x3 permutation matrix (the inverse cycle in the
    // coordinate-pullback convention used by permutation_matrix).
    CHECK(cyq::exact_equal(rep.matrix(1), cyq::permutation_matrix(Permutation::cycle(3).inverse())));
    CHECK(cyq::matrix_order(rep.matrix(1), 5) == cyq::element_order(Permutation::cycle(3)));

    // Conductor 5 divides the exponent 30 of the icosahedral group.
    CHECK(rep.conductor == 5);
    CHECK(30 % rep.conductor == 0);
}

TEST_CASE("golden ratio identity") {
    const Cyclotomic phi = cyq::golden_ratio();
    CHECK(phi * phi == phi + Cyclotomic(1));
    const Cyclotomic inv_phi = cyq::root_of_unity(5, 1) + cyq::root_of_unity(5, 4);
    CHECK(phi * inv_phi == Cyclotomic(1));
    CHECK(cyq::to_complex(phi).real() == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-12));
}

TEST_CASE("rep validation rejects bad input") {
    cyq::GeneratedRep bad{2, 8, {{"X", CycMatrix::Zero(2, 2)}}};
    CHECK_THROWS_AS(cyq::validate_rep(bad), std::invalid_argument);
}
