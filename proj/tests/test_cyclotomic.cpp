#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyq/cyclotomic.hpp"
#include "support/oracles.hpp"

#include <complex>
#include <random>
#include <vector>

using cyq::BigInt;
using cyq::Cyclotomic;
using cyq::Rational;

namespace {

Cyclotomic zeta(unsigned n, long long k) { return cyq::root_of_unity(n, k); }

// Random element with small coefficients, fixed seed for reproducibility.
Cyclotomic random_element(unsigned n, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<Rational> raw(n);
    for (auto& c : raw) c = Rational(num(rng)) / Rational(den(rng));
    return Cyclotomic::from_power_coeffs(n, std::move(raw));
}

}  // namespace

TEST_CASE("cyclotomic polynomial values") {
    CHECK(cyq::cyclotomic_polynomial(8) == std::vector<BigInt>{1, 0, 0, 0, 1});   // x^4 + 1
    CHECK(cyq::cyclotomic_polynomial(1) == std::vector<BigInt>{-1, 1});           // x - 1
    CHECK(cyq::cyclotomic_polynomial(12) == std::vector<BigInt>{1, 0, -1, 0, 1}); // x^4 - x^2 + 1
    CHECK(cyq::cyclotomic_polynomial(2) == std::vector<BigInt>{1, 1});
    CHECK(cyq::cyclotomic_polynomial(5) == std::vector<BigInt>{1, 1, 1, 1, 1});
}

TEST_CASE("product of Phi_d over divisors equals x^n - 1 (independent multiply)") {
    for (unsigned n = 1; n <= 128; ++n) {
        std::vector<BigInt> product{BigInt(1)};
        for (unsigned d = 1; d <= n; ++d)
            if (n % d == 0) product = oracles::poly_mul(product, cyq::cyclotomic_polynomial(d));
        CHECK(product == oracles::x_pow_n_minus_1(n));
    }
}

TEST_CASE("cyclotomic polynomial degree is the totient") {
    for (unsigned n : {1u, 2u, 8u, 12u, 100u, 128u})
        CHECK(cyq::cyclotomic_polynomial(n).size() == cyq::euler_totient(n) + 1);
}

TEST_CASE("conductor ceiling enforced") {
    CHECK_THROWS_AS(cyq::root_of_unity(20'000, 1), cyq::resource_error);
    CHECK_THROWS_AS(cyq::root_of_unity(0, 1), std::invalid_argument);
}

TEST_CASE("roots of unity reduce to normal form") {
    CHECK(zeta(8, 0) == Cyclotomic(1));
    CHECK(zeta(8, 4) == Cyclotomic(-1));
    CHECK(zeta(8, 9) == zeta(8, 1));
    CHECK(zeta(8, -1) == zeta(8, 7));
    CHECK(zeta(1, 0) == Cyclotomic(1));
    CHECK(zeta(2, 1) == Cyclotomic(-1));
}

TEST_CASE("ring operations") {
    CHECK(zeta(8, 1) * zeta(8, 7) == Cyclotomic(1));
    const Cyclotomic s = zeta(8, 1) - zeta(8, 3);
    CHECK(s * s == Cyclotomic(2));  // (zeta - zeta^3)^2 = 2
    std::mt19937 rng(7);
    const Cyclotomic a = random_element(8, rng);
    CHECK(a + Cyclotomic(0) == a);
    CHECK(a - a == Cyclotomic(0));
    CHECK(-(-a) == a);
}

TEST_CASE("mixed conductors promote to the lcm") {
    CHECK(zeta(8, 2) == zeta(4, 1));           // both are i
    CHECK(zeta(4, 1) * zeta(4, 1) == Cyclotomic(-1));
    const Cyclotomic x = zeta(2, 1) * zeta(3, 1);
    CHECK(x == zeta(6, 5));  // zeta_2 * zeta_3 = zeta_6^3 * zeta_6^2
    CHECK(x.conductor() == 6);
    CHECK(zeta(8, 1) + zeta(12, 1) == zeta(24, 3) + zeta(24, 2));
}

TEST_CASE("conductor promotion") {
    const Cyclotomic a = zeta(8, 1) + Cyclotomic(2);
    CHECK(a.promoted(8) == a);
    CHECK(a.promoted(24) == a);
    CHECK(a.promoted(24).conductor() == 24);
    CHECK_THROWS_AS(a.promoted(12), std::invalid_argument);   // 12 is not a multiple of 8
    CHECK_THROWS_AS(a.promoted(16000), cyq::resource_error);
}

TEST_CASE("inversion") {
    CHECK(cyq::invert(Cyclotomic(1)) == Cyclotomic(1));
    CHECK(cyq::invert(zeta(8, 1)) == zeta(8, 7));
    const Cyclotomic a = Cyclotomic(1) + zeta(5, 1);
    CHECK(a * cyq::invert(a) == Cyclotomic(1));  // verified by multiplication
    CHECK_THROWS_AS(cyq::invert(Cyclotomic(0)), std::domain_error);
    CHECK(Cyclotomic(3) / Cyclotomic(4) == Cyclotomic(Rational(3) / 4));
}

TEST_CASE("conjugation") {
    CHECK(cyq::conj(zeta(8, 1)) == zeta(8, 7));
    CHECK(cyq::conj(Cyclotomic(Rational(22) / 7)) == Cyclotomic(Rational(22) / 7));
    const Cyclotomic real_combo = zeta(5, 1) + zeta(5, 4);
    CHECK(cyq::conj(real_combo) == real_combo);
    CHECK(std::abs(cyq::to_complex(real_combo).imag()) < 1e-12);
    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
        const Cyclotomic a = random_element(8, rng);
        CHECK(cyq::conj(cyq::conj(a)) == a);
    }
}

TEST_CASE("conjugation is a ring homomorphism") {
    std::mt19937 rng(13);
    for (unsigned n : {5u, 8u, 12u}) {
        for (int i = 0; i < 30; ++i) {
            const Cyclotomic a = random_element(n, rng);
            const Cyclotomic b = random_element(n, rng);
            CHECK(cyq::conj(a * b) == cyq::conj(a) * cyq::conj(b));
            CHECK(cyq::conj(a + b) == cyq::conj(a) + cyq::conj(b));
        }
    }
}

TEST_CASE("abs_squared") {
    CHECK(cyq::abs_squared(zeta(8, 1)) == Cyclotomic(1));
    CHECK(cyq::abs_squared(Cyclotomic(0)) == Cyclotomic(0));
    const Cyclotomic v = cyq::abs_squared(Cyclotomic(1) + zeta(8, 1));
    CHECK(v == Cyclotomic(2) + zeta(8, 1) + zeta(8, 7));
    CHECK(cyq::is_real(v));
    CHECK(cyq::to_complex(v).real() == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-12));

    std::mt19937 rng(17);
    for (unsigned n : {5u, 8u}) {
        for (int i = 0; i < 40; ++i) {
            const Cyclotomic a = random_element(n, rng);
            const Cyclotomic sq = cyq::abs_squared(a);
            CHECK(cyq::is_real(sq));
            CHECK(cyq::to_complex(sq).real() >= -1e-12);
        }
    }
}

TEST_CASE("rationality and reality predicates") {
    CHECK(cyq::is_rational(Cyclotomic(Rational(3) / 4)));
    CHECK(cyq::as_rational(Cyclotomic(Rational(3) / 4)) == Rational(3) / 4);
    CHECK_FALSE(cyq::is_real(zeta(8, 1)));
    const Cyclotomic golden_cos = zeta(5, 1) + zeta(5, 4);  // 2 cos 72deg
    CHECK(cyq::is_real(golden_cos));
    CHECK_FALSE(cyq::is_rational(golden_cos));
    CHECK_THROWS_AS(cyq::as_rational(golden_cos), std::domain_error);
    // A value whose irrational parts cancel must report rational.
    CHECK(cyq::is_rational(zeta(8, 1) + zeta(8, 5)));  // zeta^5 = -zeta
    CHECK(cyq::as_rational(zeta(8, 1) + zeta(8, 5)) == 0);
}

TEST_CASE("naturality predicate") {
    CHECK(cyq::is_natural(Cyclotomic(3)));
    CHECK_FALSE(cyq::is_natural(Cyclotomic(-3)));
    CHECK_FALSE(cyq::is_natural(Cyclotomic(Rational(1) / 2)));
    CHECK(cyq::is_natural(zeta(8, 4)));           // -1 = zeta_8^4 is a natural combination
    CHECK(cyq::is_natural(zeta(8, 1) - zeta(8, 3)));
    CHECK_FALSE(cyq::is_natural(zeta(8, 1) / Cyclotomic(2)));
    CHECK(cyq::is_cyclotomic_integer(zeta(5, 2) + zeta(5, 3)));
}

TEST_CASE("float embedding") {
    const auto one = cyq::to_complex(Cyclotomic(1));
    CHECK(one.real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(one.imag() == doctest::Approx(0.0).epsilon(1e-14));
    const auto z8 = cyq::to_complex(zeta(8, 1));
    CHECK(z8.real() == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-12));
    CHECK(z8.imag() == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-12));
    const auto z4 = cyq::to_complex(zeta(4, 1));
    CHECK(std::abs(z4.real()) < 1e-12);
    CHECK(z4.imag() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("float embedding is multiplicative within 1e-9") {
    std::mt19937 rng(19);
    for (unsigned n : {5u, 8u, 12u}) {
        for (int i = 0; i < 30; ++i) {
            const Cyclotomic a = random_element(n, rng);
            const Cyclotomic b = random_element(n, rng);
            const auto lhs = cyq::to_complex(a * b);
            const auto rhs = cyq::to_complex(a) * cyq::to_complex(b);
            CHECK(std::abs(lhs - rhs) < 1e-9);
        }
    }
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(23);
    for (unsigned n : {5u, 8u}) {
        for (int i = 0; i < 25; ++i) {
            const Cyclotomic a = random_element(n, rng);
            const Cyclotomic b = random_element(n, rng);
            const Cyclotomic c = random_element(n, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK(a * cyq::invert(a) == Cyclotomic(1));
        }
    }
}

TEST_CASE("normal form is canonical") {
    // Reduction is idempotent: rebuilding from reduced coefficients is a no-op.
    std::mt19937 rng(29);
    for (int i = 0; i < 40; ++i) {
        const Cyclotomic a = random_element(12, rng);
        auto coeffs = a.coeffs();
        const Cyclotomic again = Cyclotomic::from_power_coeffs(a.conductor(), std::move(coeffs));
        CHECK(again == a);
        CHECK(again.coeffs() == a.coeffs());
    }
    // Distinct reduced vectors are distinct values.
    CHECK(zeta(8, 1) != zeta(8, 2));
    CHECK(Cyclotomic(1) + zeta(8, 1) != zeta(8, 1));
}

TEST_CASE("rendering and parsing round-trip") {
    CHECK(cyq::to_string(Cyclotomic(0)) == "0@1");
    CHECK(cyq::to_string(zeta(8, 1)) == "1*z@8");
    CHECK(cyq::to_string(Cyclotomic(2) + zeta(8, 1) - zeta(8, 3)) == "2 + 1*z - 1*z^3@8");
    CHECK(cyq::parse_cyclotomic("1*z@8") == zeta(8, 1));
    CHECK(cyq::parse_cyclotomic("-1/2 + z^2@8") == Cyclotomic(Rational(-1) / 2) + zeta(8, 2));
    CHECK(cyq::parse_cyclotomic("3/4") == Cyclotomic(Rational(3) / 4));
    CHECK(cyq::parse_cyclotomic("z^9@8") == zeta(8, 1));
    CHECK_THROWS_AS(cyq::parse_cyclotomic("1 + @8"), std::invalid_argument);
    CHECK_THROWS_AS(cyq::parse_cyclotomic("q@8"), std::invalid_argument);
    CHECK_THROWS_AS(cyq::parse_cyclotomic("1@0"), std::invalid_argument);

    std::mt19937 rng(31);
    for (unsigned n : {1u, 5u, 8u, 12u}) {
        for (int i = 0; i < 25; ++i) {
            const Cyclotomic a = random_element(n, rng);
            CHECK(cyq::parse_cyclotomic(cyq::to_string(a)) == a);
        }
    }
}
