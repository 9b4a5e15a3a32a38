#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nsg/combinatorics.hpp"
#include "nsg/poly.hpp"
#include "nsg/quadext.hpp"

using namespace nsg;

TEST_CASE("falling factorial") {
    CHECK(falling_factorial(5, 0) == 1);
    CHECK(falling_factorial(5, 2) == 20);
    CHECK(falling_factorial(3, 4) == 0);  // vanishes once the range crosses zero
    CHECK(falling_factorial(-2, 3) == -24);
    CHECK(falling_factorial(Int("1000000000000"), 2) ==
          Int("999999999999000000000000"));
}

TEST_CASE("stirling numbers of the first kind") {
    CHECK(stirling_first(4, 4) == 1);
    CHECK(stirling_first(5, 4) == 10);  // [n n-1] = C(n,2)
    CHECK(stirling_first(5, 3) == 35);
    CHECK(stirling_first(3, 0) == 0);
    CHECK(stirling_first(0, 0) == 1);
    CHECK(stirling_signed(5, 3) == 35);
    CHECK(stirling_signed(5, 4) == -10);
    CHECK_THROWS_AS((void)stirling_first(3, 5), std::domain_error);
}

TEST_CASE("stirling defining property: sum_k S^n_k x^k = (x)_n") {
    for (unsigned n = 0; n <= 12; ++n)
        for (long x = -10; x <= 10; ++x) {
            Int lhs = 0;
            for (unsigned k = 0; k <= n; ++k)
                lhs += stirling_signed(n, k) * pow_int(Int(x), k);
            CHECK(lhs == falling_factorial(Int(x), n));
        }
}

namespace {

// Closed forms for [n n-k] up to k = 9; polynomial part exact in rationals.
Rat stirling_closed(unsigned n, unsigned k) {
    const Rat N(static_cast<long>(n));
    auto C = [&](unsigned r) { return Rat(binomial(n, r)); };
    switch (k) {
        case 0: return Rat(1);
        case 1: return C(2);
        case 2: return C(3) * (3 * N / 4 - Rat(1, 4));
        case 3: return C(4) * C(2);
        case 4:
            return C(5) * (5 * pow_rat(N, 3) / 16 - 5 * N * N / 8 + 5 * N / 48 +
                           Rat(1, 24));
        case 5:
            return C(6) *
                   (3 * pow_rat(N, 3) / 16 - 5 * N * N / 8 + 5 * N / 16 + Rat(1, 8)) *
                   N;
        case 6:
            return C(7) * (7 * pow_rat(N, 5) / 64 - 35 * pow_rat(N, 4) / 64 +
                           35 * pow_rat(N, 3) / 64 + 91 * N * N / 576 - 7 * N / 96 -
                           Rat(1, 36));
        case 7:
            return C(8) *
                   (pow_rat(N, 5) / 16 - 7 * pow_rat(N, 4) / 16 +
                    35 * pow_rat(N, 3) / 48 + 7 * N * N / 144 - 7 * N / 24 -
                    Rat(1, 9)) *
                   N;
        case 8:
            return C(9) * (9 * pow_rat(N, 7) / 256 - 21 * pow_rat(N, 6) / 64 +
                           105 * pow_rat(N, 5) / 128 - 7 * pow_rat(N, 4) / 32 -
                           469 * pow_rat(N, 3) / 768 - 9 * N * N / 64 +
                           101 * N / 960 + Rat(3, 80));
        case 9:
            return C(10) *
                   (5 * pow_rat(N, 7) / 256 - 15 * pow_rat(N, 6) / 64 +
                    105 * pow_rat(N, 5) / 128 - 7 * pow_rat(N, 4) / 12 -
                    665 * pow_rat(N, 3) / 768 + 25 * N * N / 192 + 101 * N / 192 +
                    Rat(3, 16)) *
                   N;
    }
    throw std::domain_error("stirling_closed: k <= 9");
}

}  // namespace

TEST_CASE("stirling closed forms [n n-k] agree with the recurrence, n <= 12") {
    for (unsigned n = 0; n <= 12; ++n)
        for (unsigned k = 0; k <= 9 && k <= n; ++k) {
            Rat cf = stirling_closed(n, k);
            cf.canonicalize();
            CHECK(is_integer(cf));
            CHECK(Int(cf.get_num()) == stirling_first(n, n - k));
        }
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == Rat(1));
    CHECK(bernoulli(1) == make_rat(-1, 2));  // recurrence convention
    CHECK(bernoulli(2) == make_rat(1, 6));
    CHECK(bernoulli(3) == Rat(0));
    CHECK(bernoulli(4) == make_rat(-1, 30));
    CHECK(bernoulli(8) == make_rat(-1, 30));
    CHECK(bernoulli(12) == make_rat(-691, 2730));
    for (unsigned k = 3; k <= 21; k += 2) CHECK(bernoulli(k) == 0);
}

TEST_CASE("polynomial arithmetic basics") {
    const SignedPolynomial a({Int(1), Int(-1)});  // 1 - z
    const SignedPolynomial b({Int(1), Int(1)});   // 1 + z
    CHECK(poly_mul(a, b) == SignedPolynomial({Int(1), Int(0), Int(-1)}));

    const auto p10 = SignedPolynomial::one_minus_power(10);
    const auto p12 = SignedPolynomial::one_minus_power(12);
    const auto prod = poly_mul(p10, p12);
    auto q = poly_divexact(prod, p10);
    REQUIRE(q.has_value());
    CHECK(*q == p12);

    CHECK_FALSE(poly_divexact(SignedPolynomial::one_minus_power(6),
                              SignedPolynomial::one_minus_power(4))
                    .has_value());
    CHECK_THROWS_AS((void)poly_divexact(p10, SignedPolynomial()),
                    std::invalid_argument);
}

TEST_CASE("poly normal form and evaluation") {
    SignedPolynomial p({Int(3), Int(0), Int(0)});
    CHECK(p.degree() == 0);
    CHECK(SignedPolynomial().degree() == -1);
    CHECK(p.coeff(5) == 0);
    const SignedPolynomial q({Int(1), Int(-2), Int(1)});
    CHECK(q.evaluate(Rat(3)) == Rat(4));
    CHECK(q.coefficient_sum() == 0);
}

TEST_CASE("property: divexact(mul(p,q), q) == p") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 300; ++trial) {
        auto random_poly = [&](bool nonzero) {
            std::vector<Int> c(1 + rng() % 8);
            for (auto& x : c) x = static_cast<long>(rng() % 11) - 5;
            SignedPolynomial p(std::move(c));
            if (nonzero && p.is_zero()) p = SignedPolynomial::one();
            return p;
        };
        const SignedPolynomial p = random_poly(false);
        const SignedPolynomial q = random_poly(true);
        auto back = poly_divexact(poly_mul(p, q), q);
        REQUIRE(back.has_value());
        CHECK(*back == p);
    }
}

TEST_CASE("quadext examples") {
    const Int d(60);
    const QuadExt root(Rat(0), Rat(1), d);
    CHECK(root * root == QuadExt::rational(Rat(60), d));
    const QuadExt x(Rat(1), Rat(1), d);
    CHECK(x * x.conjugate() == QuadExt::rational(Rat(-59), d));
    const QuadExt collapsed(Rat(0), Rat(2), Int(9));
    CHECK(collapsed.is_rational());
    CHECK(collapsed.rational_part() == Rat(6));
    CHECK_THROWS_AS(x + QuadExt(Rat(1), Rat(1), Int(7)), std::domain_error);
    CHECK_THROWS_AS(QuadExt(Rat(1), Rat(1), Int(0)), std::domain_error);
}

TEST_CASE("property: quadext is a commutative ring, conjugation multiplicative") {
    std::mt19937_64 rng(7);
    const Int d(105);
    auto rand_q = [&] {
        return make_rat(static_cast<long>(rng() % 19) - 9,
                        1 + static_cast<long>(rng() % 7));
    };
    for (int trial = 0; trial < 200; ++trial) {
        const QuadExt a(rand_q(), rand_q(), d), b(rand_q(), rand_q(), d),
            c(rand_q(), rand_q(), d);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
        CHECK(a - a == QuadExt::rational(Rat(0), d));
    }
}

TEST_CASE("rationals stay canonical") {
    CHECK(make_rat(6, 4) == make_rat(3, 2));
    CHECK(make_rat(2, -4).get_den() == 2);
    CHECK(make_rat(2, -4).get_num() == -1);
    CHECK_THROWS_AS(make_rat(1, 0), std::invalid_argument);
    CHECK(to_string(make_rat(-7, 3)) == "-7/3");
    CHECK(to_string(make_rat(8, 4)) == "2");
}
