#include "igrr/arith.hpp"

#include <doctest.h>

#include <vector>

using namespace igrr;

namespace {

// T_m straight from the product over primes, with a naive primality test.
Integer todd_denominator_oracle(unsigned m) {
    Integer t = 1;
    for (unsigned p = 2; p <= m + 1; ++p) {
        bool prime = true;
        for (unsigned d = 2; d * d <= p; ++d)
            if (p % d == 0) prime = false;
        if (!prime) continue;
        for (unsigned i = 0; i < m / (p - 1); ++i) t *= p;
    }
    return t;
}

// Akiyama-Tanigawa; it produces B_1 = +1/2, so the sign of n = 1 is flipped.
std::vector<Rational> bernoulli_oracle(unsigned n) {
    std::vector<Rational> out;
    std::vector<Rational> a(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        a[m] = Rational(1, m + 1);
        for (unsigned j = m; j >= 1; --j) {
            a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
            a[j - 1].canonicalize();
        }
        out.push_back(m == 1 ? -a[0] : a[0]);
    }
    return out;
}

}  // namespace

TEST_CASE("todd denominators against the prime product") {
    for (unsigned m = 0; m <= 30; ++m) CHECK(todd_denominator(m).value() == todd_denominator_oracle(m));
    CHECK(todd_denominator(2).value() == 12);
    CHECK(todd_denominator(3).value() == 24);
    CHECK(todd_denominator(4).pretty() == "720 = 2^4·3^2·5");
}

TEST_CASE("m! divides T_m and T_m divides T_m'") {
    for (unsigned m = 0; m <= 30; ++m) {
        CHECK(todd_denominator(m).value() % factorial(m) == 0);
        for (unsigned k = m; k <= 30; ++k) CHECK(todd_denominator(k).value() % todd_denominator(m).value() == 0);
    }
}

TEST_CASE("todd_ratio is exact or throws") {
    CHECK(todd_ratio(4, 2) == 60);
    CHECK(todd_ratio(5, 5) == 1);
    CHECK_THROWS(checked_quotient(7, 2, "odd"));
}

TEST_CASE("bernoulli numbers against Akiyama-Tanigawa") {
    const auto oracle = bernoulli_oracle(40);
    for (unsigned n = 0; n <= 40; ++n) CHECK(bernoulli(n) == oracle[n]);
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("von Staudt denominators") {
    for (unsigned g = 1; g <= 20; ++g) {
        Rational q = bernoulli(2 * g) / Rational(2 * g);
        CHECK(von_staudt_D(g).value() == q.get_den());
    }
    CHECK(von_staudt_D(1).value() == 12);
    CHECK(von_staudt_D(2).value() == 120);
}

TEST_CASE("hodge divisibility 2 (g-1)! D_2g | T_2g") {
    for (unsigned g = 2; g <= 15; ++g) {
        const Integer lhs = Integer(2) * factorial(g - 1) * von_staudt_D(g).value();
        CHECK(todd_denominator(2 * g).value() % lhs == 0);
        CHECK(check_ekedahl_divisibility(g).exact);
    }
}

TEST_CASE("L_n is the radical of T_n/n!") {
    for (unsigned n = 1; n <= 12; ++n) {
        const Integer s = todd_denominator(n).value() / factorial(n);
        Integer rad = 1;
        for (unsigned p = 2; p <= n + 1; ++p) {
            bool prime = true;
            for (unsigned d = 2; d * d <= p; ++d)
                if (p % d == 0) prime = false;
            if (prime && s % p == 0) rad *= p;
        }
        CHECK(fulton_macpherson_L(n).value() == rad);
    }
    CHECK(fulton_macpherson_L(1).value() == 2);
    CHECK(fulton_macpherson_L(2).value() == 6);
}

TEST_CASE("factored integers") {
    const auto a = FactoredInteger::from_small(360);
    CHECK(a.value() == 360);
    CHECK(a.exponent(2) == 3);
    CHECK(a.exponent(7) == 0);
    CHECK(FactoredInteger::factorial(6) == FactoredInteger::from_small(720));
    CHECK(FactoredInteger::from_small(12).divides(a));
    CHECK_FALSE(FactoredInteger::from_small(16).divides(a));
    const auto bad = exact_divide(a, FactoredInteger::from_small(16));
    CHECK_FALSE(bad.exact);
    CHECK(bad.offending_prime == 2);
    CHECK(bad.dividend_exponent == 3);
    CHECK(bad.divisor_exponent == 4);
    CHECK(exact_divide(a, FactoredInteger::from_small(8)).quotient.value() == 45);
}

TEST_CASE("divisibility lemma for T_m") {
    CHECK(check_divisibility_lemma({1, 2}, {}, 4).exact);
    CHECK(check_divisibility_lemma({}, {2, 2}, 4).exact);
    CHECK(check_divisibility_lemma({3}, {1}, 4).exact);
    CHECK_THROWS_AS(check_divisibility_lemma({5}, {}, 4), std::invalid_argument);
}

TEST_CASE("binomials and factorials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 7) == 0);
    CHECK(is_integer(make_rational(6, 3)));
    CHECK_FALSE(is_integer(make_rational(1, 3)));
    CHECK(to_string(make_rational(-2, 4)) == "-1/2");
}
