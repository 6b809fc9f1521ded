#include "igrr/identities.hpp"
#include "igrr/symmetric.hpp"
#include "igrr/universal.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace igrr;

namespace {

AlphabetPtr roots(int k) {
    std::vector<Variable> v;
    for (int i = 1; i <= k; ++i) v.push_back({"x" + std::to_string(i), 1, VariableRole::root});
    return make_alphabet(v);
}

std::vector<std::string> names(const std::string& prefix, int k) {
    std::vector<std::string> out;
    for (int i = 1; i <= k; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

// Coefficients of x/(1-e^-x) by inverting (1-e^-x)/x = sum (-1)^k x^k/(k+1)!.
std::vector<Rational> todd_coefficients(int n) {
    std::vector<Rational> g(n + 1), f(n + 1);
    Rational fact = 1;
    for (int k = 0; k <= n; ++k) {
        fact *= k + 1;
        g[k] = Rational(k % 2 ? -1 : 1) / fact;
    }
    f[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Rational s = 0;
        for (int j = 1; j <= k; ++j) s += g[j] * f[k - j];
        f[k] = -s;
    }
    return f;
}

// prod_i sum_k a_k x_i^k in degree m, over m roots, reduced to c1..cm.
GradedPolynomial multiplicative_by_roots(const std::vector<Rational>& a, int m, const std::string& prefix) {
    const auto alpha = roots(m);
    GradedPolynomial p = GradedPolynomial::constant(alpha, 1, m);
    for (int i = 0; i < m; ++i) {
        GradedPolynomial f(alpha, m);
        for (int k = 0; k <= m; ++k) {
            Exponents e(m, 0);
            e[i] = k;
            f.add_term(e, a[k]);
        }
        p = p * f;
    }
    return elementary_reduce(p.homogeneous_part(m), names("x", m), names(prefix, m));
}

GradedPolynomial power_sum_by_roots(int m) {
    const auto alpha = roots(m);
    GradedPolynomial p(alpha);
    for (int i = 0; i < m; ++i) {
        Exponents e(m, 0);
        e[i] = m;
        p.add_term(e, 1);
    }
    return elementary_reduce(p, names("x", m), names("cp", m));
}

}  // namespace

TEST_CASE("low-degree Todd classes") {
    const auto& t = ClassTable::shared();
    CHECK(t.todd(0).to_string() == "1");
    CHECK(t.todd(1).to_string() == "c1");
    CHECK(t.todd(2).to_string() == "c1^2 + c2");
    CHECK(t.todd(3).to_string() == "c1*c2");
    CHECK(t.todd(4).to_string() == "-c1^4 + 4*c1^2*c2 + c1*c3 + 3*c2^2 - c4");
}

TEST_CASE("Todd numerators through Chern roots") {
    const auto a = todd_coefficients(8);
    for (int m = 1; m <= 6; ++m) {
        GradedPolynomial oracle = multiplicative_by_roots(a, m, "c");
        oracle *= Rational(todd_denominator(static_cast<unsigned>(m)).value());
        CHECK(oracle.to_canonical() == ClassTable::shared().todd(m).to_canonical());
    }
}

TEST_CASE("Todd numerators through power sums agree") {
    for (int m = 0; m <= 10; ++m)
        CHECK(todd_numerator_via_power_sums(m).to_canonical() == ClassTable::shared().todd(m).to_canonical());
}

TEST_CASE("Chern character numerators are Newton power sums") {
    const auto& t = ClassTable::shared();
    CHECK(t.chern_character(0).to_string() == "r");
    CHECK(t.chern_character(1).to_string() == "cp1");
    CHECK(t.chern_character(2).to_string() == "cp1^2 - 2*cp2");
    CHECK(t.chern_character(3).to_string() == "cp1^3 - 3*cp1*cp2 + 3*cp3");
    for (int m = 1; m <= 7; ++m) CHECK(power_sum_by_roots(m).to_canonical() == t.chern_character(m).to_canonical());
}

TEST_CASE("CT, Q and inverse Todd in low degree") {
    const auto& t = ClassTable::shared();
    CHECK(t.ct(0).to_string() == "r");
    CHECK(t.ct(1).to_string() == "c1*r + 2*cp1");
    CHECK(t.todd_inverse(3, 2).to_string() == "-3*c1");
    CHECK(t.todd_inverse(2, 2).to_string() == "2");
    CHECK_THROWS_AS(t.todd_inverse(1, 2), std::invalid_argument);
}

TEST_CASE("universal numerators are integral") {
    const auto& t = ClassTable::shared();
    for (int m = 0; m <= 12; ++m) {
        CHECK(t.todd(m).is_integral());
        CHECK(t.chern_character(m).is_integral());
    }
    for (int m = 0; m <= 10; ++m) CHECK(t.ct(m).is_integral());
    for (int m = 1; m <= 10; ++m) {
        CHECK(t.q(m).is_integral());
        for (int r = 1; r <= std::min(m, 4); ++r) CHECK(t.todd_inverse(m, r).is_integral());
    }
}

TEST_CASE("Td_m itself is not integral: T_m is needed") {
    for (int m = 1; m <= 8; ++m) {
        const auto [td, num] = universal_todd(m);
        CHECK_FALSE(td.polynomial.is_integral());
        CHECK(num.integral);
    }
}

TEST_CASE("canonical text round trip") {
    const auto& t = ClassTable::shared();
    for (int m = 0; m <= 6; ++m) {
        const GradedPolynomial p = t.ct(m);
        const GradedPolynomial back = GradedPolynomial::from_canonical(p.alphabet(), p.to_canonical());
        CHECK(back == p);
    }
    CHECK(t.todd(3).to_canonical() == "1/1 c1^1 c2^1\n");
}

TEST_CASE("polynomial arithmetic with truncation") {
    const auto a = chern_alphabet(3);
    const auto c1 = GradedPolynomial::variable(a, "c1", 3);
    const auto c2 = GradedPolynomial::variable(a, "c2", 3);
    const auto p = (c1 + c2) * (c1 + c2);
    CHECK(p.to_string() == "c1^2 + 2*c1*c2");
    CHECK(p.max_degree() == 3);
    CHECK((p - p).is_zero());
    CHECK(first_difference(p, c1 * c1).find("c1^1 c2^1") != std::string::npos);
}

TEST_CASE("elementary reduction round trip on random symmetric polynomials") {
    std::mt19937 rng(20261016);
    for (int trial = 0; trial < 40; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 5);
        const auto alpha = roots(k);
        GradedPolynomial p(alpha);
        for (int term = 0; term < 3; ++term) {
            Exponents e(k, 0);
            int budget = static_cast<int>(rng() % 9);
            for (int i = 0; i < k && budget > 0; ++i) {
                e[i] = static_cast<int>(rng() % (budget + 1));
                budget -= e[i];
            }
            const Rational c = make_rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3));
            std::vector<int> perm(k);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                Exponents f(k);
                for (int i = 0; i < k; ++i) f[perm[i]] = e[i];
                p.add_term(f, c);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        const auto reduced = elementary_reduce(p, names("x", k));
        const auto e = elementary_polynomials(alpha, names("x", k));
        GradedPolynomial::Valuation v;
        for (int i = 1; i <= k; ++i) v.emplace("e" + std::to_string(i), e[i]);
        CHECK(reduced.substitute(v, alpha) == p);
    }
}

TEST_CASE("elementary reduction rejects non-symmetric input") {
    const auto alpha = roots(2);
    const auto x1 = GradedPolynomial::variable(alpha, "x1");
    CHECK_THROWS_AS(elementary_reduce(x1, names("x", 2)), NonSymmetricError);
}

TEST_CASE("series identities through degree 8") {
    for (const auto& name : series_identity_names()) {
        const auto r = verify_series_identity(name, 8);
        CHECK_MESSAGE(r.pass, name << ": " << r.discrepancy);
    }
    CHECK_THROWS_AS(verify_series_identity("no-such-identity", 3), std::invalid_argument);
}

TEST_CASE("Howe reduction") {
    for (int r = 1; r <= 4; ++r)
        for (int a = -r; a <= 0; ++a) CHECK(check_howe(r, a, r + 4).pass);
    const auto h = howe_reduce(1, 0, 4);
    CHECK(h.coefficients.size() == 2);
    CHECK(h.coefficients[1].to_string() == "1");
}

TEST_CASE("a mutated Todd coefficient no longer matches the independent route") {
    ClassTable t;
    t.mutate(ClassKind::todd, 4, "c1^4", 1);
    CHECK(t.mutated());
    CHECK(t.todd(4).to_string() == "4*c1^2*c2 + c1*c3 + 3*c2^2 - c4");
    CHECK(t.todd(4) != todd_numerator_via_power_sums(4));
    CHECK(t.ct(4) != universal_ct(4).polynomial);
    CHECK_THROWS_AS(t.mutate(ClassKind::ct, 2, "c1^2", 1), std::invalid_argument);
}
