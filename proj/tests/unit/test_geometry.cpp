#include "igrr/kclass.hpp"

#include <doctest.h>

using namespace igrr;

namespace {

DivisorClass dv(std::vector<long> c) { return DivisorClass(std::move(c)); }

Integer binom_in_a(long n, long a) {
    Integer num = 1;
    for (long i = 1; i <= n; ++i) num *= Integer(a + i);
    return num / factorial(static_cast<unsigned>(n));
}

TowerPtr hirzebruch(long e) {
    return Tower::build({TowerLevel{{DivisorClass{}, DivisorClass{}}, "h"}, TowerLevel{{DivisorClass{}, dv({e})}, "t"}});
}

// Canonical class K_X = -c_1(T_X) as a divisor.
DivisorClass canonical(const TowerPtr& t) {
    DivisorClass k;
    const KClass tangent = tangent_class(t);
    for (const auto& [d, m] : tangent.terms()) k = k - d * m.get_si();
    return k;
}

}  // namespace

TEST_CASE("projective space ring and Chern classes") {
    for (int n = 1; n <= 4; ++n) {
        const auto p = Tower::projective_space(n, "h");
        CHECK(p->dimension() == n);
        const auto c = chern_classes(tangent_class(p));
        for (int i = 0; i <= n; ++i) CHECK(c[i].coefficient({i}) == Rational(binomial(n + 1, i)));
        CHECK(p->degree(p->power(p->divisor(hyperplane(0)), n)) == 1);
        CHECK(p->power(p->divisor(hyperplane(0)), n + 1).is_zero());
    }
}

TEST_CASE("Hirzebruch surface relations") {
    for (long e = 0; e <= 3; ++e) {
        const auto t = hirzebruch(e);
        const auto xi = t->divisor(hyperplane(1));
        const auto h = t->divisor(hyperplane(0));
        CHECK(t->multiply(xi, xi) == t->multiply(h, xi) * Rational(e));
        CHECK(t->degree(t->multiply(h, xi)) == 1);
        const auto c = chern_classes(tangent_class(t));
        CHECK(t->degree(c[2]) == 4);
        CHECK(t->degree(t->multiply(c[1], c[1])) == 8);
    }
}

TEST_CASE("reduction order does not matter") {
    const auto t = Tower::build({TowerLevel{{DivisorClass{}, DivisorClass{}, DivisorClass{}}, "h"},
                                 TowerLevel{{DivisorClass{}, dv({1}), dv({2})}, "t"}});
    GradedPolynomial p = t->one() + t->variable(0) * Rational(3) + t->variable(1) * Rational(-2);
    GradedPolynomial raw = p;
    for (int i = 0; i < 5; ++i) raw = raw * p;
    CHECK(t->normal_form_in_order(raw, {0, 1}) == t->normal_form_in_order(raw, {1, 0}));
    CHECK(t->is_normal(t->normal_form(raw)));
}

TEST_CASE("Euler characteristics of products of projective spaces") {
    for (int n = 1; n <= 4; ++n) {
        const auto p = Tower::projective_space(n, "h");
        for (long a = -n - 3; a <= 4; ++a) CHECK(euler_characteristic(KClass::line(p, dv({a}))) == binom_in_a(n, a));
    }
    const auto pp = Tower::build({TowerLevel{{DivisorClass{}, DivisorClass{}}, "h"},
                                  TowerLevel{{DivisorClass{}, DivisorClass{}, DivisorClass{}}, "t"}});
    for (long a = -3; a <= 3; ++a)
        for (long b = -4; b <= 3; ++b)
            CHECK(euler_characteristic(KClass::line(pp, dv({a, b}))) == binom_in_a(1, a) * binom_in_a(2, b));
}

TEST_CASE("Euler characteristics on Hirzebruch surfaces") {
    for (long e = 0; e <= 2; ++e) {
        const auto t = hirzebruch(e);
        for (long a = -3; a <= 3; ++a)
            for (long b = 0; b <= 3; ++b) {
                // Sym^b(O + O(e)) = sum_j O(j e) on P^1
                Integer oracle = 0;
                for (long j = 0; j <= b; ++j) oracle += a + j * e + 1;
                CHECK(euler_characteristic(KClass::line(t, dv({a, b}))) == oracle);
            }
        for (long a = -3; a <= 3; ++a) CHECK(euler_characteristic(KClass::line(t, dv({a, -1}))) == 0);
    }
}

TEST_CASE("Serre duality") {
    const std::vector<TowerPtr> towers{
        Tower::projective_space(2, "h"), Tower::projective_space(3, "h"), hirzebruch(1), hirzebruch(2),
        Tower::build({TowerLevel{{DivisorClass{}, DivisorClass{}, DivisorClass{}}, "h"},
                      TowerLevel{{DivisorClass{}, dv({1})}, "t"}})};
    for (const auto& t : towers) {
        const auto k = canonical(t);
        const int sign = t->dimension() % 2 ? -1 : 1;
        for (long a = -2; a <= 2; ++a) {
            DivisorClass d = hyperplane(0) * a + hyperplane(t->level_count() - 1) * (1 - a);
            const KClass f = KClass::line(t, d) + KClass::line(t, -hyperplane(0));
            CHECK(euler_characteristic(f) == sign * euler_characteristic(f.dual().twist(k)));
        }
    }
}

TEST_CASE("lambda operations") {
    const auto p = Tower::projective_space(2, "h");
    const KClass e = KClass::trivial(p, 1) + KClass::line(p, hyperplane(0));
    CHECK(e.wedge(2) == KClass::line(p, hyperplane(0)));
    CHECK(e.wedge(3).is_zero());
    CHECK(e.sym(2) == KClass::trivial(p, 1) + KClass::line(p, hyperplane(0)) + KClass::line(p, hyperplane(0) * 2));
    CHECK(e.determinant() == KClass::line(p, hyperplane(0)));
    CHECK(e.rank() == 2);
    CHECK_THROWS_AS((KClass::trivial(p, 1) - KClass::line(p, hyperplane(0))).wedge(2), std::domain_error);
    CHECK(e.to_string() == "[O] + [O(h)]");
}

TEST_CASE("K normal forms") {
    const auto p1 = Tower::projective_space(1, "h");
    const KClass minus = KClass::line(p1, dv({-1}));
    CHECK(minus.equivalent(KClass::trivial(p1, 2) - KClass::line(p1, dv({1}))));
    CHECK(minus.normal_form().to_string() == "2[O] - [O(h)]");
    const auto p2 = Tower::projective_space(2, "h");
    const KClass big = KClass::line(p2, dv({5}));
    CHECK(big.normal_form().equivalent(big));
    CHECK(euler_characteristic(big.normal_form()) == 21);
}

TEST_CASE("pushforward and pullback in K") {
    const auto t = hirzebruch(1);
    const KClass pushed = pushforward_k(1, KClass::line(t, dv({0, 2})));
    const auto base = t->base(1);
    CHECK(pushed == KClass::trivial(base, 1) + KClass::line(base, dv({1})) + KClass::line(base, dv({2})));
    CHECK(pushforward_k(1, KClass::line(t, dv({3, -1}))).is_zero());
    CHECK(pullback_k(t, KClass::line(base, dv({1}))) == KClass::line(t, dv({1})));
}

TEST_CASE("Chow pushforward and pullback") {
    const auto t = hirzebruch(1);
    const ChowClass xi(t, t->divisor(hyperplane(1)));
    const auto base = t->base(1);
    CHECK(pushforward_chow(1, xi) == ChowClass::one(base));
    CHECK(pushforward_chow(1, ChowClass::one(t)).is_zero());
    const ChowClass h(base, base->divisor(hyperplane(0)));
    CHECK(pushforward_chow(1, xi * pullback_chow(t, h)) == h);
}

TEST_CASE("Whitney formula") {
    const auto t = hirzebruch(2);
    const KClass e = KClass::line(t, dv({1, 1})) + KClass::line(t, dv({-1}));
    const KClass f = KClass::line(t, dv({0, 2})) - KClass::trivial(t, 1);
    CHECK(total_chern_class(e + f) == total_chern_class(e) * total_chern_class(f));
}

TEST_CASE("complete intersections: degrees and Euler characteristics") {
    const auto p2 = Tower::projective_space(2, "h");
    const auto p3 = Tower::projective_space(3, "h");
    // conic = P^1, plane cubic = elliptic curve, quartic surface = K3
    CHECK(euler_characteristic(VirtualCompleteIntersection(p2, {dv({2})}).structure_sheaf()) == 1);
    CHECK(euler_characteristic(VirtualCompleteIntersection(p2, {dv({3})}).structure_sheaf()) == 0);
    const VirtualCompleteIntersection k3(p3, {dv({4})});
    CHECK(k3.dimension() == 2);
    CHECK(euler_characteristic(k3.structure_sheaf()) == 2);
    const auto c = k3.tangent_chern_classes();
    CHECK(p3->degree(k3.pushforward(c[2])) == 24);
    CHECK(k3.pushforward(c[1]).is_zero());
    // twisted cubic is not a complete intersection; a (2,2) curve in P^3 has genus 1
    const VirtualCompleteIntersection e(p3, {dv({2}), dv({2})});
    CHECK(p3->degree(p3->multiply(e.fundamental_class().polynomial(), p3->divisor(dv({1})))) == 4);
    CHECK(euler_characteristic(e.structure_sheaf()) == 0);
    CHECK(e.describe() == "cut(P(trivial 4) as h over point; 2*h, 2*h)");
}

TEST_CASE("tower construction errors and rendering") {
    CHECK_THROWS(Tower::build({TowerLevel{{DivisorClass{}}, "a"}, TowerLevel{{DivisorClass{}}, "a"}}));
    CHECK_THROWS(Tower::build({TowerLevel{{dv({1})}, "a"}}));
    const auto t = hirzebruch(1);
    CHECK(t->describe() == "P([0, h]) as t over (P(trivial 2) as h over point)");
    CHECK(Tower::point()->dimension() == 0);
    CHECK(*t->base(1) == *Tower::projective_space(1, "h"));
    const auto unnamed = Tower::build({TowerLevel{{DivisorClass{}, DivisorClass{}}, ""}});
    CHECK(unnamed->name_of(0) == "ξ1");
}
