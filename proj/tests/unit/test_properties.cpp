#include "igrr/grr.hpp"
#include "igrr/parser.hpp"

#include <doctest.h>

#include <random>

using namespace igrr;

namespace {

std::mt19937& rng() {
    static std::mt19937 g(16102026);
    return g;
}

long pick(long lo, long hi) { return lo + static_cast<long>(rng()() % static_cast<unsigned>(hi - lo + 1)); }

// Two-level tower P(O + O(a h) [+ O(b h)]) over P^k.
TowerPtr random_tower() {
    const int k = static_cast<int>(pick(1, 2));
    TowerLevel base{std::vector<DivisorClass>(static_cast<std::size_t>(k + 1)), "h"};
    TowerLevel top{{DivisorClass{}, DivisorClass({pick(-2, 2)})}, "t"};
    if (k == 1 && pick(0, 1)) top.summands.push_back(DivisorClass({pick(-2, 2)}));
    return Tower::build({base, top});
}

DivisorClass random_divisor(std::size_t levels) {
    std::vector<long> c;
    for (std::size_t i = 0; i < levels; ++i) c.push_back(pick(-2, 2));
    return DivisorClass(c);
}

}  // namespace

TEST_CASE("property: grr_error vanishes on random towers and line bundles") {
    for (int trial = 0; trial < 40; ++trial) {
        const auto t = random_tower();
        const auto sheaf = KClass::line(t, random_divisor(2)) - KClass::line(t, random_divisor(2));
        for (std::size_t base = 0; base <= 1; ++base) {
            const auto f = MorphismDatum::projection(t, base);
            for (int n = 0; n <= f.target()->dimension(); ++n) {
                INFO(t->describe() << "; " << sheaf.to_string() << "; n = " << n);
                CHECK(grr_error(f, sheaf, n).is_zero());
            }
        }
    }
}

TEST_CASE("property: K pushforward is additive and commutes with base twists") {
    for (int trial = 0; trial < 40; ++trial) {
        const auto t = random_tower();
        const auto base = t->base(1);
        const KClass a = KClass::line(t, random_divisor(2));
        const KClass b = KClass::line(t, random_divisor(2));
        CHECK(pushforward_k(1, a + b).equivalent(pushforward_k(1, a) + pushforward_k(1, b)));
        const DivisorClass d({pick(-2, 2)});
        CHECK(pushforward_k(1, a.twist(d)).equivalent(pushforward_k(1, a).twist(d)));
    }
}

TEST_CASE("property: Euler characteristic is invariant under normal form and additive") {
    for (int trial = 0; trial < 40; ++trial) {
        const auto t = random_tower();
        const KClass a = KClass::line(t, random_divisor(2)) + KClass::line(t, random_divisor(2));
        CHECK(euler_characteristic(a) == euler_characteristic(a.normal_form()));
        const KClass b = KClass::line(t, random_divisor(2));
        CHECK(euler_characteristic(a - b) == euler_characteristic(a) - euler_characteristic(b));
    }
}

TEST_CASE("property: Chow ring of a tower is commutative and associative") {
    for (int trial = 0; trial < 20; ++trial) {
        const auto t = random_tower();
        auto rnd = [&] {
            return ChowClass(t, t->one() * Rational(pick(-2, 2)) + t->divisor(random_divisor(2)) +
                                    t->multiply(t->divisor(random_divisor(2)), t->divisor(random_divisor(2))));
        };
        const auto x = rnd(), y = rnd(), z = rnd();
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("property: Chern classes of tensor products with a line") {
    // c_top(E (x) L) for rank-1 E is c_1(E) + c_1(L)
    for (int trial = 0; trial < 20; ++trial) {
        const auto t = random_tower();
        const DivisorClass d1 = random_divisor(2), d2 = random_divisor(2);
        const auto c = chern_classes(KClass::line(t, d1) * KClass::line(t, d2));
        CHECK(c[1] == t->divisor(d1 + d2));
    }
}

TEST_CASE("property: parse of describe is the identity on random towers") {
    for (int trial = 0; trial < 20; ++trial) {
        const auto t = random_tower();
        CHECK(*parse_tower(t->describe()) == *t);
    }
}
