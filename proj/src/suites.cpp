#include "igrr/suites.hpp"

#include "igrr/fibration.hpp"
#include "igrr/grr.hpp"
#include "igrr/identities.hpp"
#include "igrr/parser.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace igrr {

namespace {

using Task = std::function<VerificationReport()>;

struct Context {
    const SuiteOptions& options;
    const ClassTable& table;
    std::vector<Task> tasks;

    void add(Task t) { tasks.push_back(std::move(t)); }
};

std::vector<VerificationReport> run_tasks(const std::vector<Task>& tasks, unsigned threads) {
    std::vector<VerificationReport> out(tasks.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            const auto start = std::chrono::steady_clock::now();
            VerificationReport r = tasks[i]();
            r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                           .count();
            out[i] = std::move(r);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

VerificationReport guarded(const std::string& id, const std::string& instance, const std::function<VerificationReport()>& f) {
    try {
        return f();
    } catch (const std::exception& e) {
        return VerificationReport::verdict(id, instance, false, "", "", e.what());
    }
}

// First coefficient of p that is not an integer, if any.
std::optional<std::string> non_integral(const GradedPolynomial& p) {
    for (const auto& [e, c] : p.terms())
        if (!is_integer(c)) return p.monomial_string(e) + " has coefficient " + to_string(c);
    return std::nullopt;
}

VerificationReport integral_against(const std::string& id, const std::string& instance, const GradedPolynomial& table,
                                    const GradedPolynomial& independent) {
    auto r = VerificationReport::compare(id, instance, table, independent);
    if (auto bad = non_integral(table)) {
        r.pass = false;
        r.discrepancy = "non-integral: " + *bad + (r.discrepancy.empty() ? "" : "; " + r.discrepancy);
    }
    return r;
}

// ---------------------------------------------------------------- integrality

void integrality(Context& ctx) {
    const int cap = ctx.options.max_degree;
    const ClassTable& t = ctx.table;
    for (int m = 0; m <= std::min(cap, 12); ++m) {
        const std::string inst = "TdNum_" + std::to_string(m);
        ctx.add([&t, m, inst] {
            return guarded("todd-numerator", inst, [&] {
                return integral_against("todd-numerator", inst, t.todd(m), todd_numerator_via_power_sums(m));
            });
        });
    }
    for (int m = 0; m <= std::min(cap, 12); ++m) {
        const std::string inst = "s_" + std::to_string(m);
        ctx.add([&t, m, inst] {
            return guarded("chern-character-numerator", inst, [&] {
                return integral_against("chern-character-numerator", inst, t.chern_character(m),
                                        universal_chern_character(m).second.polynomial);
            });
        });
    }
    for (int m = 0; m <= std::min(cap, 10); ++m) {
        const std::string inst = "CT_" + std::to_string(m);
        ctx.add([&t, m, inst] {
            return guarded("ct-numerator", inst,
                           [&] { return integral_against("ct-numerator", inst, t.ct(m), universal_ct(m).polynomial); });
        });
    }
    for (int m = 1; m <= std::min(cap, 10); ++m) {
        const std::string inst = "Q_" + std::to_string(m);
        ctx.add([&t, m, inst] {
            return guarded("q-numerator", inst,
                           [&] { return integral_against("q-numerator", inst, t.q(m), q_poly(m).polynomial); });
        });
    }
    for (int m = 1; m <= std::min(cap, 10); ++m)
        for (int r = 1; r <= std::min(m, 4); ++r) {
            const std::string inst = "TdInv_" + std::to_string(m - r) + "(r=" + std::to_string(r) + ")";
            ctx.add([&t, m, r, inst] {
                return guarded("todd-inverse-numerator", inst, [&] {
                    return integral_against("todd-inverse-numerator", inst, t.todd_inverse(m, r),
                                            todd_inverse_numerator(m, r).polynomial);
                });
            });
        }
    for (int m = 0; m <= std::min(cap, 12); ++m) {
        const std::string inst = "T_" + std::to_string(m);
        ctx.add([m, inst] {
            std::string values;
            std::string bad;
            const FactoredInteger tm = todd_denominator(static_cast<unsigned>(m));
            for (int j = 0; j <= m; ++j) {
                const auto below = todd_denominator(static_cast<unsigned>(m - j));
                const auto a = exact_divide(tm, FactoredInteger::factorial(static_cast<unsigned>(j)) * below);
                const auto b = exact_divide(tm, below);
                values += (j ? " " : "") + (a.exact ? a.quotient.value().get_str() : std::string("?")) + "|" +
                          (b.exact ? b.quotient.value().get_str() : std::string("?"));
                if (bad.empty() && !a.exact) bad = "T_m/(j! T_(m-j)) at j = " + std::to_string(j) + ": " + a.describe();
                if (bad.empty() && !b.exact) bad = "T_m/T_(m-j) at j = " + std::to_string(j) + ": " + b.describe();
            }
            return VerificationReport::verdict("todd-scalars", inst, bad.empty(), values, "integers", bad);
        });
    }
    for (unsigned g = 1; g <= 20; ++g) {
        const std::string inst = "D_" + std::to_string(2 * g);
        ctx.add([g, inst] {
            const Rational q = bernoulli(2 * g) / Rational(2 * g);
            const Integer den = q.get_den();
            const Integer d = von_staudt_D(g).value();
            return VerificationReport::verdict("von-staudt", inst, d == den, d.get_str(), den.get_str(),
                                               d == den ? "" : "D_2g differs from the denominator of B_2g/2g");
        });
    }
    for (unsigned g = 2; g <= 15; ++g) {
        const std::string inst = "g = " + std::to_string(g);
        ctx.add([g, inst] {
            const auto c = check_ekedahl_divisibility(g);
            return VerificationReport::verdict("hodge-divisibility", inst, c.exact,
                                               c.exact ? c.quotient.value().get_str() : "", "integer",
                                               c.exact ? "" : c.describe());
        });
    }
    for (unsigned n = 1; n <= 12; ++n) {
        const std::string inst = "L_" + std::to_string(n);
        ctx.add([n, inst] {
            const Integer scalar = todd_denominator(n).value() / factorial(n);
            const Integer l = fulton_macpherson_L(n).value();
            std::string bad;
            if (todd_denominator(n).value() % factorial(n) != 0) bad = "n! does not divide T_n";
            if (bad.empty() && scalar % l != 0) bad = "L_n does not divide T_n/n!";
            // every prime of T_n/n! divides L_n, and L_n is squarefree
            for (unsigned p : primes_up_to(n + 1)) {
                const bool in_scalar = scalar % p == 0;
                const bool in_l = l % p == 0;
                if (bad.empty() && in_scalar != in_l) bad = "prime " + std::to_string(p) + " support differs";
                if (bad.empty() && l % (Integer(p) * p) == 0) bad = "L_n is not squarefree at " + std::to_string(p);
            }
            if (bad.empty() && l < 1) bad = "L_n not positive";
            return VerificationReport::verdict("etale-defect", inst, bad.empty(), l.get_str(), scalar.get_str(), bad);
        });
    }
}

// ---------------------------------------------------------- series identities

void series(Context& ctx, const std::optional<std::string>& only = std::nullopt) {
    const int degree = std::min(ctx.options.max_degree, 8);
    const ClassTable& t = ctx.table;
    for (const auto& name : series_identity_names()) {
        if (only && *only != name) continue;
        ctx.add([name, degree, &t] {
            return guarded(name, "degree <= " + std::to_string(degree),
                           [&] { return verify_series_identity(name, degree, t); });
        });
    }
    if (only && *only != "howe") return;
    for (int r = 1; r <= 4; ++r)
        for (int a = -r; a <= 0; ++a)
            ctx.add([r, a] {
                return guarded("howe", "r = " + std::to_string(r) + ", a = " + std::to_string(a),
                               [&] { return check_howe(r, a, r + 4); });
            });
}

// ----------------------------------------------------------- model geometries

struct Geometry {
    std::string spec;
    TowerPtr tower;
};

std::vector<Geometry> geometries(const std::vector<std::string>& specs, int max_dim) {
    std::vector<Geometry> out;
    for (const auto& s : specs) {
        TowerPtr t = parse_tower(s);
        if (t->dimension() <= max_dim) out.push_back({s, t});
    }
    return out;
}

// Every divisor with coefficients in [lo, hi] on the first `levels` levels.
std::vector<DivisorClass> divisor_grid(std::size_t levels, long lo, long hi) {
    std::vector<DivisorClass> out{DivisorClass(std::vector<long>(levels, lo))};
    if (levels == 0) return {DivisorClass{}};
    while (true) {
        std::vector<long> c = out.back().coefficients;
        std::size_t k = 0;
        while (k < levels && c[k] == hi) c[k++] = lo;
        if (k == levels) break;
        ++c[k];
        out.emplace_back(std::move(c));
    }
    return out;
}

ChowClass chow(const TowerPtr& t, const GradedPolynomial& p) { return ChowClass(t, p); }

// Generalized binomial C(n + a, n) as a polynomial in a, so negative a works.
Integer binomial_in_a(long n, long a) {
    Integer num = 1;
    for (long i = 1; i <= n; ++i) num *= Integer(a + i);
    return num / factorial(static_cast<unsigned>(n));
}

void projective_bundle(Context& ctx) {
    const auto geos = geometries(
        {"P(trivial 2) over point", "P(trivial 3) over point", "P(trivial 4) over point",
         "P([0, h]) over (P(trivial 2) over point)", "P([0, 2*h]) over (P(trivial 2) over point)",
         "P(trivial 2) over (P(trivial 2) over point)", "P([0, h, 2*h]) over (P(trivial 2) over point)",
         "P([0, h]) over (P(trivial 3) over point)", "P(trivial 3) over (P(trivial 2) over point)",
         "P([0, ξ2]) over (P([0, h]) over (P(trivial 2) over point))"},
        ctx.options.max_dim);
    for (const auto& g : geos) {
        const TowerPtr t = g.tower;
        const std::size_t levels = t->level_count();
        // Any reduction order lands on the same normal form.
        ctx.add([t, levels, g] {
            return guarded("relation-confluence", g.spec, [&] {
                GradedPolynomial p = t->one();
                for (std::size_t k = 0; k < levels; ++k)
                    p = p + t->variable(k) * Rational(static_cast<long>(k + 1));
                GradedPolynomial raw = p;
                for (int i = 1; i <= t->dimension() + 1; ++i) raw = raw * p;
                std::vector<std::size_t> order(levels);
                std::iota(order.begin(), order.end(), 0);
                std::vector<VerificationReport::Part> parts;
                const GradedPolynomial reference = t->normal_form(raw);
                do {
                    std::string label = "order";
                    for (auto k : order) label += " " + t->name_of(k);
                    parts.push_back({label, t->normal_form_in_order(raw, order), reference});
                } while (std::next_permutation(order.begin(), order.end()));
                return VerificationReport::compare_parts("relation-confluence", g.spec, parts);
            });
        });
        // Chow and K functoriality: collapsing everything at once or level by level.
        ctx.add([t, levels, g] {
            return guarded("functoriality", g.spec, [&] {
                const DivisorClass a = t->ample_class();
                const ChowClass alpha = chow(t, t->power(t->divisor(a * 2 - hyperplane(0)), static_cast<unsigned>(t->dimension())));
                ChowClass stepwise = alpha;
                for (std::size_t k = 0; k < levels; ++k) stepwise = pushforward_chow(1, stepwise);
                const KClass f = KClass::line(t, a - hyperplane(levels - 1) * 2) + KClass::line(t, hyperplane(0));
                KClass k_step = f;
                for (std::size_t k = 0; k < levels; ++k) k_step = pushforward_k(1, k_step);
                return VerificationReport::compare_parts(
                    "functoriality", g.spec,
                    {{"chow", pushforward_chow(levels, alpha).polynomial(), stepwise.polynomial()},
                     {"K", pushforward_k(levels, f).as_polynomial(), k_step.as_polynomial()}});
            });
        });
        if (levels >= 2) {
            ctx.add([t, levels, g] {
                return guarded("projection-formula", g.spec, [&] {
                    const TowerPtr base = t->base(levels - 1);
                    const ChowClass beta = chow(base, base->divisor(base->ample_class() + hyperplane(0)));
                    std::vector<VerificationReport::Part> parts;
                    for (int j = 0; j <= t->level(levels - 1).rank() + 1; ++j) {
                        const ChowClass alpha = chow(t, t->power(t->divisor(t->ample_class()), static_cast<unsigned>(j) + 1));
                        parts.push_back({"chow, alpha = ample^" + std::to_string(j + 1),
                                         pushforward_chow(1, alpha * pullback_chow(t, beta)).polynomial(),
                                         (pushforward_chow(1, alpha) * beta).polynomial()});
                    }
                    const KClass g_base = KClass::line(base, hyperplane(0)) - KClass::line(base, -hyperplane(0));
                    for (long a = -2; a <= 2; ++a) {
                        const KClass f = KClass::line(t, hyperplane(levels - 1) * a + hyperplane(0));
                        parts.push_back({"K, F = " + f.to_string(), pushforward_k(1, f * pullback_k(t, g_base)).as_polynomial(),
                                         (pushforward_k(1, f) * g_base).as_polynomial()});
                    }
                    return VerificationReport::compare_parts("projection-formula", g.spec, parts);
                });
            });
        }
        ctx.add([t, levels, g] {
            return guarded("whitney", g.spec, [&] {
                const KClass e = KClass::line(t, hyperplane(levels - 1)) + KClass::line(t, hyperplane(0) * 2);
                const KClass f = KClass::line(t, -hyperplane(0)) + KClass::line(t, t->ample_class()) + KClass::trivial(t, 1);
                return VerificationReport::compare_parts(
                    "whitney", g.spec,
                    {{"c(E + F)", total_chern_class(e + f).polynomial(),
                      (total_chern_class(e) * total_chern_class(f)).polynomial()},
                     {"c(E - F) c(F)", (total_chern_class(e - f) * total_chern_class(f)).polynomial(),
                      total_chern_class(e).polynomial()}});
            });
        });
        // Products of projective spaces: chi(O(a)) is a product of binomials.
        const bool product = std::all_of(t->levels().begin(), t->levels().end(), [](const TowerLevel& l) {
            return std::all_of(l.summands.begin(), l.summands.end(), [](const DivisorClass& d) { return d.is_zero(); });
        });
        if (product) {
            ctx.add([t, levels, g] {
                return guarded("euler-characteristic", g.spec, [&] {
                    std::string lhs, rhs, bad;
                    for (const auto& d : divisor_grid(levels, -3, 3)) {
                        const Integer chi = euler_characteristic(KClass::line(t, d));
                        Integer oracle = 1;
                        for (std::size_t k = 0; k < levels; ++k) oracle *= binomial_in_a(t->level(k).rank(), d[k]);
                        lhs += chi.get_str() + " ";
                        rhs += oracle.get_str() + " ";
                        if (bad.empty() && chi != oracle)
                            bad = "chi(" + KClass::line(t, d).to_string() + ") = " + chi.get_str() + ", expected " +
                                  oracle.get_str();
                    }
                    return VerificationReport::verdict("euler-characteristic", g.spec, bad.empty(), lhs, rhs, bad);
                });
            });
        }
        const auto& table = ctx.table;
        for (const auto& d : {DivisorClass{}, t->ample_class(), -hyperplane(levels - 1) * 2}) {
            ctx.add([t, d, &table] {
                const MorphismDatum f = MorphismDatum::projection(t, 0);
                return check_rational_image(f, KClass::line(t, d), 0, table);
            });
        }
    }
}

// ------------------------------------------------------------------ immersion

void immersion(Context& ctx) {
    struct Case {
        std::string spec;
        std::vector<std::vector<std::string>> cuts;
    };
    const std::vector<Case> cases{
        {"P(trivial 4) as h over point", {{"h"}, {"2*h"}, {"h", "h"}, {"h", "2*h"}}},
        {"P([0, h]) over (P(trivial 3) as h over point)", {{"ξ2"}, {"h"}, {"ξ2 + h"}, {"h", "ξ2"}}},
        {"P([0, h]) over (P(trivial 2) as h over point)", {{"ξ2"}, {"ξ2 - h"}}},
    };
    const auto& table = ctx.table;
    const int n_max = std::min(3, ctx.options.max_degree);
    for (const auto& c : cases) {
        const TowerPtr t = parse_tower(c.spec);
        if (t->dimension() > ctx.options.max_dim) continue;
        for (const auto& cut : c.cuts) {
            std::vector<DivisorClass> deltas;
            for (const auto& s : cut) {
                const auto ast = parse_class("O(" + s + ")");
                deltas.push_back(resolve_divisor(*ast.divisor, *t, t->level_count()));
            }
            const VirtualCompleteIntersection z(t, deltas);
            const std::vector<KClass> sheaves{KClass::trivial(t, 1), KClass::line(t, hyperplane(0)),
                                              KClass::line(t, -hyperplane(0) * 2),
                                              KClass::line(t, hyperplane(t->level_count() - 1)) - KClass::trivial(t, 1)};
            for (const auto& f : sheaves)
                for (int n = 0; n <= n_max; ++n)
                    ctx.add([z, f, n, &table] { return check_immersion(z, f, n, table); });
        }
    }
}

// ----------------------------------------------------------- divisor calculus

void divisor_calculus(Context& ctx) {
    struct Case {
        std::string spec;
        std::vector<std::string> divisors;
    };
    const std::vector<Case> cases{
        {"P(trivial 4) as h over point", {"h", "2*h"}},
        {"P(trivial 4) as h over point", {"-h", "3*h"}},
        {"P(trivial 4) as h over point", {"2*h", "-2*h"}},
        {"P(trivial 2) as h over point", {"h", "-h"}},
        {"P(trivial 3) as h over point", {"h", "2*h"}},
        {"P([0, h]) over (P(trivial 2) as h over point)", {"h", "ξ2"}},
        {"P([0, h, 2*h]) over (P(trivial 2) as h over point)", {"ξ2", "h", "ξ2 - h"}},
    };
    const auto& table = ctx.table;
    for (const auto& c : cases) {
        const TowerPtr t = parse_tower(c.spec);
        if (t->dimension() > ctx.options.max_dim) continue;
        std::vector<DivisorClass> ds;
        for (const auto& s : c.divisors)
            ds.push_back(resolve_divisor(*parse_class("O(" + s + ")").divisor, *t, t->level_count()));
        for (int m = 1; m <= std::min(3, ctx.options.max_degree); ++m)
            ctx.add([t, ds, m, &table] { return check_divisor_calculus(t, ds, m, table); });
    }
}

// ------------------------------------------------------------ formal families

void kappa(Context& ctx) {
    const auto& table = ctx.table;
    std::vector<int> ns;
    if (ctx.options.n) ns = {*ctx.options.n};
    else
        for (int n = 1; n <= std::min(9, ctx.options.max_degree - 1); ++n) ns.push_back(n);
    for (int n : ns) ctx.add([n, &table] { return check_kappa_identity(n, table); });
}

void surface_det(Context& ctx) {
    const auto& table = ctx.table;
    std::vector<int> ms;
    if (ctx.options.n) ms = {*ctx.options.n};
    else
        for (int m = 0; m <= 6; ++m) ms.push_back(m);
    for (int m : ms) ctx.add([m, &table] { return check_surface_det_identity(m, table); });
}

// --------------------------------------------------------------- main theorem

void main_single(Context& ctx) {
    const auto& o = ctx.options;
    const TowerPtr t = parse_tower(*o.geometry);
    if (t->dimension() > o.max_dim)
        throw std::invalid_argument("geometry of dimension " + std::to_string(t->dimension()) +
                                    " exceeds --max-dim " + std::to_string(o.max_dim));
    const KClass sheaf = parse_sheaf(o.sheaf.value_or("O"), t);
    const std::size_t base = o.base_levels.value_or(0);
    const MorphismDatum f = MorphismDatum::projection(t, base);
    const int base_dim = f.target()->dimension();
    std::vector<int> ns;
    if (o.n) ns = {*o.n};
    else
        for (int n = 0; n <= std::min(3, base_dim); ++n) ns.push_back(n);
    for (int n : ns) {
        if (n < 0 || n + std::max(0, f.relative_dimension()) > o.max_degree)
            throw std::invalid_argument("degree " + std::to_string(n) + " outside the --max-degree guard");
        const auto& table = ctx.table;
        ctx.add([f, sheaf, n, &table] { return check_main_theorem(f, sheaf, n, table); });
    }
}

void main_theorem(Context& ctx) {
    if (ctx.options.geometry) {
        main_single(ctx);
        return;
    }
    const auto& table = ctx.table;
    const int max_dim = std::min(ctx.options.max_dim, 4);
    struct Family {
        std::string spec;
        std::size_t base_levels;
    };
    const std::vector<Family> families{
        // HRR base cases P^d -> point
        {"P(trivial 2) as h over point", 0},
        {"P(trivial 3) as h over point", 0},
        {"P(trivial 4) as h over point", 0},
        {"P(trivial 5) as h over point", 0},
        // identity morphisms
        {"P(trivial 3) as h over point", 1},
        {"P([0, h]) over (P(trivial 2) as h over point)", 2},
        // towers over curves and surfaces
        {"P([0, h]) over (P(trivial 2) as h over point)", 1},
        {"P([0, 2*h]) over (P(trivial 2) as h over point)", 1},
        {"P([0, h]) over (P(trivial 2) as h over point)", 0},
        {"P(trivial 2) over (P(trivial 2) as h over point)", 1},
        {"P([0, h, 2*h]) over (P(trivial 2) as h over point)", 1},
        {"P([0, h]) over (P(trivial 3) as h over point)", 1},
        {"P([0, h, h]) over (P(trivial 3) as h over point)", 1},
        {"P(trivial 3) over (P(trivial 3) as h over point)", 1},
        {"P([0, ξ2]) over (P([0, h]) over (P(trivial 2) as h over point))", 2},
        {"P([0, ξ2]) over (P([0, h]) over (P(trivial 2) as h over point))", 1},
    };
    for (const auto& fam : families) {
        const TowerPtr t = parse_tower(fam.spec);
        if (t->dimension() > max_dim) continue;
        const MorphismDatum f = MorphismDatum::projection(t, fam.base_levels);
        const int base_dim = f.target()->dimension();
        for (const auto& d : divisor_grid(t->level_count(), -2, 2)) {
            const KClass sheaf = KClass::line(t, d);
            for (int n = 0; n <= std::min({3, base_dim, ctx.options.max_degree}); ++n)
                ctx.add([f, sheaf, n, &table] { return check_main_theorem(f, sheaf, n, table); });
        }
    }
    // Non-line sheaves: twists, symmetric and exterior powers, virtual classes.
    const std::vector<std::pair<std::string, std::vector<std::string>>> twisted{
        {"P([0, h]) over (P(trivial 2) as h over point)",
         {"sym(2, O + O(ξ2))", "wedge(2, O(h) + O(ξ2) + O(-h))", "O - O(-ξ2)", "twist(ξ2 - 2*h, dual(O(h) + O(ξ2)))"}},
        {"P([0, h]) over (P(trivial 3) as h over point)",
         {"sym(3, O(ξ2) + O(-h))", "O(h) - O(-ξ2) + O", "twist(-ξ2, sym(2, O(h) + O))"}},
    };
    for (const auto& [spec, sheaves] : twisted) {
        const TowerPtr t = parse_tower(spec);
        if (t->dimension() > max_dim) continue;
        const MorphismDatum f = MorphismDatum::projection(t, 1);
        for (const auto& s : sheaves) {
            const KClass sheaf = parse_sheaf(s, t);
            for (int n = 0; n <= std::min(3, f.target()->dimension()); ++n)
                ctx.add([f, sheaf, n, &table] { return check_main_theorem(f, sheaf, n, table); });
        }
    }
    // Complete intersections over the base.
    struct CutFamily {
        std::string spec;
        std::string cut;
        std::size_t base_levels;
    };
    const std::vector<CutFamily> cuts{
        {"P(trivial 4) over (P(trivial 3) as h over point)", "ξ2 + h", 1},
        {"P(trivial 4) over (P(trivial 2) as h over point)", "2*ξ2", 1},
        {"P([0, 0, 0, h]) over (P(trivial 2) as h over point)", "3*ξ2", 1},
        {"P(trivial 4) as h over point", "2*h", 0},
    };
    for (const auto& c : cuts) {
        const TowerPtr t = parse_tower(c.spec);
        if (t->dimension() > ctx.options.max_dim) continue;
        const DivisorClass delta = resolve_divisor(*parse_class("O(" + c.cut + ")").divisor, *t, t->level_count());
        const MorphismDatum f = MorphismDatum::restricted(VirtualCompleteIntersection(t, {delta}), c.base_levels);
        for (const auto& d : {DivisorClass{}, hyperplane(0), hyperplane(t->level_count() - 1), -hyperplane(0) * 2})
            for (int n = 0; n <= std::min(3, f.target()->dimension()); ++n) {
                const KClass sheaf = KClass::line(t, d);
                ctx.add([f, sheaf, n, &table] { return check_main_theorem(f, sheaf, n, table); });
            }
    }
    // Rational image, determinant formula, composition.
    const std::vector<std::string> towers{"P([0, h]) over (P(trivial 2) as h over point)",
                                          "P([0, h]) over (P(trivial 3) as h over point)",
                                          "P([0, ξ2]) over (P([0, h]) over (P(trivial 2) as h over point))"};
    for (const auto& spec : towers) {
        const TowerPtr t = parse_tower(spec);
        if (t->dimension() > max_dim) continue;
        const std::size_t levels = t->level_count();
        for (const auto& d : {DivisorClass{}, hyperplane(levels - 1) * 2 - hyperplane(0), -hyperplane(levels - 1)}) {
            const KClass sheaf = KClass::line(t, d);
            for (std::size_t base = 0; base < levels; ++base) {
                const MorphismDatum f = MorphismDatum::projection(t, base);
                for (int n = 0; n <= std::min(2, f.target()->dimension()); ++n)
                    ctx.add([f, sheaf, n, &table] { return check_rational_image(f, sheaf, n, table); });
                if (f.target()->dimension() >= 1)
                    ctx.add([f, sheaf, &table] { return check_determinant_formula(f, sheaf, table); });
            }
            for (std::size_t upper = 1; upper < levels; ++upper)
                for (std::size_t lower = 1; upper + lower <= levels; ++lower)
                    for (int n = 0; n <= static_cast<int>(levels - upper - lower); ++n)
                        ctx.add([t, upper, lower, sheaf, n, &table] {
                            return check_composition(t, upper, lower, sheaf, n, table);
                        });
        }
    }
}

using SuiteFn = void (*)(Context&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r{
        {"series-identities", [](Context& c) { series(c); }},
        {"integrality", integrality},
        {"projective-bundle", projective_bundle},
        {"immersion", immersion},
        {"divisor-calculus", divisor_calculus},
        {"kappa", kappa},
        {"surface-det", surface_det},
        {"main-theorem", main_theorem},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, fn] : registry()) n.push_back(name);
        n.push_back("all");
        return n;
    }();
    return names;
}

std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& options) {
    Context ctx{options, options.table ? *options.table : ClassTable::shared(), {}};
    bool found = false;
    for (const auto& [suite, fn] : registry()) {
        if (name == suite || name == "all") {
            fn(ctx);
            found = true;
        }
    }
    if (!found) {
        const auto& ids = series_identity_names();
        if (name != "howe" && std::find(ids.begin(), ids.end(), name) == ids.end())
            throw std::invalid_argument("unknown suite or identity '" + name + "'");
        series(ctx, name);
    }
    return run_tasks(ctx.tasks, options.threads);
}

bool all_pass(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.pass; });
}

}  // namespace igrr
