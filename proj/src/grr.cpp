#include "igrr/grr.hpp"

#include <stdexcept>

namespace igrr {

namespace {

std::vector<GradedPolynomial> source_tangent(const MorphismDatum& f, bool relative) {
    const std::size_t over = relative ? f.target_levels : 0;
    if (f.cut) return f.cut->tangent_chern_classes(over);
    return chern_classes(tangent_class(f.ambient, over));
}

std::vector<GradedPolynomial> tower_tangent(const TowerPtr& t) { return chern_classes(tangent_class(t)); }

std::string describe_instance(const MorphismDatum& f, const KClass& sheaf, int n) {
    return f.describe() + "; F = " + sheaf.to_string() + "; n = " + std::to_string(n);
}

VerificationReport failure(const std::string& identity, const std::string& instance, const std::exception& e) {
    return VerificationReport::verdict(identity, instance, false, "", "", e.what());
}

struct TheoremSides {
    GradedPolynomial lhs, rhs;
};

// CT_n(G, S) on the target tower.
GradedPolynomial target_ct(const KClass& g, int n, const ClassTable& table) {
    const TowerPtr& s = g.tower();
    if (n < 0 || n > s->dimension()) return s->zero();
    const auto tangent = tower_tangent(s);
    const ChernData data = chern_data(g);
    return evaluate_on_tower(table.ct(n), *s, &tangent, &data);
}

GradedPolynomial target_todd(const TowerPtr& s, int j, const ClassTable& table) {
    if (j < 0 || j > s->dimension()) return s->zero();
    const auto tangent = tower_tangent(s);
    return evaluate_on_tower(table.todd(j), *s, &tangent, nullptr);
}

TheoremSides theorem_sides(const MorphismDatum& f, const KClass& sheaf, int n, const ClassTable& table) {
    const int d = f.relative_dimension();
    const KClass pushed = f.pushforward(sheaf);
    const TowerPtr s = pushed.tower();
    TheoremSides out{s->zero(), s->zero()};
    if (d >= 0) {
        out.lhs = target_ct(pushed, n, table) * todd_quotient(d + n, n);
        out.rhs = f.pushforward(source_ct(f, sheaf, d + n, false, table));
    } else {
        out.lhs = target_ct(pushed, n, table);
        if (n + d >= 0) out.rhs = f.pushforward(source_ct(f, sheaf, n + d, false, table)) * todd_quotient(n, n + d);
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------

MorphismDatum MorphismDatum::projection(TowerPtr tower, std::size_t target_levels) {
    if (target_levels > tower->level_count()) throw std::invalid_argument("target has more levels than the source");
    MorphismDatum f;
    f.ambient = std::move(tower);
    f.target_levels = target_levels;
    return f;
}

MorphismDatum MorphismDatum::restricted(VirtualCompleteIntersection z, std::size_t target_levels) {
    if (target_levels > z.ambient->level_count()) throw std::invalid_argument("target has more levels than the source");
    MorphismDatum f;
    f.ambient = z.ambient;
    f.cut = std::move(z);
    f.target_levels = target_levels;
    return f;
}

MorphismDatum MorphismDatum::immersion(VirtualCompleteIntersection z) {
    const std::size_t levels = z.ambient->level_count();
    return restricted(std::move(z), levels);
}

TowerPtr MorphismDatum::target() const { return ambient->base(target_levels); }

int MorphismDatum::source_dimension() const { return cut ? cut->dimension() : ambient->dimension(); }

int MorphismDatum::relative_dimension() const { return source_dimension() - target()->dimension(); }

std::string MorphismDatum::describe() const {
    const std::string source = cut ? cut->describe() : ambient->describe();
    return source + " -> " + target()->describe();
}

KClass MorphismDatum::pushforward(const KClass& f) const {
    const KClass on_ambient = cut ? cut->pushforward_k(f) : f;
    return pushforward_k(collapsed_levels(), on_ambient);
}

GradedPolynomial MorphismDatum::pushforward(const GradedPolynomial& alpha) const {
    const GradedPolynomial on_ambient = cut ? cut->pushforward(alpha) : ambient->normal_form(alpha);
    return pushforward_polynomial(*ambient, collapsed_levels(), on_ambient);
}

ChernData chern_data(const KClass& f) { return {f.rank(), chern_classes(f)}; }

GradedPolynomial evaluate_on_tower(const GradedPolynomial& universal, const Tower& tower,
                                   const std::vector<GradedPolynomial>* tangent, const ChernData* sheaf,
                                   const GradedPolynomial* divisor) {
    const int trunc = tower.dimension();
    GradedPolynomial::Valuation v;
    auto pick = [&](const std::vector<GradedPolynomial>& classes, std::size_t i) {
        return i < classes.size() ? classes[i] : tower.zero();
    };
    for (const auto& var : universal.alphabet()->variables()) {
        switch (var.role) {
            case VariableRole::chern:
                if (tangent) v.emplace(var.name, pick(*tangent, std::stoul(var.name.substr(1))));
                break;
            case VariableRole::chern_prime:
                if (sheaf) v.emplace(var.name, pick(sheaf->classes, std::stoul(var.name.substr(2))));
                break;
            case VariableRole::rank:
                if (sheaf) v.emplace(var.name, GradedPolynomial::constant(tower.alphabet(), Rational(sheaf->rank)));
                break;
            case VariableRole::divisor:
                if (divisor) v.emplace(var.name, *divisor);
                break;
            default:
                break;
        }
    }
    return tower.normal_form(
        universal.substitute(v, tower.alphabet(), trunc, [&](const GradedPolynomial& p) { return tower.normal_form(p); }));
}

ChowClass ct_class(const KClass& f, int m, std::size_t relative_over, const ClassTable& table) {
    const TowerPtr& t = f.tower();
    if (m < 0 || m > t->dimension()) return ChowClass::zero(t);
    const auto tangent = chern_classes(tangent_class(t, relative_over));
    const ChernData data = chern_data(f);
    return ChowClass(t, evaluate_on_tower(table.ct(m), *t, &tangent, &data));
}

ChowClass ct_class(const KClass& f, const VirtualCompleteIntersection& z, int m, std::size_t relative_over,
                   const ClassTable& table) {
    const TowerPtr& t = z.ambient;
    if (m < 0 || m > z.dimension()) return ChowClass::zero(t);
    const auto tangent = z.tangent_chern_classes(relative_over);
    const ChernData data = chern_data(f);
    return ChowClass(t, z.pushforward(evaluate_on_tower(table.ct(m), *t, &tangent, &data)));
}

GradedPolynomial source_ct(const MorphismDatum& f, const KClass& sheaf, int m, bool relative,
                           const ClassTable& table) {
    const TowerPtr& t = f.ambient;
    if (m < 0 || m > f.source_dimension()) return t->zero();
    const auto tangent = source_tangent(f, relative);
    const ChernData data = chern_data(sheaf);
    return evaluate_on_tower(table.ct(m), *t, &tangent, &data);
}

ChowClass grr_error(const MorphismDatum& f, const KClass& sheaf, int n, const ClassTable& table) {
    const TheoremSides sides = theorem_sides(f, sheaf, n, table);
    return ChowClass(f.target(), sides.lhs - sides.rhs);
}

GradedPolynomial s_class(const KClass& f, int m, const ClassTable& table) {
    const TowerPtr& t = f.tower();
    if (m < 0) return t->zero();
    if (m > t->dimension()) return t->zero();
    const ChernData data = chern_data(f);
    return evaluate_on_tower(table.chern_character(m), *t, nullptr, &data);
}

VerificationReport check_main_theorem(const MorphismDatum& f, const KClass& sheaf, int n, const ClassTable& table) {
    const std::string id = "main-theorem";
    const std::string instance = describe_instance(f, sheaf, n);
    try {
        const int d = f.relative_dimension();
        std::vector<VerificationReport::Part> parts;
        const TheoremSides sides = theorem_sides(f, sheaf, n, table);
        parts.push_back({"theorem", sides.lhs, sides.rhs});
        if (d >= 0) {
            const KClass pushed = f.pushforward(sheaf);
            const TowerPtr s = pushed.tower();
            const Rational scale = todd_quotient(d + n, factorial(static_cast<unsigned>(n)), 0);
            parts.push_back({"fibrewise", s_class(pushed, n, table) * scale,
                             f.pushforward(source_ct(f, sheaf, d + n, true, table))});

            GradedPolynomial split = s->zero();
            GradedPolynomial unwound = s->zero();
            for (int j = 0; j <= n; ++j) {
                const Rational c = todd_quotient(d + n, todd_denominator(static_cast<unsigned>(j)).value(), d + n - j);
                const GradedPolynomial td = target_todd(s, j, table);
                const GradedPolynomial relative = f.pushforward(source_ct(f, sheaf, d + n - j, true, table));
                split += s->multiply(relative, td) * c;
                const Rational inner = todd_quotient(d + n - j, factorial(static_cast<unsigned>(n - j)), 0);
                unwound += s->multiply(s_class(pushed, n - j, table) * inner, td) * c;
            }
            parts.push_back({"splitting", sides.rhs, split});
            parts.push_back({"unwinding", sides.lhs, unwound});
        }
        return VerificationReport::compare_parts(id, instance, parts);
    } catch (const std::exception& e) {
        return failure(id, instance, e);
    }
}

VerificationReport check_immersion(const VirtualCompleteIntersection& z, const KClass& sheaf, int n,
                                   const ClassTable& table) {
    const std::string id = "immersion";
    const MorphismDatum f = MorphismDatum::immersion(z);
    const std::string instance = describe_instance(f, sheaf, n);
    try {
        const TowerPtr& w = z.ambient;
        const int r = z.codimension();
        std::vector<VerificationReport::Part> parts;
        const TheoremSides sides = theorem_sides(f, sheaf, n, table);
        parts.push_back({"theorem", sides.lhs, sides.rhs});

        const KClass pushed = z.pushforward_k(sheaf);
        const auto normal = chern_classes(z.normal_bundle());
        for (int m = 0; m <= w->dimension(); ++m) {
            GradedPolynomial rhs = w->zero();
            for (int l = r; l <= m; ++l) {
                const GradedPolynomial inv = evaluate_on_tower(table.todd_inverse(l, r), *w, &normal, nullptr);
                rhs += z.pushforward(w->multiply(s_class(sheaf, m - l, table), inv)) * Rational(binomial(m, l));
            }
            parts.push_back({"s_" + std::to_string(m), s_class(pushed, m, table), rhs});
        }

        const auto tz = z.tangent_chern_classes();
        const auto tw = tower_tangent(w);
        for (int m = r; m <= w->dimension(); ++m) {
            const GradedPolynomial lhs =
                z.pushforward(evaluate_on_tower(table.todd(m - r), *w, &tz, nullptr)) * todd_quotient(m, m - r);
            GradedPolynomial rhs = w->zero();
            for (int j = 0; j <= m - r; ++j) {
                const GradedPolynomial inv = evaluate_on_tower(table.todd_inverse(j + r, r), *w, &normal, nullptr);
                const GradedPolynomial td = evaluate_on_tower(table.todd(m - r - j), *w, &tw, nullptr);
                const Rational c = todd_quotient(m, factorial(static_cast<unsigned>(j + r)), m - r - j);
                rhs += z.pushforward(w->multiply(inv, td)) * c;
            }
            parts.push_back({"normal-splitting m=" + std::to_string(m), lhs, rhs});
        }
        return VerificationReport::compare_parts(id, instance, parts);
    } catch (const std::exception& e) {
        return failure(id, instance, e);
    }
}

namespace {

// ch of a split class: sum m exp(D), with rational coefficients.
GradedPolynomial rational_ch(const KClass& f) {
    const Tower& t = *f.tower();
    const int dim = t.dimension();
    GradedPolynomial out(t.alphabet(), dim);
    const auto exp_coeffs = exp_series(dim);
    for (const auto& [d, m] : f.terms())
        out += compose(exp_coeffs, t.divisor(d).truncated(dim)) * Rational(m);
    return t.normal_form(out);
}

// Td of a split class: exp(sum m log Td(D)).
GradedPolynomial rational_td(const KClass& f) {
    const Tower& t = *f.tower();
    const int dim = t.dimension();
    const auto log_td = series_log(todd_series(dim));
    GradedPolynomial log_total(t.alphabet(), dim);
    for (const auto& [d, m] : f.terms())
        log_total += compose(log_td, t.divisor(d).truncated(dim)) * Rational(m);
    return t.normal_form(polynomial_exp(log_total));
}

}  // namespace

RationalRiemannRoch rational_riemann_roch(const MorphismDatum& f, const KClass& sheaf, int n) {
    const TowerPtr& w = f.ambient;
    const int d = f.relative_dimension();
    const KClass pushed = f.pushforward(sheaf);
    RationalRiemannRoch out;
    out.lhs = rational_ch(pushed).homogeneous_part(n);
    KClass relative = tangent_class(w, f.target_levels);
    if (f.cut) relative = relative - f.cut->normal_bundle();
    const GradedPolynomial integrand = w->multiply(rational_ch(sheaf), rational_td(relative));
    out.rhs = d + n >= 0 ? f.pushforward(integrand.homogeneous_part(d + n)) : f.target()->zero();
    return out;
}

VerificationReport check_rational_image(const MorphismDatum& f, const KClass& sheaf, int n,
                                        const ClassTable& table) {
    const std::string id = "rational-image";
    const std::string instance = describe_instance(f, sheaf, n);
    try {
        const int d = f.relative_dimension();
        const RationalRiemannRoch q = rational_riemann_roch(f, sheaf, n);
        std::vector<VerificationReport::Part> parts;
        parts.push_back({"classical", q.lhs, q.rhs});
        if (d >= 0) {
            const Rational t = Rational(todd_denominator(static_cast<unsigned>(d + n)).value());
            const KClass pushed = f.pushforward(sheaf);
            const Rational scale = todd_quotient(d + n, factorial(static_cast<unsigned>(n)), 0);
            parts.push_back({"cleared target side", q.lhs * t, s_class(pushed, n, table) * scale});
            parts.push_back({"cleared source side", q.rhs * t, f.pushforward(source_ct(f, sheaf, d + n, true, table))});
        }
        return VerificationReport::compare_parts(id, instance, parts);
    } catch (const std::exception& e) {
        return failure(id, instance, e);
    }
}

VerificationReport check_determinant_formula(const MorphismDatum& f, const KClass& sheaf, const ClassTable& table) {
    const std::string id = "determinant-formula";
    const std::string instance = describe_instance(f, sheaf, 1);
    try {
        const int d = f.relative_dimension();
        if (d < 0) throw std::invalid_argument("determinant formula needs a nonnegative relative dimension");
        const KClass pushed = f.pushforward(sheaf);
        const TowerPtr s = pushed.tower();
        const Rational t = Rational(todd_denominator(static_cast<unsigned>(d + 1)).value());
        const ChernData target = chern_data(pushed);
        const GradedPolynomial lhs = (target.classes.size() > 1 ? target.classes[1] : s->zero()) * t;

        const auto ts = tower_tangent(s);
        GradedPolynomial rhs = (ts.size() > 1 ? ts[1] : s->zero()) * (-Rational(target.rank) * t / 2);
        const auto tx = source_tangent(f, false);
        VerificationReport report;
        std::vector<std::string> notes;
        for (int m = 0; m <= d + 1; ++m) {
            const GradedPolynomial sm = s_class(sheaf, m, table);
            const GradedPolynomial td = evaluate_on_tower(table.todd(d + 1 - m), *f.ambient, &tx, nullptr);
            GradedPolynomial product = f.ambient->multiply(sm, td);
            if (f.cut) product = f.cut->pushforward(product);
            const GradedPolynomial term =
                pushforward_polynomial(*f.ambient, f.collapsed_levels(), product) *
                todd_quotient(d + 1, factorial(static_cast<unsigned>(m)), d + 1 - m);
            notes.push_back("term m=" + std::to_string(m) + ": " + (term.is_zero() ? "0" : term.to_string()));
            rhs += term;
        }
        report = VerificationReport::compare_parts(id, instance, {{"determinant", lhs, rhs}});
        report.notes = notes;
        return report;
    } catch (const std::exception& e) {
        return failure(id, instance, e);
    }
}

VerificationReport check_composition(const TowerPtr& tower, std::size_t upper, std::size_t lower,
                                     const KClass& sheaf, int n, const ClassTable& table) {
    const std::string id = "composition";
    const std::size_t k = tower->level_count();
    std::string instance = tower->describe() + "; collapse " + std::to_string(upper) + " then " +
                           std::to_string(lower) + "; F = " + sheaf.to_string() + "; n = " + std::to_string(n);
    try {
        if (upper + lower > k) throw std::invalid_argument("cannot collapse more levels than the tower has");
        const MorphismDatum f = MorphismDatum::projection(tower, k - upper);
        const MorphismDatum g = MorphismDatum::projection(f.target(), k - upper - lower);
        const MorphismDatum gf = MorphismDatum::projection(tower, k - upper - lower);
        const int dg = g.relative_dimension();
        const int dgf = gf.relative_dimension();
        const KClass pushed = f.pushforward(sheaf);

        const GradedPolynomial e_gf = grr_error(gf, sheaf, n, table).polynomial();
        const GradedPolynomial e_g = grr_error(g, pushed, n, table).polynomial();
        const GradedPolynomial e_f = grr_error(f, sheaf, dg + n, table).polynomial();
        const GradedPolynomial assembled = e_g * todd_quotient(dgf + n, dg + n) + g.pushforward(e_f);
        const TowerPtr s = gf.target();
        const GradedPolynomial zero = s->zero();
        return VerificationReport::compare_parts(id, instance,
                                                 {{"assembly", e_gf, assembled.embed(s->alphabet())},
                                                  {"E_gf", e_gf, zero},
                                                  {"E_g", e_g, zero},
                                                  {"E_f", e_f, f.target()->zero()}});
    } catch (const std::exception& e) {
        return failure(id, instance, e);
    }
}

}  // namespace igrr
