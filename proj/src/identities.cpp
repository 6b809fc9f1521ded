#include "igrr/identities.hpp"

#include "igrr/symmetric.hpp"

#include <algorithm>
#include <stdexcept>

namespace igrr {

namespace {

Rational ratio(int a, const Integer& extra, int b) {
    // T_a / (extra * T_b), asserted integral
    const Integer num = todd_denominator(static_cast<unsigned>(a)).value();
    const Integer den = extra * todd_denominator(static_cast<unsigned>(b)).value();
    try {
        return Rational(checked_quotient(num, den, "T_" + std::to_string(a) + "/(" + extra.get_str() + " T_" +
                                                       std::to_string(b) + ")"));
    } catch (const std::domain_error& e) {
        throw FalsificationError("non-integral scalar", e.what());
    }
}

std::vector<Variable> chern_variables(const std::string& prefix, int count) {
    std::vector<Variable> vars;
    for (int i = 1; i <= count; ++i) vars.push_back({prefix + std::to_string(i), i, VariableRole::chern});
    return vars;
}

AlphabetPtr two_chern_sets(const std::string& a, int a_count, const std::string& b, int b_count) {
    auto vars = chern_variables(a, a_count);
    auto more = chern_variables(b, b_count);
    vars.insert(vars.end(), more.begin(), more.end());
    return make_alphabet(std::move(vars));
}

/// Substitutes c_i -> values[i] (i >= 1) and optionally r into a universal polynomial.
GradedPolynomial evaluate(const GradedPolynomial& universal, const std::string& prefix,
                          const std::vector<GradedPolynomial>& values, const AlphabetPtr& target, int trunc,
                          std::optional<Rational> rank = std::nullopt) {
    GradedPolynomial::Valuation v;
    for (std::size_t i = 1; i < values.size(); ++i) v.emplace(prefix + std::to_string(i), values[i]);
    // Chern classes above the supplied range vanish.
    for (std::size_t i = values.size(); i <= static_cast<std::size_t>(universal.max_degree() + 1); ++i)
        v.emplace(prefix + std::to_string(i), GradedPolynomial(target, trunc));
    if (rank) v.emplace("r", GradedPolynomial::constant(target, *rank, trunc));
    return universal.substitute(v, target, trunc);
}

std::vector<GradedPolynomial> chern_variable_values(const AlphabetPtr& target, const std::string& prefix,
                                                    int count, int trunc) {
    std::vector<GradedPolynomial> out{GradedPolynomial::constant(target, 1, trunc)};
    for (int i = 1; i <= count; ++i) out.push_back(GradedPolynomial::variable(target, prefix + std::to_string(i), trunc));
    return out;
}

std::vector<VerificationReport::Part> per_degree(const std::string& prefix, const GradedPolynomial& lhs,
                                                 const GradedPolynomial& rhs, int max_degree) {
    std::vector<VerificationReport::Part> parts;
    for (int k = 0; k <= max_degree; ++k)
        parts.push_back({prefix + "degree " + std::to_string(k), lhs.homogeneous_part(k), rhs.homogeneous_part(k)});
    return parts;
}

// ---------------------------------------------------------------------------

std::vector<VerificationReport::Part> chern_multiplicativity(int max_degree, const ClassTable& table) {
    const int rank = 3;
    std::vector<Variable> vars;
    for (int i = 1; i <= rank; ++i) vars.push_back({"x" + std::to_string(i), 1, VariableRole::root});
    for (int i = 1; i <= rank; ++i) vars.push_back({"y" + std::to_string(i), 1, VariableRole::root_prime});
    auto alpha = make_alphabet(std::move(vars));
    const int trunc = max_degree;
    std::vector<std::string> xs, ys;
    for (int i = 1; i <= rank; ++i) {
        xs.push_back("x" + std::to_string(i));
        ys.push_back("y" + std::to_string(i));
    }
    auto ca = elementary_polynomials(alpha, xs, trunc);
    auto cb = elementary_polynomials(alpha, ys, trunc);
    std::vector<std::pair<GradedPolynomial, long>> product_lines;
    for (const auto& x : xs)
        for (const auto& y : ys)
            product_lines.emplace_back(GradedPolynomial::variable(alpha, x, trunc) + GradedPolynomial::variable(alpha, y, trunc), 1);
    auto cab = chern_of_lines(product_lines, alpha, trunc);

    std::vector<GradedPolynomial> sa, sb;
    for (int i = 0; i <= max_degree; ++i) {
        sa.push_back(evaluate(table.chern_character(i), "cp", ca, alpha, trunc, Rational(rank)));
        sb.push_back(evaluate(table.chern_character(i), "cp", cb, alpha, trunc, Rational(rank)));
    }
    std::vector<VerificationReport::Part> parts;
    for (int m = 0; m <= max_degree; ++m) {
        GradedPolynomial lhs = evaluate(table.chern_character(m), "cp", cab, alpha, trunc, Rational(rank * rank));
        GradedPolynomial rhs(alpha, trunc);
        for (int i = 0; i <= m; ++i) rhs += sa[i] * sb[m - i] * Rational(binomial(m, i));
        parts.push_back({"m=" + std::to_string(m), lhs, rhs});
    }
    return parts;
}

std::vector<VerificationReport::Part> todd_multiplicativity(int max_degree, const ClassTable& table) {
    auto alpha = two_chern_sets("a", max_degree, "b", max_degree);
    const int trunc = max_degree;
    auto sum = whitney_sum(alpha, "a", max_degree, "b", max_degree, max_degree);
    auto av = chern_variable_values(alpha, "a", max_degree, trunc);
    auto bv = chern_variable_values(alpha, "b", max_degree, trunc);
    std::vector<VerificationReport::Part> parts;
    for (int m = 0; m <= max_degree; ++m) {
        GradedPolynomial lhs = evaluate(table.todd(m), "c", sum, alpha, trunc);
        GradedPolynomial rhs(alpha, trunc);
        for (int i = 0; i <= m; ++i) {
            const Rational s = ratio(m, todd_denominator(static_cast<unsigned>(i)).value(), m - i);
            rhs += evaluate(table.todd(i), "c", av, alpha, trunc) * evaluate(table.todd(m - i), "c", bv, alpha, trunc) * s;
        }
        parts.push_back({"m=" + std::to_string(m), lhs, rhs});
    }
    return parts;
}

std::vector<VerificationReport::Part> hodge_wedge(int max_degree, const ClassTable& table) {
    std::vector<VerificationReport::Part> parts;
    for (int g = 1; g <= std::min(max_degree, 6); ++g) {
        auto alpha = root_alphabet(g);
        const int trunc = g;
        // sum_i (-1)^i [wedge^i E^dual] as line symbols O(-sum_{j in S} x_j)
        std::vector<std::pair<GradedPolynomial, long>> lines;
        for (unsigned mask = 0; mask < (1U << g); ++mask) {
            GradedPolynomial d(alpha, trunc);
            int size = 0;
            for (int j = 0; j < g; ++j) {
                if (mask & (1U << j)) {
                    d -= GradedPolynomial::variable(alpha, "x" + std::to_string(j + 1), trunc);
                    ++size;
                }
            }
            lines.emplace_back(d, size % 2 == 0 ? 1 : -1);
        }
        auto c = chern_of_lines(lines, alpha, trunc);
        GradedPolynomial lhs = evaluate(table.chern_character(g), "cp", c, alpha, trunc, Rational(0));
        std::vector<std::string> roots;
        for (int j = 1; j <= g; ++j) roots.push_back("x" + std::to_string(j));
        GradedPolynomial rhs = elementary_polynomials(alpha, roots, trunc)[g] * Rational(factorial(g));
        parts.push_back({"g=" + std::to_string(g), lhs, rhs});
    }
    return parts;
}

std::vector<VerificationReport::Part> divisor_todd(int max_degree, const ClassTable& table) {
    std::vector<VerificationReport::Part> parts;
    for (int m = 1; m <= max_degree; ++m) {
        auto alpha = chern_alphabet(m, false, 0, true);
        GradedPolynomial x = GradedPolynomial::variable(alpha, "x");
        GradedPolynomial lhs = table.q(m).embed(alpha) * ratio(m, 1, m - 1);
        // c([O] - [O(-x)]) = 1/(1-x): c'_k = x^k, rank 0
        GradedPolynomial::Valuation v;
        v.emplace("r", GradedPolynomial(alpha));
        for (int k = 1; k <= m; ++k) v.emplace("cp" + std::to_string(k), x.pow(static_cast<unsigned>(k)));
        GradedPolynomial rhs = table.ct(m).substitute(v, alpha);
        parts.push_back({"m=" + std::to_string(m), lhs, rhs});
    }
    return parts;
}

struct TwoVariables {
    AlphabetPtr alpha;
    GradedPolynomial a, b;
};

TwoVariables two_variables(int trunc) {
    auto alpha = make_alphabet({{"a", 1, VariableRole::symbol}, {"b", 1, VariableRole::symbol}});
    return {alpha, GradedPolynomial::variable(alpha, "a", trunc), GradedPolynomial::variable(alpha, "b", trunc)};
}

std::vector<VerificationReport::Part> exp_sum(int d) {
    auto [alpha, a, b] = two_variables(d);
    const auto g = one_minus_exp_neg_series(d);
    GradedPolynomial ea = compose(g, a), eb = compose(g, b);
    return per_degree("", compose(g, a + b), ea + eb - ea * eb, d);
}

std::vector<VerificationReport::Part> exp_geometric(int d) {
    auto [alpha, a, b] = two_variables(d);
    GradedPolynomial lhs = GradedPolynomial::constant(alpha, 1, d) - compose(exp_series(d), b);
    GradedPolynomial eb = compose(one_minus_exp_neg_series(d), b);
    GradedPolynomial rhs(alpha, d);
    GradedPolynomial power = eb;
    for (int j = 1; j <= d; ++j) {
        rhs -= power;
        power = power * eb;
    }
    return per_degree("", lhs, rhs, d);
}

std::vector<VerificationReport::Part> exp_difference(int d) {
    auto [alpha, a, b] = two_variables(d);
    const auto g = one_minus_exp_neg_series(d);
    GradedPolynomial ea = compose(g, a), eb = compose(g, b);
    GradedPolynomial lhs = compose(g, a - b);
    GradedPolynomial rhs = ea - eb;
    GradedPolynomial power = eb;
    for (int j = 1; j <= d; ++j) {
        rhs += ea * power - power * eb;
        power = power * eb;
    }
    return per_degree("", lhs, rhs, d);
}

std::vector<VerificationReport::Part> whitney_substitution(int max_degree, const ClassTable& table) {
    std::vector<VerificationReport::Part> parts;
    for (int k = 0; k <= max_degree; ++k) {
        auto alpha = chern_alphabet(k, false, 0, true);
        GradedPolynomial x = GradedPolynomial::variable(alpha, "x", k);
        GradedPolynomial td(alpha, k);
        for (int i = 0; i <= k; ++i)
            td += table.todd(i).embed(alpha, k) * Rational(1, todd_denominator(static_cast<unsigned>(i)).value());
        GradedPolynomial series = compose(todd_inverse_series(k), x) * td;
        GradedPolynomial::Valuation v;
        for (int i = 1; i <= k; ++i) {
            GradedPolynomial prev = i == 1 ? GradedPolynomial::constant(alpha, 1, k)
                                           : GradedPolynomial::variable(alpha, "c" + std::to_string(i - 1), k);
            v.emplace("c" + std::to_string(i), GradedPolynomial::variable(alpha, "c" + std::to_string(i), k) + x * prev);
        }
        const Rational tk(todd_denominator(static_cast<unsigned>(k)).value());
        GradedPolynomial lhs = series.substitute(v, alpha, k).homogeneous_part(k) * tk;
        GradedPolynomial rhs = table.todd(k).embed(alpha);
        parts.push_back({"k=" + std::to_string(k), lhs.truncated(GradedPolynomial::untruncated), rhs});
    }
    return parts;
}

std::vector<VerificationReport::Part> immersion_todd(int max_degree, const ClassTable& table) {
    std::vector<VerificationReport::Part> parts;
    for (int r = 1; r <= 3; ++r) {
        for (int m = r; m <= max_degree; ++m) {
            const int rest = m - r;
            auto alpha = two_chern_sets("a", rest, "n", r);
            auto av = chern_variable_values(alpha, "a", rest, rest);
            auto nv = chern_variable_values(alpha, "n", r, rest);
            auto restricted = whitney_sum(alpha, "a", rest, "n", r, rest);
            GradedPolynomial lhs = evaluate(table.todd(rest), "c", av, alpha, rest) * ratio(m, 1, rest);
            GradedPolynomial rhs(alpha, rest);
            for (int j = 0; j <= rest; ++j) {
                const Rational s = ratio(m, factorial(static_cast<unsigned>(j + r)), rest - j);
                rhs += evaluate(table.todd_inverse(j + r, r), "c", nv, alpha, rest) *
                       evaluate(table.todd(rest - j), "c", restricted, alpha, rest) * s;
            }
            parts.push_back({"r=" + std::to_string(r) + " m=" + std::to_string(m), lhs, rhs});
        }
    }
    return parts;
}

}  // namespace

std::vector<GradedPolynomial> whitney_sum(const AlphabetPtr& target, const std::string& a_prefix, int a_count,
                                          const std::string& b_prefix, int b_count, int degree) {
    auto a = chern_variable_values(target, a_prefix, a_count, degree);
    auto b = chern_variable_values(target, b_prefix, b_count, degree);
    std::vector<GradedPolynomial> out;
    for (int k = 0; k <= degree; ++k) {
        GradedPolynomial ck(target, degree);
        for (int i = 0; i <= k; ++i) {
            if (i > a_count || k - i > b_count) continue;
            ck += a[i] * b[k - i];
        }
        out.push_back(ck);
    }
    return out;
}

std::vector<GradedPolynomial> chern_of_lines(const std::vector<std::pair<GradedPolynomial, long>>& lines,
                                             const AlphabetPtr& alphabet, int degree) {
    // log c = sum_j (-1)^(j+1)/j * sum_k mult_k D_k^j
    GradedPolynomial log_c(alphabet, degree);
    for (const auto& [line, mult] : lines) {
        if (mult == 0) continue;
        GradedPolynomial d = line.embed(alphabet, degree);
        GradedPolynomial power = d;
        for (int j = 1; j <= degree && !power.is_zero(); ++j) {
            Rational s(mult, j);
            s.canonicalize();
            if (j % 2 == 0) s = -s;
            log_c += power * s;
            power = power * d;
        }
    }
    GradedPolynomial total = polynomial_exp(log_c);
    std::vector<GradedPolynomial> out;
    for (int k = 0; k <= degree; ++k) out.push_back(total.homogeneous_part(k));
    return out;
}

const std::vector<std::string>& series_identity_names() {
    static const std::vector<std::string> names{
        "chern-multiplicativity", "todd-multiplicativity", "hodge-wedge",          "divisor-todd",
        "exp-sum",                "exp-geometric",         "exp-difference",       "whitney-substitution",
        "immersion-todd"};
    return names;
}

VerificationReport verify_series_identity(const std::string& name, int max_degree, const ClassTable& table) {
    if (max_degree < 1) throw std::invalid_argument("max_degree must be positive");
    const std::string instance = "max_degree=" + std::to_string(max_degree);
    try {
        std::vector<VerificationReport::Part> parts;
        if (name == "chern-multiplicativity") parts = chern_multiplicativity(max_degree, table);
        else if (name == "todd-multiplicativity") parts = todd_multiplicativity(max_degree, table);
        else if (name == "hodge-wedge") parts = hodge_wedge(max_degree, table);
        else if (name == "divisor-todd") parts = divisor_todd(max_degree, table);
        else if (name == "exp-sum") parts = exp_sum(max_degree);
        else if (name == "exp-geometric") parts = exp_geometric(max_degree);
        else if (name == "exp-difference") parts = exp_difference(max_degree);
        else if (name == "whitney-substitution") parts = whitney_substitution(max_degree, table);
        else if (name == "immersion-todd") parts = immersion_todd(max_degree, table);
        else throw std::invalid_argument("unknown identity: " + name);
        return VerificationReport::compare_parts(name, instance, parts);
    } catch (const FalsificationError& e) {
        return VerificationReport::verdict(name, instance, false, "", "", e.what());
    }
}

// ---------------------------------------------------------------------------

namespace {

/// Rewrites every T^e with e > r using T^(r+1) = sum_i (-1)^(i+1) c_i T^(r+1-i).
GradedPolynomial reduce_bundle_generator(const GradedPolynomial& p, int r) {
    const auto& alpha = *p.alphabet();
    const std::size_t t_index = alpha.index_of("T");
    std::vector<std::pair<Exponents, Rational>> relation;
    for (int i = 1; i <= r + 1; ++i) {
        Exponents e(alpha.size(), 0);
        e[t_index] = r + 1 - i;
        e[alpha.index_of("c" + std::to_string(i))] = 1;
        relation.emplace_back(e, i % 2 == 1 ? Rational(1) : Rational(-1));
    }
    GradedPolynomial current = p;
    while (true) {
        GradedPolynomial next(p.alphabet(), p.truncation());
        bool changed = false;
        for (const auto& [e, c] : current.terms()) {
            if (e[t_index] <= r) {
                next.add_term(e, c);
                continue;
            }
            changed = true;
            Exponents base = e;
            base[t_index] -= r + 1;
            for (const auto& [re, rc] : relation) {
                Exponents f = base;
                for (std::size_t i = 0; i < f.size(); ++i) f[i] += re[i];
                next.add_term(f, c * rc);
            }
        }
        current = std::move(next);
        if (!changed) return current;
    }
}

}  // namespace

HoweReduction howe_reduce(int r, int a, int degree_bound) {
    if (r < 1) throw std::invalid_argument("howe_reduce needs r >= 1");
    if (degree_bound < r)
        throw std::invalid_argument("degree bound " + std::to_string(degree_bound) +
                                    " cannot determine the coefficient of T^" + std::to_string(r));
    std::vector<Variable> vars{{"T", 1, VariableRole::bundle_generator}};
    std::vector<std::string> roots;
    for (int i = 1; i <= r + 1; ++i) {
        roots.push_back("x" + std::to_string(i));
        vars.push_back({roots.back(), 1, VariableRole::root});
    }
    auto alpha = make_alphabet(std::move(vars));
    const int d = degree_bound;
    GradedPolynomial t = GradedPolynomial::variable(alpha, "T", d);
    const auto todd = todd_series(d);
    GradedPolynomial h = compose(exp_series(d), t * Rational(a));
    for (const auto& x : roots) h = h * compose(todd, t - GradedPolynomial::variable(alpha, x, d));

    GradedPolynomial symmetric = elementary_reduce(h, roots, chern_names(r + 1));
    GradedPolynomial reduced = reduce_bundle_generator(symmetric, r);

    HoweReduction out{r, a, degree_bound, {}};
    auto target = chern_alphabet(r + 1);
    const std::size_t t_index = reduced.alphabet()->index_of("T");
    for (int j = 0; j <= r; ++j) {
        GradedPolynomial fj(target, d - j);
        for (const auto& [e, c] : reduced.terms()) {
            if (e[t_index] != j) continue;
            Exponents f;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (i != t_index) f.push_back(e[i]);
            fj.add_term(f, c);
        }
        out.coefficients.push_back(fj);
    }
    return out;
}

VerificationReport check_howe(int r, int a, int degree_bound) {
    if (a < -r || a > 0) throw std::invalid_argument("twist must lie in [-r, 0]");
    auto reduction = howe_reduce(r, a, degree_bound);
    const GradedPolynomial& top = reduction.coefficients[r];
    GradedPolynomial expected = a == 0 ? GradedPolynomial::constant(top.alphabet(), 1, top.truncation())
                                       : GradedPolynomial(top.alphabet(), top.truncation());
    return VerificationReport::compare("howe-top-coefficient",
                                       "r=" + std::to_string(r) + " a=" + std::to_string(a) +
                                           " degree<=" + std::to_string(degree_bound),
                                       top, expected);
}

}  // namespace igrr
