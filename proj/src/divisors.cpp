#include "igrr/grr.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace igrr {

GradedPolynomial divisor_todd(const TowerPtr& w, const DivisorClass& d, int m, const ClassTable& table) {
    if (m < 1 || m > w->dimension()) return w->zero();
    const auto tangent = chern_classes(tangent_class(w));
    const GradedPolynomial x = w->divisor(d);
    return evaluate_on_tower(table.q(m), *w, &tangent, nullptr, &x);
}

GradedPolynomial pushed_todd(const VirtualCompleteIntersection& z, int k, const ClassTable& table) {
    const TowerPtr& w = z.ambient;
    if (k < 0 || k > z.dimension()) return w->zero();
    const auto tangent = z.tangent_chern_classes();
    return z.pushforward(evaluate_on_tower(table.todd(k), *w, &tangent, nullptr));
}

namespace {

// A named "subvariety" of the model: the intersection of named divisors,
// each a symbol with a divisor class. Symbols keep Y and Y' apart even when
// their classes agree.
struct Symbol {
    std::string name;
    DivisorClass cls;
};

using Label = std::vector<std::string>;  // sorted symbol names with repetition

struct Term {
    std::vector<DivisorClass> cuts;
    long coefficient = 0;
};

using Expansion = std::map<Label, Term>;

void add_term(Expansion& e, std::vector<Symbol> parts, long c) {
    std::sort(parts.begin(), parts.end(), [](const Symbol& a, const Symbol& b) { return a.name < b.name; });
    Label label;
    std::vector<DivisorClass> cuts;
    for (const auto& s : parts) {
        label.push_back(s.name);
        cuts.push_back(s.cls);
    }
    auto& t = e[label];
    t.cuts = cuts;
    t.coefficient += c;
    if (t.coefficient == 0) e.erase(label);
}

void add_into(Expansion& target, const Expansion& source, long sign) {
    for (const auto& [label, term] : source) {
        auto& t = target[label];
        t.cuts = term.cuts;
        t.coefficient += sign * term.coefficient;
        if (t.coefficient == 0) target.erase(label);
    }
}

// D = X - Y with every y_i ~ Y: [X] - [Y] + sum_(k=1..bound) ([Y^k X] - [Y^k Y]).
Expansion difference_expansion(const Symbol& x, const Symbol& y, int bound) {
    Expansion e;
    add_term(e, {x}, 1);
    add_term(e, {y}, -1);
    for (int k = 1; k <= bound; ++k) {
        std::vector<Symbol> with_x(static_cast<std::size_t>(k), y);
        with_x.push_back(x);
        add_term(e, with_x, 1);
        add_term(e, std::vector<Symbol>(static_cast<std::size_t>(k + 1), y), -1);
    }
    return e;
}

// U = A + B: [A] + [B] - [A B].
Expansion sum_expansion(const Symbol& a, const Symbol& b) {
    Expansion e;
    add_term(e, {a}, 1);
    add_term(e, {b}, 1);
    add_term(e, {a, b}, -1);
    return e;
}

// Replaces every occurrence of the codimension-one symbol `whole` by its expansion.
Expansion substitute_single(const Expansion& e, const std::string& whole, const Expansion& replacement) {
    Expansion out;
    for (const auto& [label, term] : e) {
        if (label.size() == 1 && label[0] == whole) {
            Expansion scaled;
            add_into(scaled, replacement, term.coefficient);
            add_into(out, scaled, 1);
        } else {
            Expansion single;
            single[label] = term;
            add_into(out, single, 1);
        }
    }
    return out;
}

// Defect of additivity for D + D' through X - Y and X' - Y', with U = X + X'
// and V = Y + Y' and the difference expansion run to `bound`.
Expansion additivity_defect(const Symbol& x, const Symbol& y, const Symbol& xp, const Symbol& yp, int bound) {
    const Symbol u{"U", x.cls + xp.cls};
    const Symbol v{"V", y.cls + yp.cls};
    Expansion total = difference_expansion(u, v, bound);
    total = substitute_single(total, "U", sum_expansion(x, xp));
    total = substitute_single(total, "V", sum_expansion(y, yp));
    add_into(total, difference_expansion(x, y, bound), -1);
    add_into(total, difference_expansion(xp, yp, bound), -1);
    return total;
}

std::string label_name(const Label& label) {
    std::string out = "Z_";
    for (std::size_t i = 0; i < label.size();) {
        std::size_t j = i;
        while (j < label.size() && label[j] == label[i]) ++j;
        out += label[i];
        if (j - i > 1) out += std::to_string(j - i);
        i = j;
    }
    return out;
}

// Chow value sum a_Z T_(m-1)/T_(m-codim) i_* Td_(m-codim)(Z).
GradedPolynomial chow_value(const TowerPtr& w, const Expansion& e, int m, const ClassTable& table) {
    GradedPolynomial out = w->zero();
    for (const auto& [label, term] : e) {
        const int codim = static_cast<int>(label.size());
        if (codim > w->dimension() || codim > m) continue;
        const VirtualCompleteIntersection z(w, term.cuts);
        out += pushed_todd(z, m - codim, table) * (todd_quotient(m - 1, m - codim) * Rational(term.coefficient));
    }
    return out;
}

KClass k_value(const TowerPtr& w, const Expansion& e) {
    KClass out(w);
    for (const auto& [label, term] : e) {
        if (static_cast<int>(label.size()) > w->dimension()) continue;
        out = out + VirtualCompleteIntersection(w, term.cuts).structure_sheaf() * Integer(term.coefficient);
    }
    return out;
}

std::string render(const Tower& w, const DivisorClass& d) {
    std::string out;
    for (std::size_t k = 0; k < w.level_count(); ++k) {
        const long c = d[k];
        if (c == 0) continue;
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        const long a = std::labs(c);
        if (a != 1) out += std::to_string(a) + "*";
        out += w.name_of(k);
    }
    return out.empty() ? "0" : out;
}

KClass koszul_divisor(const TowerPtr& w, const DivisorClass& d) {
    return KClass::trivial(w, 1) - KClass::line(w, -d);
}

// An ample auxiliary class large enough that X = D + Y is ample as well.
DivisorClass auxiliary_ample(const Tower& w, const std::vector<DivisorClass>& divisors) {
    long bound = 0;
    for (const auto& d : divisors)
        for (std::size_t k = 0; k < w.level_count(); ++k) bound = std::max(bound, std::labs(d[k]));
    return w.ample_class() * (bound + 1);
}

}  // namespace

VerificationReport check_divisor_calculus(const TowerPtr& w, const std::vector<DivisorClass>& divisors, int m,
                                          const ClassTable& table) {
    const std::string id = "divisor-calculus";
    std::string instance = w->describe() + "; D = [";
    for (std::size_t i = 0; i < divisors.size(); ++i) instance += (i ? ", " : "") + render(*w, divisors[i]);
    instance += "]; m = " + std::to_string(m);
    try {
        if (m < 1) throw std::invalid_argument("divisor calculus needs m >= 1");
        const int delta = w->dimension() - 1;
        const int bound = std::min(m - 1, delta);
        const DivisorClass ample = auxiliary_ample(*w, divisors);
        const auto tangent = chern_classes(tangent_class(w));
        std::vector<VerificationReport::Part> parts;
        std::vector<std::string> notes;
        if (m - 1 > delta)
            notes.push_back("difference expansion summed to min(m-1, dim W - 1) = " + std::to_string(bound) +
                            " instead of m-1 = " + std::to_string(m - 1));

        for (std::size_t i = 0; i < divisors.size(); ++i) {
            const DivisorClass& d = divisors[i];
            const std::string tag = "D" + std::to_string(i + 1) + " ";
            const GradedPolynomial td = divisor_todd(w, d, m, table);
            const VirtualCompleteIntersection div(w, {d});
            parts.push_back({tag + "pushforward", td, pushed_todd(div, m - 1, table)});

            const KClass structure = koszul_divisor(w, d);
            const ChernData data = chern_data(structure);
            const GradedPolynomial ct = m <= w->dimension() ? evaluate_on_tower(table.ct(m), *w, &tangent, &data)
                                                            : w->zero();
            parts.push_back({tag + "ct link", td * todd_quotient(m, m - 1), ct});

            const Symbol x{"X", d + ample};
            const Symbol y{"Y", ample};
            const Expansion chow = difference_expansion(x, y, bound);
            parts.push_back({tag + "difference", td, chow_value(w, chow, m, table)});
            const Expansion k_side = difference_expansion(x, y, delta);
            parts.push_back({tag + "difference (K)", structure.as_polynomial(), k_value(w, k_side).as_polynomial()});
        }

        for (std::size_t i = 0; i < divisors.size(); ++i) {
            for (std::size_t j = i + 1; j < divisors.size(); ++j) {
                const DivisorClass& d1 = divisors[i];
                const DivisorClass& d2 = divisors[j];
                const std::string tag = "D" + std::to_string(i + 1) + "+D" + std::to_string(j + 1) + " ";
                const GradedPolynomial td_sum = divisor_todd(w, d1 + d2, m, table);

                GradedPolynomial three = pushed_todd(VirtualCompleteIntersection(w, {d1}), m - 1, table) +
                                         pushed_todd(VirtualCompleteIntersection(w, {d2}), m - 1, table);
                if (m >= 2 && w->dimension() >= 2)
                    three -= pushed_todd(VirtualCompleteIntersection(w, {d1, d2}), m - 2, table) *
                             todd_quotient(m - 1, m - 2);
                parts.push_back({tag + "sum", td_sum, three});

                const KClass k_lhs = koszul_divisor(w, d1 + d2);
                KClass k_rhs = koszul_divisor(w, d1) + koszul_divisor(w, d2);
                if (w->dimension() >= 2) k_rhs = k_rhs - VirtualCompleteIntersection(w, {d1, d2}).structure_sheaf();
                parts.push_back({tag + "sum (K)", k_lhs.as_polynomial(), k_rhs.as_polynomial()});

                const Symbol x{"X", d1 + ample}, y{"Y", ample}, xp{"Xp", d2 + ample}, yp{"Yp", ample};
                const Expansion a = additivity_defect(x, y, xp, yp, bound);
                const Expansion b = additivity_defect(x, y, xp, yp, delta);
                parts.push_back({tag + "defect",
                                 td_sum,
                                 divisor_todd(w, d1, m, table) + divisor_todd(w, d2, m, table) +
                                     chow_value(w, a, m, table)});
                parts.push_back({tag + "defect (K)", k_lhs.as_polynomial(),
                                 (koszul_divisor(w, d1) + koszul_divisor(w, d2) + k_value(w, b)).as_polynomial()});

                // b_Z = a_Z for 2 <= codim Z <= m, as coefficient polynomials over the labels.
                Expansion a_band, b_band;
                for (const auto& [label, term] : a)
                    if (label.size() >= 2 && static_cast<int>(label.size()) <= m) a_band[label] = term;
                for (const auto& [label, term] : b)
                    if (label.size() >= 2 && static_cast<int>(label.size()) <= m) b_band[label] = term;
                Expansion all = a_band;
                add_into(all, b_band, 0);
                std::vector<Variable> vars;
                for (const auto& [label, term] : all)
                    vars.push_back({label_name(label), static_cast<int>(label.size()), VariableRole::symbol});
                const AlphabetPtr alpha = make_alphabet(vars);
                GradedPolynomial pa(alpha), pb(alpha);
                std::size_t index = 0;
                for (const auto& [label, term] : all) {
                    Exponents e(vars.size(), 0);
                    e[index++] = 1;
                    if (auto it = a_band.find(label); it != a_band.end()) pa.add_term(e, it->second.coefficient);
                    if (auto it = b_band.find(label); it != b_band.end()) pb.add_term(e, it->second.coefficient);
                }
                parts.push_back({tag + "a_Z = b_Z", pa, pb});
                bool codim_one_free = true;
                for (const auto& [label, term] : a)
                    if (label.size() == 1) codim_one_free = false;
                if (!codim_one_free) notes.push_back(tag + "defect has a codimension-one term");
            }
        }
        auto report = VerificationReport::compare_parts(id, instance, parts);
        if (report.pass && !notes.empty()) {
            for (const auto& n : notes)
                if (n.find("codimension-one") != std::string::npos) {
                    report.pass = false;
                    report.discrepancy = n;
                }
        }
        report.notes = notes;
        return report;
    } catch (const std::exception& e) {
        return VerificationReport::verdict(id, instance, false, "", "", e.what());
    }
}

}  // namespace igrr
