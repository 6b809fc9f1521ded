#include "igrr/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace igrr {

namespace {

struct RootLayout {
    std::vector<std::size_t> roots;   // positions of the designated roots
    std::vector<std::size_t> others;  // positions of every other variable
};

RootLayout layout_of(const Alphabet& alphabet, const std::vector<std::string>& roots) {
    RootLayout layout;
    std::vector<bool> is_root(alphabet.size(), false);
    for (const auto& name : roots) {
        auto idx = alphabet.index_of(name);
        if (is_root[idx]) throw std::invalid_argument("root " + name + " listed twice");
        is_root[idx] = true;
        layout.roots.push_back(idx);
    }
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        if (!is_root[i]) layout.others.push_back(i);
    return layout;
}

void check_symmetric(const GradedPolynomial& p, const RootLayout& layout) {
    const auto& alpha = *p.alphabet();
    for (std::size_t j = 0; j + 1 < layout.roots.size(); ++j) {
        const std::size_t a = layout.roots[j];
        const std::size_t b = layout.roots[j + 1];
        for (const auto& [e, c] : p.terms()) {
            Exponents swapped = e;
            std::swap(swapped[a], swapped[b]);
            if (p.coefficient(swapped) != c) throw NonSymmetricError(alpha[a].name, alpha[b].name);
        }
    }
}

}  // namespace

std::vector<GradedPolynomial> elementary_polynomials(const AlphabetPtr& alphabet,
                                                     const std::vector<std::string>& roots, int truncation) {
    // prod (1 + x_j) graded by degree; e_i is the degree-i part.
    std::vector<GradedPolynomial> e;
    e.push_back(GradedPolynomial::constant(alphabet, 1, truncation));
    for (const auto& name : roots) {
        GradedPolynomial x = GradedPolynomial::variable(alphabet, name, truncation);
        e.push_back(GradedPolynomial(alphabet, truncation));
        for (std::size_t i = e.size() - 1; i >= 1; --i) e[i] += e[i - 1] * x;
    }
    return e;
}

GradedPolynomial elementary_reduce(const GradedPolynomial& p, const std::vector<std::string>& roots,
                                   const std::vector<std::string>& elementary_names) {
    if (elementary_names.size() != roots.size())
        throw std::invalid_argument("need one elementary name per root");
    const auto& alpha = *p.alphabet();
    const RootLayout layout = layout_of(alpha, roots);
    check_symmetric(p, layout);

    std::vector<Variable> out_vars;
    for (auto i : layout.others) out_vars.push_back(alpha[i]);
    for (std::size_t i = 0; i < elementary_names.size(); ++i)
        out_vars.push_back({elementary_names[i], static_cast<int>(i + 1), VariableRole::chern});
    AlphabetPtr target = make_alphabet(std::move(out_vars));

    const int trunc = p.truncation();
    const auto e = elementary_polynomials(p.alphabet(), roots, trunc);
    const std::size_t k = roots.size();

    auto leading_less = [&](const Exponents& a, const Exponents& b) {
        for (auto i : layout.roots)
            if (a[i] != b[i]) return a[i] < b[i];
        return a < b;
    };

    GradedPolynomial work = p;
    GradedPolynomial out(target, trunc);
    while (!work.is_zero()) {
        auto lead = work.terms().begin();
        for (auto it = work.terms().begin(); it != work.terms().end(); ++it)
            if (leading_less(lead->first, it->first)) lead = it;
        const Exponents lam = lead->first;
        const Rational c = lead->second;

        Exponents out_exp(target->size(), 0);
        GradedPolynomial product = GradedPolynomial::constant(p.alphabet(), c, trunc);
        Exponents coefficient_part(alpha.size(), 0);
        for (std::size_t j = 0; j < layout.others.size(); ++j) {
            coefficient_part[layout.others[j]] = lam[layout.others[j]];
            out_exp[j] = lam[layout.others[j]];
        }
        product = product * GradedPolynomial::monomial(p.alphabet(), coefficient_part, 1, trunc);
        for (std::size_t i = 0; i < k; ++i) {
            const int here = lam[layout.roots[i]];
            const int next = i + 1 < k ? lam[layout.roots[i + 1]] : 0;
            if (here < next) throw std::logic_error("leading root exponent is not a partition");
            out_exp[layout.others.size() + i] = here - next;
            if (here > next) product = product * e[i + 1].pow(static_cast<unsigned>(here - next));
        }
        out.add_term(out_exp, c);
        work -= product;
        if (work.coefficient(lam) != 0) throw std::logic_error("leading-term elimination did not cancel");
    }
    return out;
}

GradedPolynomial elementary_reduce(const GradedPolynomial& p, const std::vector<std::string>& roots) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= roots.size(); ++i) names.push_back("e" + std::to_string(i));
    return elementary_reduce(p, roots, names);
}

// ---------------------------------------------------------------------------

std::vector<Partition> partitions(int n, int max_parts) {
    std::vector<Partition> out;
    Partition current;
    std::function<void(int, int)> rec = [&](int remaining, int largest) {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        if (static_cast<int>(current.size()) == max_parts) return;
        for (int part = std::min(remaining, largest); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    if (n >= 0 && max_parts >= 0) rec(n, n);
    return out;
}

MonomialSymmetric multiplicative_orbit_sum(const std::vector<Rational>& series, int root_count, int degree) {
    if (series.empty() || series[0] != 1) throw std::invalid_argument("multiplicative series must start with 1");
    if (static_cast<int>(series.size()) <= degree) throw std::invalid_argument("series too short for degree");
    MonomialSymmetric out{root_count, {}};
    for (const auto& lam : partitions(degree, root_count)) {
        Rational c = 1;
        for (int part : lam) c *= series[part];
        if (c != 0) out.coefficients.emplace(lam, c);
    }
    return out;
}

MonomialSymmetric additive_orbit_sum(const std::vector<Rational>& series, int root_count, int degree) {
    if (static_cast<int>(series.size()) <= degree) throw std::invalid_argument("series too short for degree");
    MonomialSymmetric out{root_count, {}};
    if (degree >= 1 && root_count >= 1 && series[degree] != 0) out.coefficients.emplace(Partition{degree}, series[degree]);
    return out;
}

namespace {

class ElementaryCounter {
public:
    explicit ElementaryCounter(int root_count) : k_(root_count) {}

    Integer count(const Partition& mu, const Partition& nu) {
        std::vector<int> remaining(k_, 0);
        if (static_cast<int>(nu.size()) > k_) return 0;
        std::copy(nu.begin(), nu.end(), remaining.begin());
        return solve(mu, 0, remaining);
    }

private:
    // remaining is kept sorted descending; the count is invariant under
    // permuting the variables.
    Integer solve(const Partition& mu, std::size_t row, std::vector<int> remaining) {
        std::sort(remaining.begin(), remaining.end(), std::greater<>());
        if (row == mu.size()) {
            return std::all_of(remaining.begin(), remaining.end(), [](int v) { return v == 0; }) ? 1 : 0;
        }
        std::vector<int> key(mu.begin() + static_cast<long>(row), mu.end());
        key.push_back(-1);
        key.insert(key.end(), remaining.begin(), remaining.end());
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        // Groups of equal positive values: (value, start, multiplicity).
        struct Group {
            int value;
            std::size_t start;
            int size;
        };
        std::vector<Group> groups;
        for (std::size_t i = 0; i < remaining.size();) {
            std::size_t j = i;
            while (j < remaining.size() && remaining[j] == remaining[i]) ++j;
            if (remaining[i] > 0) groups.push_back({remaining[i], i, static_cast<int>(j - i)});
            i = j;
        }
        Integer total = 0;
        std::vector<int> take(groups.size(), 0);
        std::function<void(std::size_t, int, Integer)> distribute = [&](std::size_t g, int left, Integer weight) {
            if (g == groups.size()) {
                if (left != 0) return;
                std::vector<int> next = remaining;
                for (std::size_t t = 0; t < groups.size(); ++t)
                    for (int q = 0; q < take[t]; ++q) next[groups[t].start + q] -= 1;
                total += weight * solve(mu, row + 1, next);
                return;
            }
            for (int t = 0; t <= std::min(left, groups[g].size); ++t) {
                take[g] = t;
                distribute(g + 1, left - t, weight * binomial(groups[g].size, t));
            }
            take[g] = 0;
        };
        distribute(0, mu[row], 1);
        memo_.emplace(std::move(key), total);
        return total;
    }

    int k_;
    std::map<std::vector<int>, Integer> memo_;
};

Partition conjugate(const Partition& lam) {
    Partition out;
    if (lam.empty()) return out;
    for (int j = 1; j <= lam.front(); ++j) {
        int count = 0;
        for (int part : lam)
            if (part >= j) ++count;
        out.push_back(count);
    }
    return out;
}

int size_of(const Partition& lam) {
    int s = 0;
    for (int part : lam) s += part;
    return s;
}

}  // namespace

Integer elementary_product_coefficient(const Partition& mu, const Partition& nu, int root_count) {
    ElementaryCounter counter(root_count);
    return counter.count(mu, nu);
}

GradedPolynomial monomial_to_elementary(const MonomialSymmetric& m, const AlphabetPtr& target,
                                        const std::vector<std::string>& elementary_names) {
    const int k = m.root_count;
    if (static_cast<int>(elementary_names.size()) < k)
        throw std::invalid_argument("need one elementary name per root");
    std::vector<std::size_t> e_index;
    for (int i = 0; i < k; ++i) e_index.push_back(target->index_of(elementary_names[i]));

    ElementaryCounter counter(k);
    std::map<Partition, Rational> work = m.coefficients;
    GradedPolynomial out(target);
    while (!work.empty()) {
        auto lead = std::prev(work.end());
        const Partition lam = lead->first;
        const Rational c = lead->second;
        if (static_cast<int>(lam.size()) > k) throw std::logic_error("partition longer than root count");

        Exponents e(target->size(), 0);
        for (std::size_t i = 0; i < lam.size(); ++i) {
            const int next = i + 1 < lam.size() ? lam[i + 1] : 0;
            e[e_index[i]] += lam[i] - next;
        }
        out.add_term(e, c);

        const Partition mu = conjugate(lam);
        for (const auto& nu : partitions(size_of(lam), k)) {
            if (nu > lam) continue;  // e_{lam'} only reaches monomials dominated by lam
            Integer count = counter.count(mu, nu);
            if (count == 0) continue;
            auto it = work.find(nu);
            Rational delta = c * Rational(count);
            if (it == work.end()) {
                work.emplace(nu, -delta);
            } else {
                it->second -= delta;
                if (it->second == 0) work.erase(it);
            }
        }
        if (work.count(lam) != 0) throw std::logic_error("leading-term elimination did not cancel");
    }
    return out;
}

GradedPolynomial newton_power_sum(int m, const AlphabetPtr& target, const std::vector<std::string>& elementary_names) {
    const int k = static_cast<int>(elementary_names.size());
    auto e = [&](int i) {
        if (i > k) return GradedPolynomial(target);
        return GradedPolynomial::variable(target, elementary_names[i - 1]);
    };
    std::vector<GradedPolynomial> p{GradedPolynomial(target)};
    for (int n = 1; n <= m; ++n) {
        GradedPolynomial pn(target);
        for (int i = 1; i < n; ++i) {
            GradedPolynomial term = e(i) * p[n - i];
            if (i % 2 == 1) pn += term; else pn -= term;
        }
        GradedPolynomial last = e(n) * Rational(n);
        if (n % 2 == 1) pn += last; else pn -= last;
        p.push_back(pn);
    }
    return p[m];
}

}  // namespace igrr
