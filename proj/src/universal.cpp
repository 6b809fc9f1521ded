#include "igrr/universal.hpp"

#include "igrr/symmetric.hpp"

#include <sstream>

namespace igrr {

Rational todd_quotient(int a, const Integer& extra, int b) {
    const Integer num = todd_denominator(static_cast<unsigned>(a)).value();
    const Integer den = extra * todd_denominator(static_cast<unsigned>(b)).value();
    try {
        return Rational(checked_quotient(num, den,
                                         "T_" + std::to_string(a) + "/(" + extra.get_str() + "*T_" + std::to_string(b) + ")"));
    } catch (const std::domain_error& e) {
        throw FalsificationError("non-integral scalar", e.what());
    }
}

std::string kind_name(ClassKind kind) {
    switch (kind) {
        case ClassKind::todd: return "todd";
        case ClassKind::chern_character: return "ch";
        case ClassKind::ct: return "ct";
        case ClassKind::q: return "q";
        case ClassKind::todd_inverse: return "toddinv";
    }
    return "?";
}

ClassKind parse_kind(const std::string& name) {
    for (auto kind : {ClassKind::todd, ClassKind::chern_character, ClassKind::ct, ClassKind::q,
                      ClassKind::todd_inverse})
        if (kind_name(kind) == name) return kind;
    throw std::invalid_argument("unknown class kind: " + name);
}

// ---------------------------------------------------------------------------

std::vector<Rational> todd_series(int n) {
    // x/(1-e^{-x}) = sum (-1)^k B_k x^k / k!
    std::vector<Rational> a;
    for (int k = 0; k <= n; ++k) {
        Rational c = bernoulli(static_cast<unsigned>(k)) / Rational(factorial(static_cast<unsigned>(k)));
        if (k % 2 == 1) c = -c;
        a.push_back(c);
    }
    return a;
}

std::vector<Rational> one_minus_exp_neg_series(int n) {
    std::vector<Rational> g{Rational(0)};
    for (int i = 1; i <= n; ++i) {
        Rational c(1, factorial(static_cast<unsigned>(i)));
        c.canonicalize();
        g.push_back(i % 2 == 1 ? c : Rational(-c));
    }
    return g;
}

std::vector<Rational> todd_inverse_series(int n) {
    std::vector<Rational> h;
    for (int k = 0; k <= n; ++k) {
        Rational c(1, factorial(static_cast<unsigned>(k + 1)));
        c.canonicalize();
        h.push_back(k % 2 == 0 ? c : Rational(-c));
    }
    return h;
}

std::vector<Rational> exp_series(int n) {
    std::vector<Rational> e;
    for (int k = 0; k <= n; ++k) {
        Rational c(1, factorial(static_cast<unsigned>(k)));
        c.canonicalize();
        e.push_back(c);
    }
    return e;
}

std::vector<Rational> series_log(const std::vector<Rational>& f) {
    if (f.empty() || f[0] != 1) throw std::invalid_argument("series_log needs constant term 1");
    // k g_k = k f_k - sum_{j<k} j g_j f_{k-j}
    std::vector<Rational> g(f.size(), Rational(0));
    for (std::size_t k = 1; k < f.size(); ++k) {
        Rational acc = Rational(static_cast<long>(k)) * f[k];
        for (std::size_t j = 1; j < k; ++j) acc -= Rational(static_cast<long>(j)) * g[j] * f[k - j];
        g[k] = acc / Rational(static_cast<long>(k));
        g[k].canonicalize();
    }
    return g;
}

GradedPolynomial compose(const std::vector<Rational>& coeffs, const GradedPolynomial& p) {
    if (p.truncation() >= GradedPolynomial::untruncated)
        throw std::invalid_argument("series composition needs a truncated argument");
    if (p.coefficient(Exponents(p.alphabet()->size(), 0)) != 0)
        throw std::invalid_argument("series composition needs an argument without constant term");
    GradedPolynomial out(p.alphabet(), p.truncation());
    GradedPolynomial power = GradedPolynomial::constant(p.alphabet(), 1, p.truncation());
    for (std::size_t k = 0; k < coeffs.size() && !power.is_zero(); ++k) {
        if (coeffs[k] != 0) out += power * coeffs[k];
        power = power * p;
    }
    if (!power.is_zero() && static_cast<int>(coeffs.size()) <= p.truncation())
        throw std::invalid_argument("series too short for the truncation degree");
    return out;
}

GradedPolynomial polynomial_exp(const GradedPolynomial& p) {
    return compose(exp_series(p.truncation()), p);
}

// ---------------------------------------------------------------------------

std::vector<std::string> chern_names(int count, const std::string& prefix) {
    std::vector<std::string> names;
    for (int i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
    return names;
}

AlphabetPtr todd_alphabet(int m) { return chern_alphabet(m); }
AlphabetPtr chern_character_alphabet(int m) { return chern_alphabet(0, true, m); }
AlphabetPtr ct_alphabet(int m) { return chern_alphabet(m, true, m); }
AlphabetPtr q_alphabet(int m) { return chern_alphabet(m - 1, false, 0, true); }

namespace {

Integer todd_value(int m) { return todd_denominator(static_cast<unsigned>(m)).value(); }

void certify_integral(const GradedPolynomial& p, const std::string& name) {
    for (const auto& [e, c] : p.terms()) {
        if (!is_integer(c))
            throw FalsificationError(name + " has a non-integral coefficient",
                                     "at " + p.monomial_string(e) + ": " + to_string(c));
    }
}

Integer integral_scalar(const Integer& a, const Integer& b, const std::string& what) {
    try {
        return checked_quotient(a, b, what);
    } catch (const std::domain_error& e) {
        throw FalsificationError("non-integral scalar", e.what());
    }
}

GradedPolynomial todd_rational_part(int m) {
    auto orbit = multiplicative_orbit_sum(todd_series(m), m, m);
    return monomial_to_elementary(orbit, todd_alphabet(m), chern_names(m));
}

GradedPolynomial chern_character_part(int m) {
    auto target = chern_character_alphabet(m);
    if (m == 0) return GradedPolynomial::variable(target, "r");
    auto orbit = additive_orbit_sum(exp_series(m), m, m);
    return monomial_to_elementary(orbit, target, chern_names(m, "cp"));
}

}  // namespace

std::pair<UniversalClass, UniversalClass> universal_todd(int m) {
    if (m < 0) throw std::invalid_argument("degree must be non-negative");
    GradedPolynomial td = todd_rational_part(m);
    GradedPolynomial numerator = td * Rational(todd_value(m));
    const std::string tag = std::to_string(m);
    certify_integral(numerator, "TdNum_" + tag);
    return {UniversalClass{"Td_" + tag, m, td, td.is_integral()},
            UniversalClass{"TdNum_" + tag, m, numerator, true}};
}

GradedPolynomial todd_numerator_via_power_sums(int m) {
    if (m < 0) throw std::invalid_argument("degree must be non-negative");
    auto target = todd_alphabet(m);
    const auto names = chern_names(m);
    const auto b = series_log(todd_series(m));
    GradedPolynomial log_td(target, m);
    for (int k = 1; k <= m; ++k) {
        if (b[k] == 0) continue;
        log_td += newton_power_sum(k, target, names).truncated(m) * b[k];
    }
    return polynomial_exp(log_td).homogeneous_part(m).truncated(GradedPolynomial::untruncated) *
           Rational(todd_value(m));
}

std::pair<UniversalClass, UniversalClass> universal_chern_character(int m) {
    if (m < 0) throw std::invalid_argument("degree must be non-negative");
    GradedPolynomial ch = chern_character_part(m);
    GradedPolynomial numerator = ch * Rational(factorial(static_cast<unsigned>(m)));
    const std::string tag = std::to_string(m);
    certify_integral(numerator, "s_" + tag);
    if (m >= 1) {
        auto newton = newton_power_sum(m, numerator.alphabet(), chern_names(m, "cp"));
        if (!(newton == numerator))
            throw FalsificationError("s_" + tag + " differs from the Newton power sum",
                                     first_difference(numerator, newton));
    }
    return {UniversalClass{"ch_" + tag, m, ch, ch.is_integral()},
            UniversalClass{"s_" + tag, m, numerator, true}};
}

UniversalClass universal_ct(int m) {
    if (m < 0) throw std::invalid_argument("degree must be non-negative");
    // T_m (ch . Td)_m expanded with rational coefficients, then certified.
    auto target = ct_alphabet(m);
    GradedPolynomial sum(target);
    for (int j = 0; j <= m; ++j) {
        sum += chern_character_part(j).embed(target) * todd_rational_part(m - j).embed(target);
    }
    sum *= Rational(todd_value(m));
    certify_integral(sum, "CT_" + std::to_string(m));
    return UniversalClass{"CT_" + std::to_string(m), m, sum, true};
}

UniversalClass q_poly(int m) {
    if (m < 1) throw std::invalid_argument("Q_m needs m >= 1");
    auto target = q_alphabet(m);
    const auto g = one_minus_exp_neg_series(m);
    GradedPolynomial x = GradedPolynomial::variable(target, "x");
    GradedPolynomial sum(target);
    for (int i = 1; i <= m; ++i) {
        if (m - i > m - 1) continue;
        sum += x.pow(static_cast<unsigned>(i)) * g[i] * todd_rational_part(m - i).embed(target);
    }
    sum *= Rational(todd_value(m - 1));
    certify_integral(sum, "Q_" + std::to_string(m));
    return UniversalClass{"Q_" + std::to_string(m), m, sum, true};
}

UniversalClass todd_inverse_numerator(int m, int r) {
    if (r < 1 || m < r) throw std::invalid_argument("TdInv needs m >= r >= 1");
    auto orbit = multiplicative_orbit_sum(todd_inverse_series(m - r), r, m - r);
    GradedPolynomial p = monomial_to_elementary(orbit, todd_alphabet(r), chern_names(r));
    p *= Rational(factorial(static_cast<unsigned>(m)));
    const std::string name = "TdInv_" + std::to_string(m - r) + "(r=" + std::to_string(r) + ")";
    certify_integral(p, name);
    return UniversalClass{name, m - r, p, true};
}

// ---------------------------------------------------------------------------

Exponents parse_monomial(const Alphabet& alphabet, const std::string& text) {
    Exponents e(alphabet.size(), 0);
    std::string normalized = text;
    for (auto& ch : normalized)
        if (ch == '*') ch = ' ';
    std::istringstream words(normalized);
    std::string factor;
    while (words >> factor) {
        if (factor == "1") continue;
        auto caret = factor.find('^');
        const std::string name = factor.substr(0, caret);
        int exponent = 1;
        if (caret != std::string::npos) exponent = std::stoi(factor.substr(caret + 1));
        e[alphabet.index_of(name)] += exponent;
    }
    return e;
}

GradedPolynomial ClassTable::todd(int m) const {
    const auto key = std::make_tuple(ClassKind::todd, m, 0);
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    GradedPolynomial p = universal_todd(m).second.polynomial;
    std::lock_guard lock(mutex_);
    return cache_.try_emplace(key, std::move(p)).first->second;
}

GradedPolynomial ClassTable::chern_character(int m) const {
    const auto key = std::make_tuple(ClassKind::chern_character, m, 0);
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    GradedPolynomial p = universal_chern_character(m).second.polynomial;
    std::lock_guard lock(mutex_);
    return cache_.try_emplace(key, std::move(p)).first->second;
}

GradedPolynomial ClassTable::ct(int m) const {
    const auto key = std::make_tuple(ClassKind::ct, m, 0);
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    auto target = ct_alphabet(m);
    GradedPolynomial sum(target);
    const Integer tm = todd_value(m);
    for (int j = 0; j <= m; ++j) {
        const Integer denom = factorial(static_cast<unsigned>(j)) * todd_value(m - j);
        const Integer scalar = integral_scalar(tm, denom, "T_" + std::to_string(m) + "/(" + std::to_string(j) +
                                                              "! T_" + std::to_string(m - j) + ")");
        sum += chern_character(j).embed(target) * todd(m - j).embed(target) * Rational(scalar);
    }
    std::lock_guard lock(mutex_);
    return cache_.try_emplace(key, std::move(sum)).first->second;
}

GradedPolynomial ClassTable::q(int m) const {
    if (m < 1) throw std::invalid_argument("Q_m needs m >= 1");
    const auto key = std::make_tuple(ClassKind::q, m, 0);
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    auto target = q_alphabet(m);
    GradedPolynomial x = GradedPolynomial::variable(target, "x");
    GradedPolynomial sum(target);
    const Integer top = todd_value(m - 1);
    for (int i = 1; i <= m; ++i) {
        const Integer denom = factorial(static_cast<unsigned>(i)) * todd_value(m - i);
        Integer scalar = integral_scalar(top, denom, "T_" + std::to_string(m - 1) + "/(" + std::to_string(i) +
                                                         "! T_" + std::to_string(m - i) + ")");
        if (i % 2 == 0) scalar = -scalar;
        sum += x.pow(static_cast<unsigned>(i)) * todd(m - i).embed(target) * Rational(scalar);
    }
    std::lock_guard lock(mutex_);
    return cache_.try_emplace(key, std::move(sum)).first->second;
}

GradedPolynomial ClassTable::todd_inverse(int m, int r) const {
    const auto key = std::make_tuple(ClassKind::todd_inverse, m, r);
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    GradedPolynomial p = todd_inverse_numerator(m, r).polynomial;
    std::lock_guard lock(mutex_);
    return cache_.try_emplace(key, std::move(p)).first->second;
}

void ClassTable::mutate(ClassKind kind, int degree, const std::string& monomial, const Rational& delta) {
    GradedPolynomial base;
    switch (kind) {
        case ClassKind::todd: base = todd(degree); break;
        case ClassKind::chern_character: base = chern_character(degree); break;
        default: throw std::invalid_argument("only todd and ch entries can be mutated");
    }
    base.add_term(parse_monomial(*base.alphabet(), monomial), delta);
    std::lock_guard lock(mutex_);
    std::erase_if(cache_, [](const auto& entry) {
        auto k = std::get<0>(entry.first);
        return k == ClassKind::ct || k == ClassKind::q;
    });
    cache_.insert_or_assign(std::make_tuple(kind, degree, 0), std::move(base));
    mutations_.push_back(kind_name(kind) + ":" + std::to_string(degree) + ":" + monomial);
}

bool ClassTable::mutated() const {
    std::lock_guard lock(mutex_);
    return !mutations_.empty();
}

const ClassTable& ClassTable::shared() {
    static const ClassTable table;
    return table;
}

}  // namespace igrr
