#include "igrr/polynomial.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace igrr {

Alphabet::Alphabet(std::vector<Variable> variables) : variables_(std::move(variables)) {
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        const auto& v = variables_[i];
        if (v.name.empty()) throw std::invalid_argument("alphabet variable with empty name");
        if (v.weight < 0) throw std::invalid_argument("negative weight for variable " + v.name);
        if (!index_.emplace(v.name, i).second)
            throw std::invalid_argument("duplicate variable name " + v.name);
    }
}

std::optional<std::size_t> Alphabet::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t Alphabet::index_of(std::string_view name) const {
    auto idx = find(name);
    if (!idx) throw std::out_of_range("unknown variable " + std::string(name));
    return *idx;
}

AlphabetPtr make_alphabet(std::vector<Variable> variables) {
    return std::make_shared<const Alphabet>(std::move(variables));
}

const AlphabetPtr& empty_alphabet() {
    static const AlphabetPtr empty = make_alphabet({});
    return empty;
}

AlphabetPtr chern_alphabet(int chern_count, bool with_rank, int prime_count, bool with_divisor) {
    std::vector<Variable> vars;
    for (int i = 1; i <= chern_count; ++i)
        vars.push_back({"c" + std::to_string(i), i, VariableRole::chern});
    if (with_rank) vars.push_back({"r", 0, VariableRole::rank});
    for (int i = 1; i <= prime_count; ++i)
        vars.push_back({"cp" + std::to_string(i), i, VariableRole::chern_prime});
    if (with_divisor) vars.push_back({"x", 1, VariableRole::divisor});
    return make_alphabet(std::move(vars));
}

AlphabetPtr root_alphabet(int root_count, std::string_view prefix, VariableRole role) {
    std::vector<Variable> vars;
    for (int i = 1; i <= root_count; ++i)
        vars.push_back({std::string(prefix) + std::to_string(i), 1, role});
    return make_alphabet(std::move(vars));
}

// ---------------------------------------------------------------------------

GradedPolynomial::GradedPolynomial(AlphabetPtr alphabet, int truncation)
    : alphabet_(std::move(alphabet)), truncation_(truncation) {
    if (!alphabet_) alphabet_ = empty_alphabet();
    if (truncation_ < 0) throw std::invalid_argument("negative truncation degree");
}

GradedPolynomial GradedPolynomial::constant(AlphabetPtr alphabet, const Rational& value, int truncation) {
    GradedPolynomial p(std::move(alphabet), truncation);
    p.add_term(Exponents(p.alphabet_->size(), 0), value);
    return p;
}

GradedPolynomial GradedPolynomial::variable(AlphabetPtr alphabet, std::string_view name, int truncation) {
    GradedPolynomial p(std::move(alphabet), truncation);
    Exponents e(p.alphabet_->size(), 0);
    e[p.alphabet_->index_of(name)] = 1;
    p.add_term(e, 1);
    return p;
}

GradedPolynomial GradedPolynomial::monomial(AlphabetPtr alphabet, Exponents exponents, const Rational& coeff,
                                            int truncation) {
    GradedPolynomial p(std::move(alphabet), truncation);
    if (exponents.size() != p.alphabet_->size())
        throw std::invalid_argument("exponent vector length does not match alphabet");
    p.add_term(exponents, coeff);
    return p;
}

int GradedPolynomial::weighted_degree(const Exponents& e) const {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * (*alphabet_)[i].weight;
    return d;
}

Rational GradedPolynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GradedPolynomial::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    if (weighted_degree(e) > truncation_) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GradedPolynomial GradedPolynomial::homogeneous_part(int degree) const {
    GradedPolynomial out(alphabet_, truncation_);
    for (const auto& [e, c] : terms_)
        if (weighted_degree(e) == degree) out.terms_.emplace(e, c);
    return out;
}

GradedPolynomial GradedPolynomial::truncated(int degree) const {
    GradedPolynomial out(alphabet_, std::min(degree, truncation_));
    for (const auto& [e, c] : terms_)
        if (weighted_degree(e) <= out.truncation_) out.terms_.emplace(e, c);
    return out;
}

bool GradedPolynomial::is_homogeneous(int degree) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return weighted_degree(t.first) == degree; });
}

bool GradedPolynomial::is_integral() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return is_integer(t.second); });
}

int GradedPolynomial::max_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, weighted_degree(e));
    return d;
}

int GradedPolynomial::degree_in(std::size_t var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

void GradedPolynomial::check_compatible(const GradedPolynomial& other) const {
    if (alphabet_ != other.alphabet_ && !(*alphabet_ == *other.alphabet_))
        throw std::invalid_argument("polynomials over different alphabets");
}

GradedPolynomial GradedPolynomial::operator-() const {
    GradedPolynomial out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& other) {
    check_compatible(other);
    if (other.truncation_ < truncation_) *this = truncated(other.truncation_);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& other) {
    check_compatible(other);
    if (other.truncation_ < truncation_) *this = truncated(other.truncation_);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

GradedPolynomial& GradedPolynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
}

GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) {
    a.check_compatible(b);
    const int trunc = std::min(a.truncation_, b.truncation_);
    GradedPolynomial out(a.alphabet_, trunc);
    struct Entry {
        const Exponents* e;
        const Rational* c;
        int degree;
    };
    auto entries = [](const GradedPolynomial& p) {
        std::vector<Entry> v;
        v.reserve(p.terms_.size());
        for (const auto& [e, c] : p.terms_) v.push_back({&e, &c, p.weighted_degree(e)});
        std::sort(v.begin(), v.end(), [](const Entry& x, const Entry& y) { return x.degree < y.degree; });
        return v;
    };
    const auto ea = entries(a);
    const auto eb = entries(b);
    const std::size_t n = a.alphabet_->size();
    Exponents e(n);
    Rational prod;
    for (const auto& x : ea) {
        for (const auto& y : eb) {
            if (x.degree + y.degree > trunc) break;
            for (std::size_t i = 0; i < n; ++i) e[i] = (*x.e)[i] + (*y.e)[i];
            mpq_mul(prod.get_mpq_t(), x.c->get_mpq_t(), y.c->get_mpq_t());
            auto [it, inserted] = out.terms_.try_emplace(e, prod);
            if (!inserted) {
                it->second += prod;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    }
    return out;
}

GradedPolynomial GradedPolynomial::pow(unsigned k) const {
    GradedPolynomial result = constant(alphabet_, 1, truncation_);
    GradedPolynomial base = *this;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

bool operator==(const GradedPolynomial& a, const GradedPolynomial& b) {
    if (!(*a.alphabet_ == *b.alphabet_)) return false;
    return a.terms_ == b.terms_;
}

GradedPolynomial GradedPolynomial::embed(AlphabetPtr target, int truncation) const {
    std::vector<std::optional<std::size_t>> map(alphabet_->size());
    for (std::size_t i = 0; i < alphabet_->size(); ++i) map[i] = target->find((*alphabet_)[i].name);
    GradedPolynomial out(target, truncation);
    for (const auto& [e, c] : terms_) {
        Exponents f(target->size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!map[i])
                throw std::invalid_argument("variable " + (*alphabet_)[i].name + " missing from target alphabet");
            f[*map[i]] += e[i];
        }
        out.add_term(f, c);
    }
    return out;
}

GradedPolynomial GradedPolynomial::substitute(
    const Valuation& values, AlphabetPtr target, int truncation,
    const std::function<GradedPolynomial(const GradedPolynomial&)>& reduce) const {
    const std::size_t n = alphabet_->size();
    std::vector<std::optional<GradedPolynomial>> images(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& name = (*alphabet_)[i].name;
        auto it = values.find(name);
        if (it != values.end()) {
            images[i] = it->second.embed(target, truncation);
        } else if (target->contains(name)) {
            images[i] = variable(target, name, truncation);
        }
    }
    auto apply = [&](GradedPolynomial p) { return reduce ? reduce(p) : p; };
    // powers[i][k] = images[i]^k, filled on demand.
    std::vector<std::vector<GradedPolynomial>> powers(n);
    auto power = [&](std::size_t i, int k) -> const GradedPolynomial& {
        if (!images[i]) throw std::invalid_argument("no value for variable " + (*alphabet_)[i].name);
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(constant(target, 1, truncation));
        while (static_cast<int>(cache.size()) <= k) cache.push_back(apply(cache.back() * *images[i]));
        return cache[k];
    };
    GradedPolynomial out(target, truncation);
    for (const auto& [e, c] : terms_) {
        GradedPolynomial term = constant(target, c, truncation);
        for (std::size_t i = 0; i < n && !term.is_zero(); ++i)
            if (e[i] > 0) term = apply(term * power(i, e[i]));
        out += term;
    }
    return out;
}

bool graded_lex_less(const Alphabet& alphabet, const Exponents& a, const Exponents& b) {
    int da = 0, db = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        da += a[i] * alphabet[i].weight;
        db += b[i] * alphabet[i].weight;
    }
    if (da != db) return da < db;
    return a > b;
}

std::string GradedPolynomial::monomial_string(const Exponents& e) const {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += ' ';
        s += (*alphabet_)[i].name + "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

namespace {

std::vector<std::pair<const Exponents*, const Rational*>> canonical_terms(const GradedPolynomial& p) {
    std::vector<std::pair<const Exponents*, const Rational*>> v;
    for (const auto& [e, c] : p.terms()) v.emplace_back(&e, &c);
    const Alphabet& alpha = *p.alphabet();
    std::sort(v.begin(), v.end(),
              [&](const auto& x, const auto& y) { return graded_lex_less(alpha, *x.first, *y.first); });
    return v;
}

}  // namespace

std::string GradedPolynomial::to_canonical() const {
    std::string out;
    for (const auto& [e, c] : canonical_terms(*this)) {
        out += c->get_num().get_str() + "/" + c->get_den().get_str();
        for (std::size_t i = 0; i < e->size(); ++i)
            if ((*e)[i] != 0) out += " " + (*alphabet_)[i].name + "^" + std::to_string((*e)[i]);
        out += '\n';
    }
    return out;
}

std::string GradedPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : canonical_terms(*this)) {
        Rational mag = abs(*c);
        std::string mono;
        for (std::size_t i = 0; i < e->size(); ++i) {
            if ((*e)[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += (*alphabet_)[i].name;
            if ((*e)[i] > 1) mono += "^" + std::to_string((*e)[i]);
        }
        if (first) {
            if (*c < 0) out += "-";
        } else {
            out += *c < 0 ? " - " : " + ";
        }
        first = false;
        if (mono.empty()) {
            out += igrr::to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += igrr::to_string(mag) + "*" + mono;
        }
    }
    return out;
}

GradedPolynomial GradedPolynomial::from_canonical(AlphabetPtr alphabet, std::string_view text, int truncation) {
    GradedPolynomial p(alphabet, truncation);
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        std::istringstream words(line);
        std::string coeff;
        words >> coeff;
        auto slash = coeff.find('/');
        if (slash == std::string::npos) throw std::invalid_argument("malformed coefficient: " + coeff);
        Rational c = make_rational(Integer(coeff.substr(0, slash)), Integer(coeff.substr(slash + 1)));
        Exponents e(alphabet->size(), 0);
        std::string factor;
        while (words >> factor) {
            auto caret = factor.find('^');
            if (caret == std::string::npos) throw std::invalid_argument("malformed factor: " + factor);
            e[alphabet->index_of(factor.substr(0, caret))] += std::stoi(factor.substr(caret + 1));
        }
        p.add_term(e, c);
    }
    return p;
}

std::string first_difference(const GradedPolynomial& a, const GradedPolynomial& b) {
    GradedPolynomial diff = a - b;
    if (diff.is_zero()) return {};
    const auto terms = canonical_terms(diff);
    const Exponents& e = *terms.front().first;
    return "at " + a.monomial_string(e) + ": " + igrr::to_string(a.coefficient(e)) + " vs " +
           igrr::to_string(b.coefficient(e));
}

}  // namespace igrr
