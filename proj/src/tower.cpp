#include "igrr/tower.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace igrr {

std::size_t DivisorClass::support() const {
    std::size_t n = coefficients.size();
    while (n > 0 && coefficients[n - 1] == 0) --n;
    return n;
}

DivisorClass DivisorClass::resized(std::size_t levels) const {
    if (support() > levels) throw std::invalid_argument("divisor references a level beyond " + std::to_string(levels));
    std::vector<long> c(levels, 0);
    for (std::size_t i = 0; i < levels; ++i) c[i] = (*this)[i];
    return DivisorClass(std::move(c));
}

DivisorClass DivisorClass::operator+(const DivisorClass& other) const {
    std::vector<long> c(std::max(coefficients.size(), other.coefficients.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (*this)[i] + other[i];
    return DivisorClass(std::move(c));
}

DivisorClass DivisorClass::operator-(const DivisorClass& other) const { return *this + (-other); }

DivisorClass DivisorClass::operator-() const { return *this * -1; }

DivisorClass DivisorClass::operator*(long s) const {
    DivisorClass out = *this;
    for (auto& c : out.coefficients) c *= s;
    return out;
}

bool operator==(const DivisorClass& a, const DivisorClass& b) { return (a <=> b) == 0; }

DivisorClass hyperplane(std::size_t level) {
    std::vector<long> c(level + 1, 0);
    c[level] = 1;
    return DivisorClass(std::move(c));
}

Tower::Tower() : alphabet_(empty_alphabet()) {}

Tower::Tower(std::vector<TowerLevel> levels) : levels_(std::move(levels)) {
    std::vector<Variable> vars;
    for (std::size_t k = 0; k < levels_.size(); ++k) {
        auto& level = levels_[k];
        if (level.summands.empty())
            throw std::invalid_argument("level " + std::to_string(k + 1) + " has no line summands");
        for (auto& s : level.summands) {
            if (s.support() > k)
                throw std::invalid_argument("level " + std::to_string(k + 1) +
                                            " references a hyperplane at or above its own level");
            s = s.resized(k);
        }
        if (level.name.empty()) level.name = "ξ" + std::to_string(k + 1);
        for (const auto& v : vars)
            if (v.name == level.name) throw std::invalid_argument("duplicate hyperplane name " + level.name);
        vars.push_back({level.name, 1, VariableRole::hyperplane});
        dimension_ += level.rank();
    }
    alphabet_ = make_alphabet(std::move(vars));

    // xi^(r+1) = xi^(r+1) - prod (xi - L_i)
    for (std::size_t k = 0; k < levels_.size(); ++k) {
        const GradedPolynomial xi = variable(k);
        GradedPolynomial prod = one();
        for (const auto& s : levels_[k].summands) prod = prod * (xi - divisor(s));
        relation_tail_.push_back(xi.pow(static_cast<unsigned>(levels_[k].rank() + 1)) - prod);
    }
}

TowerPtr Tower::point() {
    static const TowerPtr p = std::make_shared<const Tower>();
    return p;
}

TowerPtr Tower::build(std::vector<TowerLevel> levels) { return std::make_shared<const Tower>(std::move(levels)); }

TowerPtr Tower::projective_space(int n, std::string name) {
    if (n < 0) throw std::invalid_argument("negative projective dimension");
    TowerLevel level;
    level.summands.assign(static_cast<std::size_t>(n + 1), DivisorClass{});
    level.name = std::move(name);
    return build({level});
}

TowerPtr Tower::base(std::size_t keep) const {
    if (keep > levels_.size()) throw std::invalid_argument("base larger than tower");
    if (keep == 0) return point();
    return build(std::vector<TowerLevel>(levels_.begin(), levels_.begin() + static_cast<long>(keep)));
}

GradedPolynomial Tower::zero() const { return GradedPolynomial(alphabet_); }

GradedPolynomial Tower::one() const { return GradedPolynomial::constant(alphabet_, 1); }

GradedPolynomial Tower::variable(std::size_t level) const {
    return GradedPolynomial::variable(alphabet_, levels_.at(level).name);
}

GradedPolynomial Tower::divisor(const DivisorClass& d) const {
    if (d.support() > levels_.size()) throw std::invalid_argument("divisor references a level beyond the tower");
    GradedPolynomial out = zero();
    for (std::size_t k = 0; k < d.support(); ++k) {
        if (d[k] == 0) continue;
        Exponents e(levels_.size(), 0);
        e[k] = 1;
        out.add_term(e, d[k]);
    }
    return out;
}

GradedPolynomial Tower::reduce_level(const GradedPolynomial& p, std::size_t k, bool& changed) const {
    const int r = levels_[k].rank();
    GradedPolynomial current = p.truncated(dimension_);
    for (;;) {
        GradedPolynomial next(alphabet_, dimension_);
        bool any = false;
        for (const auto& [e, c] : current.terms()) {
            if (e[k] <= r) {
                next.add_term(e, c);
                continue;
            }
            any = true;
            Exponents rest = e;
            rest[k] -= r + 1;
            next += GradedPolynomial::monomial(alphabet_, rest, c, dimension_) * relation_tail_[k];
        }
        if (!any) return current;
        changed = true;
        current = std::move(next);
    }
}

GradedPolynomial Tower::normal_form(const GradedPolynomial& p) const {
    GradedPolynomial q = p.alphabet() == alphabet_ ? p : p.embed(alphabet_);
    bool changed = false;
    for (std::size_t k = levels_.size(); k-- > 0;) q = reduce_level(q, k, changed);
    GradedPolynomial out(alphabet_);
    out += q.truncated(dimension_).embed(alphabet_);
    return out;
}

GradedPolynomial Tower::normal_form_in_order(const GradedPolynomial& p, const std::vector<std::size_t>& order) const {
    GradedPolynomial q = p.alphabet() == alphabet_ ? p : p.embed(alphabet_);
    for (;;) {
        bool changed = false;
        for (std::size_t k : order) q = reduce_level(q, k, changed);
        if (!changed) break;
    }
    return q.embed(alphabet_);
}

bool Tower::is_normal(const GradedPolynomial& p) const {
    for (const auto& [e, c] : p.terms())
        for (std::size_t k = 0; k < levels_.size(); ++k)
            if (e[k] > levels_[k].rank()) return false;
    return true;
}

GradedPolynomial Tower::multiply(const GradedPolynomial& a, const GradedPolynomial& b) const {
    return normal_form(a.truncated(dimension_) * b.truncated(dimension_));
}

GradedPolynomial Tower::power(const GradedPolynomial& a, unsigned k) const {
    GradedPolynomial out = one();
    for (unsigned i = 0; i < k; ++i) out = multiply(out, a);
    return out;
}

Rational Tower::degree(const GradedPolynomial& p) const {
    Exponents top(levels_.size());
    for (std::size_t k = 0; k < levels_.size(); ++k) top[k] = levels_[k].rank();
    return normal_form(p).coefficient(top);
}

DivisorClass Tower::ample_class() const { return DivisorClass(std::vector<long>(levels_.size(), 1)); }

namespace {

std::string render_divisor(const Tower& t, const DivisorClass& d, std::size_t levels) {
    std::string out;
    for (std::size_t k = 0; k < levels; ++k) {
        const long c = d[k];
        if (c == 0) continue;
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        const long a = c < 0 ? -c : c;
        if (a != 1) out += std::to_string(a) + "*";
        out += t.name_of(k);
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string Tower::describe() const {
    std::string out = "point";
    for (std::size_t k = 0; k < levels_.size(); ++k) {
        const auto& level = levels_[k];
        bool trivial = std::all_of(level.summands.begin(), level.summands.end(),
                                   [](const DivisorClass& d) { return d.is_zero(); });
        std::string bundle;
        if (trivial) {
            bundle = "trivial " + std::to_string(level.summands.size());
        } else {
            bundle = "[";
            for (std::size_t i = 0; i < level.summands.size(); ++i) {
                if (i) bundle += ", ";
                bundle += render_divisor(*this, level.summands[i], k);
            }
            bundle += "]";
        }
        const std::string inner = k == 0 ? out : "(" + out + ")";
        out = "P(" + bundle + ") as " + level.name + " over " + inner;
    }
    return out;
}

bool operator==(const Tower& a, const Tower& b) {
    if (a.levels_.size() != b.levels_.size()) return false;
    for (std::size_t k = 0; k < a.levels_.size(); ++k) {
        if (a.levels_[k].name != b.levels_[k].name) return false;
        if (a.levels_[k].summands != b.levels_[k].summands) return false;
    }
    return true;
}

ChowClass::ChowClass(TowerPtr tower, const GradedPolynomial& p)
    : tower_(std::move(tower)), poly_(tower_->normal_form(p)) {
    if (!poly_.is_integral()) throw std::domain_error("Chow class with non-integral coefficient: " + poly_.to_string());
}

ChowClass ChowClass::zero(TowerPtr tower) {
    auto z = tower->zero();
    return ChowClass(std::move(tower), z);
}

ChowClass ChowClass::one(TowerPtr tower) {
    auto o = tower->one();
    return ChowClass(std::move(tower), o);
}

ChowClass ChowClass::homogeneous_part(int degree) const { return ChowClass(tower_, poly_.homogeneous_part(degree)); }

void ChowClass::check_same(const ChowClass& o) const {
    if (tower_ != o.tower_ && !(*tower_ == *o.tower_)) throw std::invalid_argument("Chow classes on different towers");
}

ChowClass ChowClass::operator+(const ChowClass& o) const {
    check_same(o);
    return ChowClass(tower_, poly_ + o.poly_);
}

ChowClass ChowClass::operator-(const ChowClass& o) const {
    check_same(o);
    return ChowClass(tower_, poly_ - o.poly_);
}

ChowClass ChowClass::operator-() const { return ChowClass(tower_, -poly_); }

ChowClass ChowClass::operator*(const ChowClass& o) const {
    check_same(o);
    return ChowClass(tower_, tower_->multiply(poly_, o.poly_));
}

ChowClass ChowClass::operator*(const Rational& s) const { return ChowClass(tower_, poly_ * s); }

bool operator==(const ChowClass& a, const ChowClass& b) {
    if (a.tower_ != b.tower_ && !(*a.tower_ == *b.tower_)) return false;
    return a.poly_ == b.poly_;
}

ChowClass pushforward_chow(std::size_t levels, const ChowClass& alpha) {
    const auto& tower = *alpha.tower();
    if (levels > tower.level_count()) throw std::invalid_argument("cannot collapse more levels than the tower has");
    TowerPtr base = tower.base(tower.level_count() - levels);
    return ChowClass(base, pushforward_polynomial(tower, levels, alpha.polynomial()));
}

// Works on rational normal-form polynomials as well; used by the rational oracles.
GradedPolynomial pushforward_polynomial(const Tower& tower, std::size_t levels, const GradedPolynomial& p) {
    const std::size_t keep = tower.level_count() - levels;
    TowerPtr base = tower.base(keep);
    const GradedPolynomial q = tower.normal_form(p);
    GradedPolynomial out(base->alphabet());
    for (const auto& [e, c] : q.terms()) {
        bool top = true;
        for (std::size_t k = keep; k < tower.level_count(); ++k)
            if (e[k] != tower.level(k).rank()) top = false;
        if (!top) continue;
        Exponents f(e.begin(), e.begin() + static_cast<long>(keep));
        out.add_term(f, c);
    }
    return out;
}

ChowClass pullback_chow(const TowerPtr& target, const ChowClass& alpha) {
    const auto& base = *alpha.tower();
    if (base.level_count() > target->level_count())
        throw std::invalid_argument("pullback target is smaller than the base");
    for (std::size_t k = 0; k < base.level_count(); ++k)
        if (!(base.level(k).summands == target->level(k).summands) || base.name_of(k) != target->name_of(k))
            throw std::invalid_argument("pullback target does not sit over the given base");
    GradedPolynomial out(target->alphabet());
    for (const auto& [e, c] : alpha.polynomial().terms()) {
        Exponents f(target->level_count(), 0);
        std::copy(e.begin(), e.end(), f.begin());
        out.add_term(f, c);
    }
    return ChowClass(target, out);
}

GradedPolynomial level_chern_class(const Tower& tower, std::size_t k, int i) {
    const auto& summands = tower.level(k).summands;
    // e_i of the line roots
    std::vector<GradedPolynomial> e(summands.size() + 1, tower.zero());
    e[0] = tower.one();
    for (const auto& s : summands) {
        const GradedPolynomial d = tower.divisor(s);
        for (std::size_t j = summands.size(); j >= 1; --j) e[j] = e[j] + e[j - 1] * d;
    }
    if (i < 0 || i > static_cast<int>(summands.size())) return tower.zero();
    return tower.normal_form(e[static_cast<std::size_t>(i)]);
}

}  // namespace igrr
