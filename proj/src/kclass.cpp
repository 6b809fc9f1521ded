#include "igrr/kclass.hpp"

#include <stdexcept>

namespace igrr {

KClass::KClass(TowerPtr tower) : tower_(std::move(tower)) {}

KClass KClass::line(TowerPtr tower, const DivisorClass& d, const Integer& multiplicity) {
    KClass k(std::move(tower));
    k.add(d, multiplicity);
    return k;
}

KClass KClass::trivial(TowerPtr tower, const Integer& rank) { return line(std::move(tower), DivisorClass{}, rank); }

void KClass::add(const DivisorClass& d, const Integer& multiplicity) {
    if (multiplicity == 0) return;
    const DivisorClass key = d.resized(tower_->level_count());
    auto [it, inserted] = terms_.try_emplace(key, multiplicity);
    if (!inserted) {
        it->second += multiplicity;
        if (it->second == 0) terms_.erase(it);
    }
}

Integer KClass::rank() const {
    Integer r = 0;
    for (const auto& [d, m] : terms_) r += m;
    return r;
}

bool KClass::is_effective() const {
    for (const auto& [d, m] : terms_)
        if (m < 0) return false;
    return true;
}

void KClass::check_same(const KClass& o) const {
    if (tower_ != o.tower_ && !(*tower_ == *o.tower_)) throw std::invalid_argument("K classes on different towers");
}

KClass KClass::operator+(const KClass& o) const {
    check_same(o);
    KClass out = *this;
    for (const auto& [d, m] : o.terms_) out.add(d, m);
    return out;
}

KClass KClass::operator-(const KClass& o) const { return *this + (-o); }

KClass KClass::operator-() const { return *this * Integer(-1); }

KClass KClass::operator*(const KClass& o) const {
    check_same(o);
    KClass out(tower_);
    for (const auto& [d, m] : terms_)
        for (const auto& [e, n] : o.terms_) out.add(d + e, m * n);
    return out;
}

KClass KClass::operator*(const Integer& s) const {
    KClass out(tower_);
    for (const auto& [d, m] : terms_) out.add(d, m * s);
    return out;
}

KClass KClass::dual() const {
    KClass out(tower_);
    for (const auto& [d, m] : terms_) out.add(-d, m);
    return out;
}

KClass KClass::twist(const DivisorClass& e) const {
    KClass out(tower_);
    for (const auto& [d, m] : terms_) out.add(d + e, m);
    return out;
}

namespace {

// Coefficients 0..degree of prod_D (1 + sign t [O(D)])^(+-m), as K classes.
std::vector<KClass> generating_series(const KClass& f, int degree, bool symmetric) {
    std::vector<KClass> series(static_cast<std::size_t>(degree + 1), KClass(f.tower()));
    series[0] = KClass::trivial(f.tower(), 1);
    for (const auto& [d, m] : f.terms()) {
        const KClass line = KClass::line(f.tower(), d);
        for (Integer copy = 0; copy < m; ++copy) {
            if (symmetric) {
                // multiply by 1/(1 - tL) = sum t^j L^j
                for (int j = 1; j <= degree; ++j)
                    series[static_cast<std::size_t>(j)] =
                        series[static_cast<std::size_t>(j)] + series[static_cast<std::size_t>(j - 1)] * line;
            } else {
                for (int j = degree; j >= 1; --j)
                    series[static_cast<std::size_t>(j)] =
                        series[static_cast<std::size_t>(j)] + series[static_cast<std::size_t>(j - 1)] * line;
            }
        }
    }
    return series;
}

}  // namespace

KClass KClass::wedge(int i) const {
    if (!is_effective()) throw std::domain_error("exterior power of a virtual class");
    if (i < 0) return KClass(tower_);
    return generating_series(*this, i, false).back();
}

KClass KClass::sym(int a) const {
    if (!is_effective()) throw std::domain_error("symmetric power of a virtual class");
    if (a < 0) return KClass(tower_);
    return generating_series(*this, a, true).back();
}

KClass KClass::determinant() const {
    DivisorClass total;
    for (const auto& [d, m] : terms_) total = total + d * m.get_si();
    return line(tower_, total);
}

namespace {

// Laurent arithmetic in l = [O(xi_k)] modulo the level relation, with
// coefficients in the group ring of the levels below.
class LevelReducer {
public:
    LevelReducer(const TowerPtr& tower, std::size_t k) : tower_(tower), k_(k) {
        const auto& summands = tower->level(k).summands;
        r_ = static_cast<int>(summands.size()) - 1;
        // e_0..e_(r+1) of the line symbols [L_i]
        e_.assign(summands.size() + 1, KClass(tower));
        e_[0] = KClass::trivial(tower, 1);
        for (const auto& s : summands) {
            const KClass line = KClass::line(tower, s);
            for (std::size_t j = summands.size(); j >= 1; --j) e_[j] = e_[j] + e_[j - 1] * line;
        }
        top_inverse_ = KClass(tower);
        if (e_.back().terms().size() != 1 || e_.back().terms().begin()->second != 1)
            throw std::logic_error("relation inversion failed: top coefficient is not a line");
        top_inverse_ = e_.back().dual();
        powers_.emplace(0, unit(0));
    }

    int rank() const { return r_; }

    // l^a as coefficients of l^0..l^r
    const std::vector<KClass>& power(int a) {
        if (auto it = powers_.find(a); it != powers_.end()) return it->second;
        std::vector<KClass> v = a > 0 ? times_l(power(a - 1)) : times_l_inverse(power(a + 1));
        return powers_.emplace(a, std::move(v)).first->second;
    }

private:
    std::vector<KClass> unit(int j) const {
        std::vector<KClass> v(static_cast<std::size_t>(r_ + 1), KClass(tower_));
        v[static_cast<std::size_t>(j)] = KClass::trivial(tower_, 1);
        return v;
    }

    // l^(r+1) = sum_(j=1..r+1) (-1)^(j+1) e_j l^(r+1-j)
    std::vector<KClass> times_l(const std::vector<KClass>& v) const {
        std::vector<KClass> out(v.size(), KClass(tower_));
        for (int j = 0; j < r_; ++j) out[static_cast<std::size_t>(j + 1)] = v[static_cast<std::size_t>(j)];
        const KClass& over = v[static_cast<std::size_t>(r_)];
        if (!over.is_zero())
            for (int j = 1; j <= r_ + 1; ++j) {
                const KClass term = over * e_[static_cast<std::size_t>(j)];
                auto& slot = out[static_cast<std::size_t>(r_ + 1 - j)];
                slot = j % 2 == 0 ? slot - term : slot + term;
            }
        return out;
    }

    // l^(-1) = (-1)^r e_(r+1)^(-1) sum_(j=0..r) (-1)^j e_j l^(r-j)
    std::vector<KClass> times_l_inverse(const std::vector<KClass>& v) const {
        std::vector<KClass> out(v.size(), KClass(tower_));
        for (int j = 1; j <= r_; ++j) out[static_cast<std::size_t>(j - 1)] = v[static_cast<std::size_t>(j)];
        const KClass& low = v[0];
        if (!low.is_zero()) {
            const KClass scaled = low * top_inverse_ * Integer(r_ % 2 == 0 ? 1 : -1);
            for (int j = 0; j <= r_; ++j) {
                const KClass term = scaled * e_[static_cast<std::size_t>(j)];
                auto& slot = out[static_cast<std::size_t>(r_ - j)];
                slot = j % 2 == 0 ? slot + term : slot - term;
            }
        }
        return out;
    }

    TowerPtr tower_;
    std::size_t k_;
    int r_ = 0;
    std::vector<KClass> e_;
    KClass top_inverse_{Tower::point()};
    std::map<int, std::vector<KClass>> powers_;
};

DivisorClass without_level(const DivisorClass& d, std::size_t k) {
    DivisorClass out = d;
    if (k < out.coefficients.size()) out.coefficients[k] = 0;
    return out;
}

DivisorClass truncate_levels(const DivisorClass& d, std::size_t keep) {
    std::vector<long> c(keep, 0);
    for (std::size_t i = 0; i < keep; ++i) c[i] = d[i];
    return DivisorClass(std::move(c));
}

// Rewrites each [O(D)] so that the xi_k coefficient lies in [0, r_k]
// (`negative_only` leaves positive exponents alone).
KClass reduce_level(const KClass& f, std::size_t k, bool negative_only) {
    LevelReducer reducer(f.tower(), k);
    const int r = reducer.rank();
    KClass out(f.tower());
    for (const auto& [d, m] : f.terms()) {
        const long a = d[k];
        if (a >= 0 && (negative_only || a <= r)) {
            out.add(d, m);
            continue;
        }
        const auto& coeffs = reducer.power(static_cast<int>(a));
        const DivisorClass rest = without_level(d, k);
        for (int j = 0; j <= r; ++j) {
            const KClass term = coeffs[static_cast<std::size_t>(j)].twist(rest + hyperplane(k) * j) * m;
            out = out + term;
        }
    }
    return out;
}

}  // namespace

KClass KClass::normal_form() const {
    KClass out = *this;
    for (std::size_t k = tower_->level_count(); k-- > 0;) out = reduce_level(out, k, false);
    return out;
}

bool KClass::equivalent(const KClass& o) const {
    check_same(o);
    return (*this - o).normal_form().is_zero();
}

GradedPolynomial KClass::as_polynomial() const {
    std::vector<Variable> vars;
    for (std::size_t k = 0; k < tower_->level_count(); ++k)
        vars.push_back({"l_" + tower_->name_of(k), 1, VariableRole::symbol});
    GradedPolynomial out(make_alphabet(std::move(vars)));
    const KClass reduced = normal_form();
    for (const auto& [d, m] : reduced.terms()) {
        Exponents e(tower_->level_count());
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = static_cast<int>(d[k]);
        out.add_term(e, Rational(m));
    }
    return out;
}

std::string KClass::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [d, m] : terms_) {
        Integer a = m;
        if (out.empty()) {
            if (a < 0) out += "-";
        } else {
            out += a < 0 ? " - " : " + ";
        }
        if (a < 0) a = -a;
        if (a != 1) out += a.get_str();
        std::string div;
        for (std::size_t k = 0; k < tower_->level_count(); ++k) {
            const long c = d[k];
            if (c == 0) continue;
            if (!div.empty()) div += c < 0 ? "-" : "+";
            else if (c < 0) div += "-";
            const long abs = c < 0 ? -c : c;
            if (abs != 1) div += std::to_string(abs);
            div += tower_->name_of(k);
        }
        out += div.empty() ? "[O]" : "[O(" + div + ")]";
    }
    return out;
}

bool operator==(const KClass& a, const KClass& b) {
    if (a.tower_ != b.tower_ && !(*a.tower_ == *b.tower_)) return false;
    return a.terms_ == b.terms_;
}

ChowClass total_chern_class(const KClass& f) {
    const auto& tower = *f.tower();
    GradedPolynomial total = tower.one();
    for (const auto& [d, m] : f.terms()) {
        const GradedPolynomial D = tower.divisor(d);
        GradedPolynomial factor = tower.one() + D;
        if (m < 0) {
            // (1 + D)^(-1) = sum (-D)^j
            GradedPolynomial inverse = tower.one();
            GradedPolynomial p = tower.one();
            for (int j = 1; j <= tower.dimension(); ++j) {
                p = tower.multiply(p, -D);
                inverse += p;
            }
            factor = inverse;
        }
        const Integer count = m < 0 ? Integer(-m) : m;
        if (!count.fits_ulong_p()) throw std::overflow_error("multiplicity too large");
        total = tower.multiply(total, tower.power(factor, static_cast<unsigned>(count.get_ui())));
    }
    return ChowClass(f.tower(), total);
}

ChowClass chern_class(const KClass& f, int i) { return total_chern_class(f).homogeneous_part(i); }

std::vector<GradedPolynomial> chern_classes(const KClass& f) {
    const ChowClass total = total_chern_class(f);
    std::vector<GradedPolynomial> out;
    for (int i = 0; i <= f.tower()->dimension(); ++i) out.push_back(total.polynomial().homogeneous_part(i));
    return out;
}

KClass tangent_class(const TowerPtr& tower, std::size_t from_level) {
    KClass t(tower);
    for (std::size_t k = from_level; k < tower->level_count(); ++k) {
        for (const auto& s : tower->level(k).summands) t.add(hyperplane(k) - s, 1);
        t.add(DivisorClass{}, -1);
    }
    return t;
}

KClass pushforward_k(std::size_t levels, const KClass& f) {
    const TowerPtr& tower = f.tower();
    if (levels > tower->level_count()) throw std::invalid_argument("cannot collapse more levels than the tower has");
    KClass current = f;
    for (std::size_t step = 0; step < levels; ++step) {
        const std::size_t k = current.tower()->level_count() - 1;
        const TowerPtr here = current.tower();
        const TowerPtr below = here->base(k);
        const KClass reduced = reduce_level(current, k, true);
        // E_k as a class on the base
        KClass bundle(below);
        for (const auto& s : here->level(k).summands) bundle.add(s, 1);
        std::map<long, KClass> sym_cache;
        KClass out(below);
        for (const auto& [d, m] : reduced.terms()) {
            const long a = d[k];
            auto it = sym_cache.find(a);
            if (it == sym_cache.end()) it = sym_cache.emplace(a, bundle.sym(static_cast<int>(a))).first;
            out = out + it->second.twist(truncate_levels(d, k)) * m;
        }
        current = out;
    }
    return current;
}

KClass pullback_k(const TowerPtr& target, const KClass& f) {
    const auto& base = *f.tower();
    if (base.level_count() > target->level_count())
        throw std::invalid_argument("pullback target is smaller than the base");
    for (std::size_t k = 0; k < base.level_count(); ++k)
        if (!(base.level(k).summands == target->level(k).summands))
            throw std::invalid_argument("pullback target does not sit over the given base");
    KClass out(target);
    for (const auto& [d, m] : f.terms()) out.add(d, m);
    return out;
}

Integer euler_characteristic(const KClass& f) { return pushforward_k(f.tower()->level_count(), f).rank(); }

VirtualCompleteIntersection::VirtualCompleteIntersection(TowerPtr ambient_, std::vector<DivisorClass> cuts_)
    : ambient(std::move(ambient_)), cuts(std::move(cuts_)) {
    if (static_cast<int>(cuts.size()) > ambient->dimension())
        throw std::invalid_argument("more cuts than the ambient dimension");
    for (auto& c : cuts) c = c.resized(ambient->level_count());
}

ChowClass VirtualCompleteIntersection::fundamental_class() const {
    GradedPolynomial p = ambient->one();
    for (const auto& c : cuts) p = ambient->multiply(p, ambient->divisor(c));
    return ChowClass(ambient, p);
}

ChowClass VirtualCompleteIntersection::pushforward(const ChowClass& alpha) const {
    return alpha * fundamental_class();
}

GradedPolynomial VirtualCompleteIntersection::pushforward(const GradedPolynomial& alpha) const {
    return ambient->multiply(alpha, fundamental_class().polynomial());
}

KClass VirtualCompleteIntersection::structure_sheaf() const {
    KClass out = KClass::trivial(ambient, 1);
    for (const auto& c : cuts) out = out * (KClass::trivial(ambient, 1) - KClass::line(ambient, -c));
    return out;
}

KClass VirtualCompleteIntersection::pushforward_k(const KClass& f) const { return f * structure_sheaf(); }

KClass VirtualCompleteIntersection::normal_bundle() const {
    KClass out(ambient);
    for (const auto& c : cuts) out.add(c, 1);
    return out;
}

std::vector<GradedPolynomial> VirtualCompleteIntersection::tangent_chern_classes(std::size_t from_level) const {
    return chern_classes(tangent_class(ambient, from_level) - normal_bundle());
}

std::string VirtualCompleteIntersection::describe() const {
    std::string out = "cut(" + ambient->describe() + "; ";
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        if (i) out += ", ";
        std::string div;
        for (std::size_t k = 0; k < ambient->level_count(); ++k) {
            const long c = cuts[i][k];
            if (c == 0) continue;
            if (!div.empty()) div += c < 0 ? " - " : " + ";
            else if (c < 0) div += "-";
            const long abs = c < 0 ? -c : c;
            if (abs != 1) div += std::to_string(abs) + "*";
            div += ambient->name_of(k);
        }
        out += div.empty() ? "0" : div;
    }
    return out + ")";
}

}  // namespace igrr
