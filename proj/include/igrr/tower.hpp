#pragma once

// Iterated split projective bundles over a point and their Chow rings.
//
// Level k is P(E_k) = Proj Sym(E_k) over the levels below, with E_k a sum of
// line bundles O(L_k0) + ... + O(L_kr). The hyperplane class xi_k = c_1(O(1))
// satisfies prod_i (xi_k - L_ki) = 0, and every class has a unique normal form
// with exponent of xi_k at most r_k.

#include "igrr/polynomial.hpp"

#include <memory>
#include <string>
#include <vector>

namespace igrr {

/// Integer combination of hyperplane classes; entry k is the coefficient of
/// xi_(k+1). Shorter vectors are implicitly zero-padded.
struct DivisorClass {
    std::vector<long> coefficients;

    DivisorClass() = default;
    explicit DivisorClass(std::vector<long> c) : coefficients(std::move(c)) {}

    long operator[](std::size_t k) const { return k < coefficients.size() ? coefficients[k] : 0; }
    std::size_t support() const;  // 1 + index of the last nonzero entry
    bool is_zero() const { return support() == 0; }
    DivisorClass resized(std::size_t levels) const;

    DivisorClass operator+(const DivisorClass& other) const;
    DivisorClass operator-(const DivisorClass& other) const;
    DivisorClass operator-() const;
    DivisorClass operator*(long s) const;

    friend bool operator==(const DivisorClass& a, const DivisorClass& b);
    friend auto operator<=>(const DivisorClass& a, const DivisorClass& b) {
        const std::size_t n = std::max(a.coefficients.size(), b.coefficients.size());
        for (std::size_t i = 0; i < n; ++i)
            if (auto c = a[i] <=> b[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }
};

DivisorClass hyperplane(std::size_t level);  // xi_(level+1)

struct TowerLevel {
    std::vector<DivisorClass> summands;  // r+1 line bundles over the levels below
    std::string name;                    // hyperplane symbol
    int rank() const { return static_cast<int>(summands.size()) - 1; }  // relative dimension r
};

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

class Tower {
public:
    /// The point.
    Tower();
    /// Throws std::invalid_argument when a summand references a level at or
    /// above its own, or a level has no summands.
    explicit Tower(std::vector<TowerLevel> levels);

    static TowerPtr point();
    static TowerPtr build(std::vector<TowerLevel> levels);
    /// P^n as a one-level tower.
    static TowerPtr projective_space(int n, std::string name = "");

    std::size_t level_count() const { return levels_.size(); }
    const TowerLevel& level(std::size_t k) const { return levels_.at(k); }
    const std::vector<TowerLevel>& levels() const { return levels_; }
    int dimension() const { return dimension_; }
    const AlphabetPtr& alphabet() const { return alphabet_; }
    std::string name_of(std::size_t k) const { return levels_.at(k).name; }

    /// The first `keep` levels as a tower of their own.
    TowerPtr base(std::size_t keep) const;

    GradedPolynomial zero() const;
    GradedPolynomial one() const;
    GradedPolynomial divisor(const DivisorClass& d) const;
    GradedPolynomial variable(std::size_t level) const;

    /// Reduces top level first. Coefficients may be rational.
    GradedPolynomial normal_form(const GradedPolynomial& p) const;
    /// Reduces level by level in the given order, repeating until stable.
    GradedPolynomial normal_form_in_order(const GradedPolynomial& p, const std::vector<std::size_t>& order) const;
    bool is_normal(const GradedPolynomial& p) const;

    GradedPolynomial multiply(const GradedPolynomial& a, const GradedPolynomial& b) const;
    GradedPolynomial power(const GradedPolynomial& a, unsigned k) const;

    /// Degree of the top-dimensional part (coefficient of prod xi_k^r_k).
    Rational degree(const GradedPolynomial& p) const;

    /// Sum of all level hyperplanes, a convenient positive class.
    DivisorClass ample_class() const;

    /// Human rendering, e.g. "P([0, h]) as ξ2 over P(trivial 2) as h over point".
    std::string describe() const;

    friend bool operator==(const Tower& a, const Tower& b);

private:
    GradedPolynomial reduce_level(const GradedPolynomial& p, std::size_t k, bool& changed) const;

    std::vector<TowerLevel> levels_;
    int dimension_ = 0;
    AlphabetPtr alphabet_;
    std::vector<GradedPolynomial> relation_tail_;  // xi_k^(r+1) rewritten in lower powers
};

/// A class in CH*(tower), held in normal form.
class ChowClass {
public:
    ChowClass(TowerPtr tower, const GradedPolynomial& p);
    static ChowClass zero(TowerPtr tower);
    static ChowClass one(TowerPtr tower);

    const TowerPtr& tower() const { return tower_; }
    const GradedPolynomial& polynomial() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }
    bool is_integral() const { return poly_.is_integral(); }
    ChowClass homogeneous_part(int degree) const;

    ChowClass operator+(const ChowClass& o) const;
    ChowClass operator-(const ChowClass& o) const;
    ChowClass operator-() const;
    ChowClass operator*(const ChowClass& o) const;
    ChowClass operator*(const Rational& s) const;

    friend bool operator==(const ChowClass& a, const ChowClass& b);

private:
    void check_same(const ChowClass& o) const;
    TowerPtr tower_;
    GradedPolynomial poly_;
};

/// Collapses the top `levels` levels: keeps terms with xi_k^(r_k) exactly and
/// strips that factor. The result lives on tower->base(K - levels).
ChowClass pushforward_chow(std::size_t levels, const ChowClass& alpha);
/// Same rule on a (possibly rational) polynomial over the tower's alphabet.
GradedPolynomial pushforward_polynomial(const Tower& tower, std::size_t levels, const GradedPolynomial& p);
/// Pulls a class on `target`'s base back along the projection (identity on monomials).
ChowClass pullback_chow(const TowerPtr& target, const ChowClass& alpha);

/// Total Chern class of the bundle at one level, as a polynomial in lower hyperplanes.
GradedPolynomial level_chern_class(const Tower& tower, std::size_t k, int i);

}  // namespace igrr
