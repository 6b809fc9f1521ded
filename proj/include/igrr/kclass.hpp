#pragma once

// Grothendieck groups of towers in split form: virtual integer combinations of
// line symbols [O(D)], with Chern classes, lambda operations and pushforward.

#include "igrr/tower.hpp"

#include <map>
#include <string>
#include <vector>

namespace igrr {

class KClass {
public:
    using Terms = std::map<DivisorClass, Integer>;

    explicit KClass(TowerPtr tower);
    static KClass line(TowerPtr tower, const DivisorClass& d, const Integer& multiplicity = 1);
    static KClass trivial(TowerPtr tower, const Integer& rank);

    const TowerPtr& tower() const { return tower_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Integer rank() const;
    bool is_effective() const;

    void add(const DivisorClass& d, const Integer& multiplicity);

    KClass operator+(const KClass& o) const;
    KClass operator-(const KClass& o) const;
    KClass operator-() const;
    KClass operator*(const KClass& o) const;  // tensor product
    KClass operator*(const Integer& s) const;

    KClass dual() const;
    KClass twist(const DivisorClass& d) const;
    /// Throw std::domain_error on a virtual (non-effective) class.
    KClass wedge(int i) const;
    KClass sym(int a) const;
    KClass determinant() const;  // top wedge for effective classes, product of line powers in general

    /// Unique representative in the basis prod l_k^(a_k), 0 <= a_k <= r_k.
    KClass normal_form() const;
    /// Equality in K(tower), through normal forms.
    bool equivalent(const KClass& o) const;
    /// The normal form as a polynomial in l_<hyperplane> = [O(xi_k)].
    GradedPolynomial as_polynomial() const;

    /// "[O] + 2[O(h)] - [O(-ξ2)]"; "0" for the zero class.
    std::string to_string() const;

    friend bool operator==(const KClass& a, const KClass& b);

private:
    void check_same(const KClass& o) const;
    TowerPtr tower_;
    Terms terms_;
};

/// Total Chern class prod (1 + D)^m, truncated at the tower dimension.
ChowClass total_chern_class(const KClass& f);
/// Degree-i Chern class.
ChowClass chern_class(const KClass& f, int i);
/// c_0 .. c_(dimension) as polynomials (normal form).
std::vector<GradedPolynomial> chern_classes(const KClass& f);

/// Split tangent class of the levels from `from_level` upward (relative tangent
/// over the first `from_level` levels); from_level = 0 gives T of the tower.
KClass tangent_class(const TowerPtr& tower, std::size_t from_level = 0);

/// Collapses the top `levels` levels. The result lives on tower->base(K - levels).
KClass pushforward_k(std::size_t levels, const KClass& f);
/// Pulls back along the projection onto the first levels.
KClass pullback_k(const TowerPtr& target, const KClass& f);

/// Rank of the full pushforward to the point.
Integer euler_characteristic(const KClass& f);

/// Z in W cut out by divisor classes delta_1..delta_r. Classes on Z are
/// represented by classes on W and only ever used through i_* of restrictions.
struct VirtualCompleteIntersection {
    TowerPtr ambient;
    std::vector<DivisorClass> cuts;

    VirtualCompleteIntersection(TowerPtr ambient, std::vector<DivisorClass> cuts);

    int codimension() const { return static_cast<int>(cuts.size()); }
    int dimension() const { return ambient->dimension() - codimension(); }

    /// prod delta_i, the class of Z in CH(W).
    ChowClass fundamental_class() const;
    /// i_*(i^* alpha) = alpha . prod delta_i
    ChowClass pushforward(const ChowClass& alpha) const;
    GradedPolynomial pushforward(const GradedPolynomial& alpha) const;
    /// Koszul class prod (1 - [O(-delta_i)]).
    KClass structure_sheaf() const;
    /// i_*[i^* F] = F . [O_Z]
    KClass pushforward_k(const KClass& f) const;
    /// Sum of [O(delta_i)].
    KClass normal_bundle() const;
    /// Chern classes c_0..c_dim(W) of T_W - N restricted, as classes on W.
    std::vector<GradedPolynomial> tangent_chern_classes(std::size_t from_level = 0) const;

    std::string describe() const;
};

}  // namespace igrr
