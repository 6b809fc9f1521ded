#pragma once

// Both sides of the integral Riemann-Roch identities on model geometries:
// towers of split projective bundles, complete intersections in them, and
// immersions of such intersections.

#include "igrr/kclass.hpp"
#include "igrr/report.hpp"
#include "igrr/universal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace igrr {

/// f: X -> S where X is a tower W or a complete intersection Z in W, and S is
/// the base of W given by its first `target_levels` levels (S = W for an
/// immersion of Z).
struct MorphismDatum {
    TowerPtr ambient;
    std::optional<VirtualCompleteIntersection> cut;
    std::size_t target_levels = 0;

    static MorphismDatum projection(TowerPtr tower, std::size_t target_levels);
    static MorphismDatum restricted(VirtualCompleteIntersection z, std::size_t target_levels);
    static MorphismDatum immersion(VirtualCompleteIntersection z);

    TowerPtr target() const;
    std::size_t collapsed_levels() const { return ambient->level_count() - target_levels; }
    int source_dimension() const;
    int relative_dimension() const;
    std::string describe() const;

    /// f_* of a class given on the ambient tower (restricted to Z first if cut).
    KClass pushforward(const KClass& f) const;
    GradedPolynomial pushforward(const GradedPolynomial& alpha) const;
};

/// Rank and Chern classes c_0..c_dim of a K class.
struct ChernData {
    Integer rank;
    std::vector<GradedPolynomial> classes;
};
ChernData chern_data(const KClass& f);

/// Substitutes c_i -> tangent[i], r -> sheaf.rank, cp_i -> sheaf.classes[i]
/// (each optional) into a universal polynomial and reduces on the tower.
GradedPolynomial evaluate_on_tower(const GradedPolynomial& universal, const Tower& tower,
                                   const std::vector<GradedPolynomial>* tangent, const ChernData* sheaf,
                                   const GradedPolynomial* divisor = nullptr);

/// CT_m(F, X) on a tower; relative to the first `relative_over` levels when nonzero.
ChowClass ct_class(const KClass& f, int m, std::size_t relative_over = 0,
                   const ClassTable& table = ClassTable::shared());
/// i_* CT_m(F|Z, Z) (or relative to the first `relative_over` levels), as a class on W.
ChowClass ct_class(const KClass& f, const VirtualCompleteIntersection& z, int m, std::size_t relative_over = 0,
                   const ClassTable& table = ClassTable::shared());

/// CT_m of the source as a class on the ambient tower; for a cut this is a
/// representative of the restriction, and MorphismDatum::pushforward applies i_*.
GradedPolynomial source_ct(const MorphismDatum& f, const KClass& sheaf, int m, bool relative,
                           const ClassTable& table = ClassTable::shared());

/// LHS - RHS of the theorem in CH^n(S):
///   d >= 0:  T_(d+n)/T_n CT_n(f_*F, S) - f_* CT_(d+n)(F, X)
///   d <  0:  CT_n(f_*F, S) - T_n/T_(n+d) f_* CT_(n+d)(F, X)
/// A non-integral scalar raises FalsificationError.
ChowClass grr_error(const MorphismDatum& f, const KClass& sheaf, int n,
                    const ClassTable& table = ClassTable::shared());

/// Theorem instance plus the fibrewise form T_(d+n)/n! s_n(f_*F) = f_* CT_(d+n)(F, X/S)
/// and the splitting of f_* CT_(d+n)(F, X) along T_X = T_(X/S) + f^*T_S.
VerificationReport check_main_theorem(const MorphismDatum& f, const KClass& sheaf, int n,
                                      const ClassTable& table = ClassTable::shared());

/// T_n/T_(n-r) i_* CT_(n-r)(F, Z) = CT_n(i_*F, W), and s_m(i_*F) for m = 0..dim W
/// through the inverse Todd classes of the normal bundle.
VerificationReport check_immersion(const VirtualCompleteIntersection& z, const KClass& sheaf, int n,
                                   const ClassTable& table = ClassTable::shared());

/// Classical Riemann-Roch with rational coefficients, computed from the
/// Chern roots: ch_n(f_*F) and f_*((ch F . Td T_f)_(d+n)).
struct RationalRiemannRoch {
    GradedPolynomial lhs;  // ch_n(f_*F)
    GradedPolynomial rhs;  // f_* (ch(F) Td(T_f))_(d+n)
};
RationalRiemannRoch rational_riemann_roch(const MorphismDatum& f, const KClass& sheaf, int n);

/// The classical identity, and for d >= 0 its agreement with both integral
/// sides after clearing T_(d+n).
VerificationReport check_rational_image(const MorphismDatum& f, const KClass& sheaf, int n,
                                        const ClassTable& table = ClassTable::shared());

/// T_(d+1) c_1(f_*F) = -rk(f_*F) T_(d+1)/2 c_1(T_S)
///                     + sum_m T_(d+1)/(m! T_(d+1-m)) f_*(s_m(F) Td_(d+1-m)(T_X)), for d >= 0.
VerificationReport check_determinant_formula(const MorphismDatum& f, const KClass& sheaf,
                                             const ClassTable& table = ClassTable::shared());

/// For X -> Y -> S collapsing `upper` then `lower` levels of a tower:
///   E_(gf)(F, n) = T_(d+n)/T_(dg+n) E_g(f_*F, n) + g_* E_f(F, dg+n)
/// together with the vanishing of each error.
VerificationReport check_composition(const TowerPtr& tower, std::size_t upper, std::size_t lower,
                                     const KClass& sheaf, int n,
                                     const ClassTable& table = ClassTable::shared());

/// Td_m(D; W) = Q_m(c(T_W), [D]).
GradedPolynomial divisor_todd(const TowerPtr& w, const DivisorClass& d, int m,
                              const ClassTable& table = ClassTable::shared());
/// i_* TdNum_k(Z) for a complete intersection, as a class on W (0 for k < 0).
GradedPolynomial pushed_todd(const VirtualCompleteIntersection& z, int k,
                             const ClassTable& table = ClassTable::shared());

/// Divisor calculus in degree m on W. For every divisor D: the pushforward
/// form of Td_m(D; W), its link with CT_m([O] - [O(-D)]), and the difference
/// expansion D = X - Y with Y ample (Chow and K sides). For every pair: the
/// sum formula on both sides and the additivity defect, whose coefficients
/// a_Z (Chow) and b_Z (K) must agree for 2 <= codim Z <= m.
VerificationReport check_divisor_calculus(const TowerPtr& w, const std::vector<DivisorClass>& divisors, int m,
                                          const ClassTable& table = ClassTable::shared());

/// Chern character classes s_m = m! ch_m of a K class, evaluated on its tower.
GradedPolynomial s_class(const KClass& f, int m, const ClassTable& table = ClassTable::shared());

}  // namespace igrr
