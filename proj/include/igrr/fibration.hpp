#pragma once

// Formal families of curves (d = 1) and surfaces (d = 2): the relative tangent
// class has symbolic Chern classes and pushforward sends each fibre monomial of
// relative degree >= d to a free generator of the base ring.

#include "igrr/report.hpp"
#include "igrr/tower.hpp"
#include "igrr/universal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace igrr {

class FormalFibration {
public:
    /// Symbols are created for base degrees 0..max_base_degree.
    FormalFibration(int relative_dimension, int max_base_degree);

    int relative_dimension() const { return d_; }
    int max_base_degree() const { return max_base_; }
    /// d = 1: {K}; d = 2: {w, c2} with weights 1, 2.
    const AlphabetPtr& fibre_alphabet() const { return fibre_; }
    /// d = 1: kappa_0..; d = 2: s_w2, s_w3, s_wc2, ...
    const AlphabetPtr& base_alphabet() const { return base_; }

    /// c_0, c_1, ... of the relative tangent class (c_1 = -K or -w, c_2 = c2).
    std::vector<GradedPolynomial> tangent_chern() const;
    /// First Chern class of the relative dualizing sheaf (K or w).
    GradedPolynomial dualizing() const;

    /// Kills relative degrees below d; monomials of degree d + j go to their symbol.
    GradedPolynomial pushforward(const GradedPolynomial& fibre_class) const;
    /// Base symbol of a fibre monomial.
    std::string symbol_for(const Exponents& e) const;

    /// f_* CT_(d+n)(L, X/S) for a line bundle L with c_1 = first_chern.
    GradedPolynomial pushed_ct(const GradedPolynomial& first_chern, int n,
                               const ClassTable& table = ClassTable::shared()) const;

private:
    int d_;
    int max_base_;
    AlphabetPtr fibre_;
    AlphabetPtr base_;
};

/// f_* CT_(1+n)(O, X/S) against T_(n+1) B_(n+1)/(n+1)! kappa_n (zero for even n >= 2).
VerificationReport check_kappa_identity(int n, const ClassTable& table = ClassTable::shared());

/// The combination RHS_1(omega^m) + (2m-1) RHS_1(O), with RHS_1(F) = f_* CT_3(F, X/S),
/// against m(6m - 4m^2 - 2) s_w3 (s_wc2 must cancel).
VerificationReport check_surface_det_identity(int m, const ClassTable& table = ClassTable::shared());

/// Exponent e with 24 [c_1 det Rf_* omega^m + (2m-1) c_1 det Rf_* O] = e f_*(c_1(omega)^3),
/// computed by K-theoretic pushforward on the family of surfaces cut out by
/// degree * t + twist * h in P(O(twists...)) over P^1.
struct TowerSurfaceExponent {
    Integer determinant_side;  // 24 [...] as a multiple of the point class
    Integer cube;              // f_*(c_1(omega)^3) as a multiple of the point class
    std::optional<Rational> exponent;
};
TowerSurfaceExponent tower_surface_exponent(int m, const std::vector<long>& twists = {0, 0, 0, 1}, long degree = 3,
                                            long twist = 0);

}  // namespace igrr
