#pragma once

// Formal power-series identities among the universal classes, checked
// coefficient by coefficient.

#include "igrr/report.hpp"
#include "igrr/universal.hpp"

#include <string>
#include <vector>

namespace igrr {

/// Registered identity names:
///   chern-multiplicativity   s_m(a.b) = sum C(m,i) s_i(a) s_(m-i)(b), split a, b of rank 3
///   todd-multiplicativity    TdNum_m(a+b) = sum T_m/(T_i T_(m-i)) TdNum_i(a) TdNum_(m-i)(b)
///   hodge-wedge              s_g(sum (-1)^i [wedge^i E^dual]) = g! c_g(E), g <= 6
///   divisor-todd             (T_m/T_(m-1)) Q_m = CT_m([O] - [O(-x)])
///   exp-sum                  1-e^(-a-b) = (1-e^-a) + (1-e^-b) - (1-e^-a)(1-e^-b)
///   exp-geometric            1-e^b = -sum_j (1-e^-b)^j
///   exp-difference           the combination of the two above for 1-e^(-a+b)
///   whitney-substitution     {(1-e^-x)/x Td}_k under c_i -> c_i + x c_(i-1) is Td_k
///   immersion-todd           T_m/T_(m-r) TdNum_(m-r)(a) through TdInv(N) and TdNum(a+N), r <= 3
const std::vector<std::string>& series_identity_names();

/// Throws std::invalid_argument for an unknown name.
VerificationReport verify_series_identity(const std::string& name, int max_degree,
                                          const ClassTable& table = ClassTable::shared());

/// Chern classes c_0..c_degree of a sum of two classes with Chern variables
/// a_prefix1.. and b_prefix1.. (Whitney product), over `target`.
std::vector<GradedPolynomial> whitney_sum(const AlphabetPtr& target, const std::string& a_prefix, int a_count,
                                          const std::string& b_prefix, int b_count, int degree);

/// Total Chern class c_0..c_degree of sum_k mult_k [O(D_k)] for divisors D_k
/// given as degree-1 polynomials over a common alphabet.
std::vector<GradedPolynomial> chern_of_lines(const std::vector<std::pair<GradedPolynomial, long>>& lines,
                                             const AlphabetPtr& alphabet, int degree);

struct HoweReduction {
    int rank = 0;        // r (the bundle has r+1 roots)
    int twist = 0;       // a
    int degree_bound = 0;
    std::vector<GradedPolynomial> coefficients;  // f_0 .. f_r over c1..c(r+1)
};

/// Reduces e^(aT) prod_{i<=r+1} (T-x_i)/(1-e^-(T-x_i)) modulo prod (T-x_i) = 0.
HoweReduction howe_reduce(int r, int a, int degree_bound);

/// Checks f_r = 1 (a = 0) or f_r = 0 (-r <= a < 0).
VerificationReport check_howe(int r, int a, int degree_bound);

}  // namespace igrr
