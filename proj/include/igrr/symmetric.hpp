#pragma once

// Symmetric-function reduction: rewriting polynomials symmetric in a set of
// root variables as polynomials in their elementary symmetric functions.

#include "igrr/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace igrr {

/// Raised when elementary_reduce is handed a polynomial that is not
/// symmetric in the designated roots.
class NonSymmetricError : public std::invalid_argument {
public:
    NonSymmetricError(std::string first, std::string second)
        : std::invalid_argument("polynomial is not symmetric under the transposition (" + first + " " +
                                second + ")"),
          first_root(std::move(first)),
          second_root(std::move(second)) {}

    std::string first_root;
    std::string second_root;
};

/// Rewrites p, symmetric in the variables `roots`, as a polynomial in e_1..e_k
/// (k = roots.size()). The result lives over the alphabet made of the
/// non-root variables of p followed by `elementary_names` (weights 1..k).
/// Classical leading-term elimination in lex order on root exponents.
GradedPolynomial elementary_reduce(const GradedPolynomial& p, const std::vector<std::string>& roots,
                                   const std::vector<std::string>& elementary_names);

/// Convenience overload naming the outputs e1..ek.
GradedPolynomial elementary_reduce(const GradedPolynomial& p, const std::vector<std::string>& roots);

/// e_i(roots) for i = 0..k as polynomials over p's alphabet.
std::vector<GradedPolynomial> elementary_polynomials(const AlphabetPtr& alphabet,
                                                     const std::vector<std::string>& roots,
                                                     int truncation = GradedPolynomial::untruncated);

/// Integer partitions: non-increasing positive parts.
using Partition = std::vector<int>;

/// All partitions of n with at most max_parts parts, in lex-descending order.
std::vector<Partition> partitions(int n, int max_parts);

/// A symmetric polynomial in k roots stored in the monomial symmetric basis:
/// coefficient of m_lambda for every partition lambda with <= k parts.
struct MonomialSymmetric {
    int root_count = 0;
    std::map<Partition, Rational> coefficients;
};

/// The product prod_{j=1..k} f(x_j) restricted to one orbit representative
/// per monomial, for f = sum_i series[i] x^i with series[0] = 1, keeping the
/// homogeneous part of the given degree.
MonomialSymmetric multiplicative_orbit_sum(const std::vector<Rational>& series, int root_count, int degree);

/// sum_j g(x_j) for g = sum_i series[i] x^i (i >= 1), degree part only.
MonomialSymmetric additive_orbit_sum(const std::vector<Rational>& series, int root_count, int degree);

/// Leading-term elimination on the monomial symmetric basis; output over
/// `target`, whose variables elementary_names[i-1] stand for e_i.
GradedPolynomial monomial_to_elementary(const MonomialSymmetric& m, const AlphabetPtr& target,
                                        const std::vector<std::string>& elementary_names);

/// Number of ways the product e_{mu_1}...e_{mu_s} in k variables produces
/// the monomial x^nu (0-1 matrices with row sums mu, column sums nu).
Integer elementary_product_coefficient(const Partition& mu, const Partition& nu, int root_count);

/// p_m written in e_1..e_k via Newton's identities, over `target`.
GradedPolynomial newton_power_sum(int m, const AlphabetPtr& target,
                                  const std::vector<std::string>& elementary_names);

}  // namespace igrr
