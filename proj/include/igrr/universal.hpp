#pragma once

// Universal characteristic-class polynomials and their integral numerators.

#include "igrr/polynomial.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace igrr {

/// A claimed-exact statement turned out false. `located` pinpoints the first
/// offending monomial or scalar.
class FalsificationError : public std::runtime_error {
public:
    FalsificationError(const std::string& what, std::string where)
        : std::runtime_error(what + (where.empty() ? "" : " (" + where + ")")), located(std::move(where)) {}
    std::string located;
};

/// T_a / (extra * T_b) as an exact integer; FalsificationError otherwise.
Rational todd_quotient(int a, const Integer& extra, int b);
inline Rational todd_quotient(int a, int b) { return todd_quotient(a, 1, b); }

enum class ClassKind { todd, chern_character, ct, q, todd_inverse };

std::string kind_name(ClassKind kind);
ClassKind parse_kind(const std::string& name);  // throws std::invalid_argument

struct UniversalClass {
    std::string name;  // "Td_3", "TdNum_3", "ch_2", "s_2", "CT_1", "Q_2", "TdInv_1(r=2)"
    int degree = 0;
    GradedPolynomial polynomial;
    bool integral = false;
};

// Univariate coefficient sequences, index = power of the variable.
std::vector<Rational> todd_series(int n);            // x/(1-e^{-x})
std::vector<Rational> one_minus_exp_neg_series(int n);  // 1-e^{-x}
std::vector<Rational> todd_inverse_series(int n);    // (1-e^{-x})/x
std::vector<Rational> exp_series(int n);             // e^x
std::vector<Rational> series_log(const std::vector<Rational>& f);  // requires f[0] = 1

/// exp(p) truncated at p's truncation, for p without constant term.
GradedPolynomial polynomial_exp(const GradedPolynomial& p);
/// f(p) = sum_k coeffs[k] p^k, for p without constant term.
GradedPolynomial compose(const std::vector<Rational>& coeffs, const GradedPolynomial& p);

/// Alphabets of the universal classes.
AlphabetPtr todd_alphabet(int m);            // c1..cm
AlphabetPtr chern_character_alphabet(int m); // r, cp1..cpm
AlphabetPtr ct_alphabet(int m);              // c1..cm, r, cp1..cpm
AlphabetPtr q_alphabet(int m);               // c1..c(m-1), x

std::vector<std::string> chern_names(int count, const std::string& prefix = "c");

/// (Td_m, T_m Td_m). The numerator is certified integral or FalsificationError.
std::pair<UniversalClass, UniversalClass> universal_todd(int m);
/// T_m Td_m through the logarithm: log Td = sum b_k p_k, p_k by Newton.
GradedPolynomial todd_numerator_via_power_sums(int m);
/// (ch_m, s_m); s_m is also checked against the Newton power sum.
std::pair<UniversalClass, UniversalClass> universal_chern_character(int m);
UniversalClass universal_ct(int m);
UniversalClass q_poly(int m);
/// m! {prod_{i<=r} (1-e^{-x_i})/x_i}_{m-r} in c1..cr.
UniversalClass todd_inverse_numerator(int m, int r);

/// Thread-safe memo of the integral numerators. CT and Q are assembled from
/// the table's own Todd and Chern-character entries, so a mutation of one
/// Todd coefficient propagates into every class built from it.
class ClassTable {
public:
    ClassTable() = default;
    ClassTable(const ClassTable&) = delete;
    ClassTable& operator=(const ClassTable&) = delete;

    GradedPolynomial todd(int m) const;
    GradedPolynomial chern_character(int m) const;
    GradedPolynomial ct(int m) const;
    GradedPolynomial q(int m) const;
    GradedPolynomial todd_inverse(int m, int r) const;

    /// Adds delta to one coefficient of a stored class (test harness hook).
    /// Only todd and chern_character are primary entries; derived caches are
    /// dropped.
    void mutate(ClassKind kind, int degree, const std::string& monomial, const Rational& delta);
    bool mutated() const;

    static const ClassTable& shared();

private:
    mutable std::mutex mutex_;
    mutable std::map<std::tuple<ClassKind, int, int>, GradedPolynomial> cache_;
    std::vector<std::string> mutations_;
};

/// Parses "c1^2*c2" (or "c1^2 c2") as an exponent vector over alphabet.
Exponents parse_monomial(const Alphabet& alphabet, const std::string& text);

}  // namespace igrr
