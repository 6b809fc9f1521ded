#pragma once

// Sparse exact-rational multivariate polynomials over a weighted alphabet,
// carrying a hard truncation bound on weighted degree.

#include "igrr/arith.hpp"

#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace igrr {

enum class VariableRole {
    chern,             // c_i, weight i
    chern_prime,       // c'_i, weight i
    rank,              // r, weight 0
    root,              // x_j, weight 1
    root_prime,        // x'_j, weight 1
    divisor,           // x of Q_m, weight 1
    bundle_generator,  // T, weight 1
    hyperplane,        // xi_k of a tower, weight 1
    symbol,            // free generator with a chosen weight (kappa_i, s_w3, ...)
};

struct Variable {
    std::string name;
    int weight = 1;
    VariableRole role = VariableRole::symbol;

    friend bool operator==(const Variable&, const Variable&) = default;
};

/// Ordered list of uniquely named variables. The order fixes the exponent
/// vector layout and the canonical serialization order.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Variable> variables);

    std::size_t size() const { return variables_.size(); }
    const Variable& operator[](std::size_t i) const { return variables_[i]; }
    const std::vector<Variable>& variables() const { return variables_; }

    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t index_of(std::string_view name) const;  // throws std::out_of_range
    bool contains(std::string_view name) const { return find(name).has_value(); }

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.variables_ == b.variables_; }

private:
    std::vector<Variable> variables_;
    std::unordered_map<std::string, std::size_t> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<Variable> variables);
const AlphabetPtr& empty_alphabet();

/// Chern-class alphabet builders used by the universal classes.
/// chern_alphabet(3) = {c1, c2, c3}; with_rank adds r; primes adds cp1..cpk.
AlphabetPtr chern_alphabet(int chern_count, bool with_rank = false, int prime_count = 0,
                           bool with_divisor = false);
AlphabetPtr root_alphabet(int root_count, std::string_view prefix = "x",
                          VariableRole role = VariableRole::root);

using Exponents = std::vector<int>;

class GradedPolynomial {
public:
    static constexpr int untruncated = std::numeric_limits<int>::max() / 4;
    using TermMap = std::map<Exponents, Rational>;

    GradedPolynomial() = default;
    explicit GradedPolynomial(AlphabetPtr alphabet, int truncation = untruncated);

    static GradedPolynomial constant(AlphabetPtr alphabet, const Rational& value,
                                     int truncation = untruncated);
    static GradedPolynomial variable(AlphabetPtr alphabet, std::string_view name,
                                     int truncation = untruncated);
    static GradedPolynomial monomial(AlphabetPtr alphabet, Exponents exponents, const Rational& coeff,
                                     int truncation = untruncated);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    int truncation() const { return truncation_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    int weighted_degree(const Exponents& e) const;
    Rational coefficient(const Exponents& e) const;
    /// Adds c to the coefficient of e (discarded when beyond truncation).
    void add_term(const Exponents& e, const Rational& c);

    GradedPolynomial homogeneous_part(int degree) const;
    GradedPolynomial truncated(int degree) const;
    bool is_homogeneous(int degree) const;
    bool is_integral() const;
    int max_degree() const;  // -1 for zero
    /// Degree in the single variable at position `var` (max exponent).
    int degree_in(std::size_t var) const;

    GradedPolynomial operator-() const;
    GradedPolynomial& operator+=(const GradedPolynomial& other);
    GradedPolynomial& operator-=(const GradedPolynomial& other);
    GradedPolynomial& operator*=(const Rational& scalar);
    friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) { return a += b; }
    friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) { return a -= b; }
    friend GradedPolynomial operator*(GradedPolynomial a, const Rational& s) { return a *= s; }
    friend GradedPolynomial operator*(const Rational& s, GradedPolynomial a) { return a *= s; }
    friend GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b);
    GradedPolynomial pow(unsigned k) const;

    friend bool operator==(const GradedPolynomial& a, const GradedPolynomial& b);

    /// Same terms, reinterpreted over `target` by variable name. Variables of
    /// this polynomial that occur with nonzero exponent must exist in target.
    GradedPolynomial embed(AlphabetPtr target, int truncation = untruncated) const;

    using Valuation = std::map<std::string, GradedPolynomial, std::less<>>;
    /// Ring homomorphism: each variable named in `values` is replaced by its
    /// image; others are carried over by name into `target`. The result is
    /// computed modulo degree > truncation, then passed through `reduce`
    /// after every multiplication when provided.
    GradedPolynomial substitute(
        const Valuation& values, AlphabetPtr target, int truncation = untruncated,
        const std::function<GradedPolynomial(const GradedPolynomial&)>& reduce = {}) const;

    /// One term per line, "<num>/<den> <var>^<exp> ...", graded-lex order.
    std::string to_canonical() const;
    /// Human form: "c1^2 + c2", "1/2*c1".
    std::string to_string() const;
    /// Parses the canonical serialization.
    static GradedPolynomial from_canonical(AlphabetPtr alphabet, std::string_view text,
                                           int truncation = untruncated);

    /// First monomial (canonical order) where a and b differ, or empty.
    friend std::string first_difference(const GradedPolynomial& a, const GradedPolynomial& b);

    /// Monomial rendering used in reports, e.g. "c1^2 c2".
    std::string monomial_string(const Exponents& e) const;

private:
    void check_compatible(const GradedPolynomial& other) const;

    AlphabetPtr alphabet_ = empty_alphabet();
    TermMap terms_;
    int truncation_ = untruncated;
};

/// Canonical graded-lex comparison: weighted degree ascending, then exponent
/// vectors lexicographically descending.
bool graded_lex_less(const Alphabet& alphabet, const Exponents& a, const Exponents& b);

}  // namespace igrr
