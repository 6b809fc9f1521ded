#pragma once

// Exact integer/rational arithmetic and the number-theoretic constants used
// throughout: the Todd denominators T_m, Bernoulli numbers, the von Staudt
// product D_2g and the Fulton-MacPherson radicals L_n.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace igrr {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds a canonical rational num/den (den != 0).
Rational make_rational(const Integer& num, const Integer& den = 1);
bool is_integer(const Rational& q);
std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

Integer factorial(unsigned n);
Integer binomial(long n, long k);

/// Primes up to `bound` (inclusive) by the sieve of Eratosthenes.
std::vector<unsigned> primes_up_to(unsigned bound);

/// A positive integer together with its prime factorization.
///
/// Invariants: value == prod p^e over the factorization; every key is prime
/// and every stored exponent is >= 1.
class FactoredInteger {
public:
    using Factorization = std::map<unsigned, unsigned>;

    FactoredInteger() = default;  // the integer 1
    explicit FactoredInteger(Factorization factors);

    /// Factors a positive machine integer by trial division.
    static FactoredInteger from_small(std::uint64_t n);
    static FactoredInteger factorial(unsigned n);

    const Integer& value() const { return value_; }
    const Factorization& factorization() const { return factors_; }
    unsigned exponent(unsigned p) const;

    FactoredInteger operator*(const FactoredInteger& other) const;
    bool divides(const FactoredInteger& other) const;
    /// Product of the distinct primes.
    FactoredInteger radical() const;

    /// "720 = 2^4·3^2·5"
    std::string pretty() const;

    friend bool operator==(const FactoredInteger& a, const FactoredInteger& b) {
        return a.factors_ == b.factors_;
    }

private:
    Factorization factors_;
    Integer value_ = 1;
};

/// Outcome of an exact division of factored integers. When the division is
/// not exact, the first prime whose exponent in the divisor exceeds the one
/// in the dividend is recorded.
struct DivisionCheck {
    bool exact = false;
    FactoredInteger quotient;
    unsigned offending_prime = 0;
    unsigned dividend_exponent = 0;
    unsigned divisor_exponent = 0;

    std::string describe() const;
};

DivisionCheck exact_divide(const FactoredInteger& dividend, const FactoredInteger& divisor);

/// T_m = prod_p p^[m/(p-1)].
FactoredInteger todd_denominator(unsigned m);

/// Divides T_m by prod (m_i+1)! * prod T_{m_j}. Throws std::invalid_argument
/// when a part is non-positive or the parts sum past m; a non-exact division
/// is reported through the result, never thrown.
DivisionCheck check_divisibility_lemma(const std::vector<unsigned>& parts_factorial,
                                       const std::vector<unsigned>& parts_todd, unsigned m);

/// B_n with the convention t/(e^t - 1) = sum B_n t^n/n!, so B_1 = -1/2.
Rational bernoulli(unsigned n);

/// D_2g = prod over primes l with (l-1) | 2g of l^(1 + ord_l(2g)).
FactoredInteger von_staudt_D(unsigned g);

/// Radical of T_n / n!.
FactoredInteger fulton_macpherson_L(unsigned n);

/// Checks 2 (g-1)! D_2g | T_2g (g >= 2).
DivisionCheck check_ekedahl_divisibility(unsigned g);

/// Exact integer quotient a/b, throwing std::domain_error carrying `what`
/// when b does not divide a.
Integer checked_quotient(const Integer& a, const Integer& b, const std::string& what);

/// T_a / T_b (a >= b) as an integer, throwing when not exact.
Integer todd_ratio(unsigned a, unsigned b);

}  // namespace igrr
