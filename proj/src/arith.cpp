#include "igrr/arith.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace igrr {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(long n, long k) {
    if (k < 0) return 0;
    Integer r;
    Integer nn(n);
    mpz_bin_ui(r.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

std::vector<unsigned> primes_up_to(unsigned bound) {
    std::vector<unsigned> primes;
    if (bound < 2) return primes;
    std::vector<bool> composite(bound + 1, false);
    for (unsigned p = 2; p <= bound; ++p) {
        if (composite[p]) continue;
        primes.push_back(p);
        for (std::uint64_t q = std::uint64_t{p} * p; q <= bound; q += p) composite[q] = true;
    }
    return primes;
}

namespace {

bool is_small_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------

FactoredInteger::FactoredInteger(Factorization factors) {
    for (auto& [p, e] : factors) {
        if (e == 0) continue;
        if (!is_small_prime(p))
            throw std::invalid_argument("factorization key " + std::to_string(p) + " is not prime");
        factors_[p] = e;
        Integer pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), p, e);
        value_ *= pe;
    }
}

FactoredInteger FactoredInteger::from_small(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("FactoredInteger requires a positive value");
    Factorization f;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            ++f[static_cast<unsigned>(p)];
            n /= p;
        }
    }
    if (n > 1) ++f[static_cast<unsigned>(n)];
    return FactoredInteger(std::move(f));
}

FactoredInteger FactoredInteger::factorial(unsigned n) {
    // Legendre: ord_p(n!) = sum_k [n/p^k].
    Factorization f;
    for (unsigned p : primes_up_to(n)) {
        unsigned e = 0;
        for (std::uint64_t pk = p; pk <= n; pk *= p) e += static_cast<unsigned>(n / pk);
        f[p] = e;
    }
    return FactoredInteger(std::move(f));
}

unsigned FactoredInteger::exponent(unsigned p) const {
    auto it = factors_.find(p);
    return it == factors_.end() ? 0 : it->second;
}

FactoredInteger FactoredInteger::operator*(const FactoredInteger& other) const {
    Factorization f = factors_;
    for (auto [p, e] : other.factors_) f[p] += e;
    FactoredInteger r;
    r.factors_ = std::move(f);
    r.value_ = value_ * other.value_;
    return r;
}

bool FactoredInteger::divides(const FactoredInteger& other) const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [&](const auto& pe) { return other.exponent(pe.first) >= pe.second; });
}

FactoredInteger FactoredInteger::radical() const {
    Factorization f;
    for (auto [p, e] : factors_) f[p] = 1;
    return FactoredInteger(std::move(f));
}

std::string FactoredInteger::pretty() const {
    std::ostringstream os;
    os << value_.get_str();
    if (factors_.empty()) return os.str();
    os << " = ";
    bool first = true;
    for (auto [p, e] : factors_) {
        if (!first) os << "·";
        first = false;
        os << p;
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

std::string DivisionCheck::describe() const {
    if (exact) return "exact, quotient " + quotient.value().get_str();
    std::ostringstream os;
    os << "not exact at prime " << offending_prime << ": dividend exponent " << dividend_exponent
       << " < divisor exponent " << divisor_exponent;
    return os.str();
}

DivisionCheck exact_divide(const FactoredInteger& dividend, const FactoredInteger& divisor) {
    DivisionCheck out;
    FactoredInteger::Factorization q = dividend.factorization();
    for (auto [p, e] : divisor.factorization()) {
        unsigned have = dividend.exponent(p);
        if (have < e) {
            out.exact = false;
            out.offending_prime = p;
            out.dividend_exponent = have;
            out.divisor_exponent = e;
            return out;
        }
        q[p] = have - e;
    }
    out.exact = true;
    out.quotient = FactoredInteger(std::move(q));
    return out;
}

// ---------------------------------------------------------------------------

FactoredInteger todd_denominator(unsigned m) {
    FactoredInteger::Factorization f;
    for (unsigned p : primes_up_to(m + 1)) {
        unsigned e = m / (p - 1);
        if (e > 0) f[p] = e;
    }
    return FactoredInteger(std::move(f));
}

DivisionCheck check_divisibility_lemma(const std::vector<unsigned>& parts_factorial,
                                       const std::vector<unsigned>& parts_todd, unsigned m) {
    unsigned long total = 0;
    for (unsigned part : parts_factorial) {
        if (part == 0) throw std::invalid_argument("divisibility lemma parts must be positive");
        total += part;
    }
    for (unsigned part : parts_todd) {
        if (part == 0) throw std::invalid_argument("divisibility lemma parts must be positive");
        total += part;
    }
    if (total > m)
        throw std::invalid_argument("divisibility lemma parts sum to " + std::to_string(total) +
                                    " > m = " + std::to_string(m));
    FactoredInteger divisor;
    for (unsigned part : parts_factorial) divisor = divisor * FactoredInteger::factorial(part + 1);
    for (unsigned part : parts_todd) divisor = divisor * todd_denominator(part);
    return exact_divide(todd_denominator(m), divisor);
}

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_memo{Rational(1)};

}  // namespace

Rational bernoulli(unsigned n) {
    std::lock_guard lock(bernoulli_mutex);
    // sum_{k=0}^{j} C(j+1, k) B_k = 0 for j >= 1
    while (bernoulli_memo.size() <= n) {
        const unsigned j = static_cast<unsigned>(bernoulli_memo.size());
        Rational acc = 0;
        for (unsigned k = 0; k < j; ++k) acc += Rational(binomial(j + 1, k)) * bernoulli_memo[k];
        Rational bj = -acc / Rational(j + 1);
        bj.canonicalize();
        bernoulli_memo.push_back(bj);
    }
    return bernoulli_memo[n];
}

FactoredInteger von_staudt_D(unsigned g) {
    if (g == 0) throw std::invalid_argument("von_staudt_D requires g >= 1");
    const unsigned two_g = 2 * g;
    FactoredInteger::Factorization f;
    for (unsigned l : primes_up_to(two_g + 1)) {
        if (two_g % (l - 1) != 0) continue;
        unsigned ord = 0;
        for (unsigned v = two_g; v % l == 0; v /= l) ++ord;
        f[l] = 1 + ord;
    }
    return FactoredInteger(std::move(f));
}

FactoredInteger fulton_macpherson_L(unsigned n) {
    if (n == 0) throw std::invalid_argument("fulton_macpherson_L requires n >= 1");
    auto q = exact_divide(todd_denominator(n), FactoredInteger::factorial(n));
    if (!q.exact) throw std::logic_error("T_n/n! is not an integer: " + q.describe());
    return q.quotient.radical();
}

DivisionCheck check_ekedahl_divisibility(unsigned g) {
    if (g < 2) throw std::invalid_argument("Ekedahl divisibility requires g >= 2");
    FactoredInteger divisor =
        FactoredInteger::from_small(2) * FactoredInteger::factorial(g - 1) * von_staudt_D(g);
    return exact_divide(todd_denominator(2 * g), divisor);
}

Integer checked_quotient(const Integer& a, const Integer& b, const std::string& what) {
    if (b == 0 || a % b != 0)
        throw std::domain_error("non-integral scalar " + what + ": " + a.get_str() + "/" + b.get_str());
    return a / b;
}

Integer todd_ratio(unsigned a, unsigned b) {
    if (a < b) throw std::invalid_argument("todd_ratio requires a >= b");
    return checked_quotient(todd_denominator(a).value(), todd_denominator(b).value(),
                            "T_" + std::to_string(a) + "/T_" + std::to_string(b));
}

}  // namespace igrr
