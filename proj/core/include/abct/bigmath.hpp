#ifndef ABCT_BIGMATH_HPP
#define ABCT_BIGMATH_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "abct/errors.hpp"

namespace abct {

using Int = mpz_class;

// Exact prime-power decomposition. Primes are strictly increasing and the
// product of prime^exponent reconstructs the factored integer; 1 factors to
// the empty list.
struct Factorization {
  std::vector<std::pair<Int, unsigned>> factors;

  Int value() const;
  Int radical() const;

  bool operator==(const Factorization& o) const { return factors == o.factors; }
};

// (g, u, v) with u*x + v*y = g = gcd(x, y), exactly.
struct ExtGcdResult {
  Int g;
  Int u;
  Int v;
};

// Effort caps that turn pathological factorizations into a typed error
// instead of a hang. trial_bound is clamped to the prime sieve limit (1e6);
// rho_max_iterations is the total Brent iteration budget per factorize call.
struct FactorConfig {
  unsigned long trial_bound = 1'000'000;
  unsigned long rho_max_iterations = 5'000'000;
};

// Raised when the effort cap is reached; carries whatever was completed.
class FactorizationExhausted : public Error {
 public:
  FactorizationExhausted(const std::string& what, Factorization partial_in,
                         Int unfactored_in)
      : Error(what),
        partial(std::move(partial_in)),
        unfactored(std::move(unfactored_in)) {}

  Factorization partial;  // prime powers fully split off
  Int unfactored;         // composite cofactor the cap left behind
};

// Classic iterative extended Euclid; for the paper-scale inputs it lands on
// the same Bezout pair as textbook back-substitution. Requires x, y >= 1.
ExtGcdResult ext_gcd(const Int& x, const Int& y);

// Residue r in [1, m) with x*r = 1 (mod m). Throws NotInvertible when
// gcd(x, m) != 1. Requires m >= 2.
Int inverse_mod(const Int& x, const Int& m);

// Deterministic for n < 3.3e24 (12-prime Miller-Rabin witness set, which
// covers everything below 2^64 and then some); above that, 40 additional
// fixed-seed rounds, error probability < 4^-40.
bool is_prime(const Int& n);

// Trial division by sieved primes, then Brent's rho on what remains.
// Throws FactorizationExhausted when the rho budget runs out.
Factorization factorize(const Int& n, const FactorConfig& cfg = {});

// Product of the distinct primes dividing n; radical(1) = 1. Rejects n < 1.
Int radical(const Int& n, const FactorConfig& cfg = {});

// Product of the union of distinct primes across all values; shared primes
// count once.
Int radical_of_product(const std::vector<Int>& values,
                       const FactorConfig& cfg = {});

// Largest e with q^e | n. q must be prime.
unsigned long valuation(const Int& n, const Int& q);

// True iff every prime factor of n is <= bound. Bounds within the sieve
// limit never need a full factorization, so they cannot exhaust.
bool is_smooth(const Int& n, const Int& bound, const FactorConfig& cfg = {});

// ln(n) for arbitrary-size n >= 1, via mantissa/exponent split.
double natural_log(const Int& n);

// log2(n) for arbitrary-size n >= 1.
double log2_int(const Int& n);

// Bits needed to write |n|; bit_length(0) = 1.
std::size_t bit_length(const Int& n);

Int pow_ui(unsigned long base, unsigned long exp);

}  // namespace abct

#endif  // ABCT_BIGMATH_HPP
