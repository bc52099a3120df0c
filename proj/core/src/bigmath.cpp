/*
   Exact integer arithmetic on top of GMP: extended Euclid, modular
   inversion, Miller-Rabin primality, trial-division + Brent-rho
   factorization, radicals, valuations and smoothness tests.
*/

#include "abct/bigmath.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace abct {

namespace {

constexpr unsigned long kSieveLimit = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kSieveLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kSieveLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t(i) * i; j <= kSieveLimit; j += i)
        composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// One Miller-Rabin round; n odd, n > 2, 1 < base < n - 1 not required but
// bases congruent to 0 mod n are skipped by the caller.
bool miller_rabin_round(const Int& n, const Int& n_minus_1, const Int& odd_part,
                        unsigned long two_exp, const Int& base) {
  Int x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), odd_part.get_mpz_t(),
           n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long i = 1; i < two_exp; ++i) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

// The 12-prime witness set is a complete primality certificate for
// n < 3,317,044,064,679,887,385,961,981 (> 2^64).
const Int& deterministic_ceiling() {
  static const Int ceiling("3317044064679887385961981");
  return ceiling;
}

constexpr unsigned kExtraProbabilisticRounds = 40;

// Brent's cycle-finding rho with batched gcds. Deterministic: polynomial
// constants are swept 1, 2, 3, ... instead of randomized. Returns a
// nontrivial factor, or 0 once the iteration budget is spent.
Int rho_brent(const Int& n, unsigned long& budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Int y = 2, g = 1, q = 1, x, ys;
    unsigned long r = 1;
    const unsigned long batch = 128;
    while (g == 1) {
      x = y;
      if (r > budget) return 0;
      budget -= r;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      for (unsigned long k = 0; k < r && g == 1; k += batch) {
        ys = y;
        const unsigned long steps = std::min(batch, r - k);
        if (steps > budget) return 0;
        budget -= steps;
        for (unsigned long i = 0; i < steps; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      r *= 2;
    }
    if (g == n) {
      // Batch overshot the factor; replay one step at a time from ys.
      g = 1;
      while (g == 1) {
        if (budget == 0) return 0;
        --budget;
        ys = (ys * ys + c) % n;
        Int diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (g != n) return g;
    // Degenerate cycle for this constant; try the next one.
  }
}

void require_positive(const Int& n, const char* who) {
  if (n < 1)
    throw std::invalid_argument(std::string(who) +
                                ": argument must be a positive integer");
}

}  // namespace

Int Factorization::value() const {
  Int v = 1;
  Int pe;
  for (const auto& [prime, exp] : factors) {
    mpz_pow_ui(pe.get_mpz_t(), prime.get_mpz_t(), exp);
    v *= pe;
  }
  return v;
}

Int Factorization::radical() const {
  Int r = 1;
  for (const auto& [prime, exp] : factors) r *= prime;
  return r;
}

ExtGcdResult ext_gcd(const Int& x, const Int& y) {
  require_positive(x, "ext_gcd");
  require_positive(y, "ext_gcd");
  Int old_r = x, r = y;
  Int old_u = 1, u = 0;
  Int old_v = 0, v = 1;
  while (r != 0) {
    Int quot = old_r / r;
    Int tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_u - quot * u;
    old_u = u;
    u = tmp;
    tmp = old_v - quot * v;
    old_v = v;
    v = tmp;
  }
  return {old_r, old_u, old_v};
}

Int inverse_mod(const Int& x, const Int& m) {
  require_positive(x, "inverse_mod");
  if (m < 2) throw std::invalid_argument("inverse_mod: modulus must be >= 2");
  ExtGcdResult e = ext_gcd(x, m);
  if (e.g != 1)
    throw NotInvertible("inverse_mod: gcd(" + x.get_str() + ", " +
                        m.get_str() + ") = " + e.g.get_str());
  Int r = e.u % m;
  if (r < 0) r += m;
  return r;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  static const unsigned small[] = {2,  3,  5,  7,  11, 13,
                                   17, 19, 23, 29, 31, 37};
  for (unsigned s : small) {
    if (n == s) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), s)) return false;
  }

  Int n_minus_1 = n - 1;
  unsigned long two_exp = mpz_scan1(n_minus_1.get_mpz_t(), 0);
  Int odd_part = n_minus_1 >> two_exp;

  for (unsigned s : small) {
    if (!miller_rabin_round(n, n_minus_1, odd_part, two_exp, Int(s)))
      return false;
  }
  if (n < deterministic_ceiling()) return true;

  // Fixed-seed extra rounds keep results reproducible run to run.
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(0x5eed5eedUL);
  for (unsigned i = 0; i < kExtraProbabilisticRounds; ++i) {
    Int base = rng.get_z_range(n - 3) + 2;  // [2, n - 2]
    if (!miller_rabin_round(n, n_minus_1, odd_part, two_exp, base))
      return false;
  }
  return true;
}

Factorization factorize(const Int& n, const FactorConfig& cfg) {
  require_positive(n, "factorize");
  std::map<Int, unsigned> found;
  Int rem = n;

  const unsigned long trial_bound = std::min(cfg.trial_bound, kSieveLimit);
  for (std::uint32_t p : small_primes()) {
    if (p > trial_bound || rem == 1) break;
    // rem < p^2 means rem is 1 or prime; the rho stage's primality check
    // settles which, so stop dividing here.
    if (mpz_cmp_ui(rem.get_mpz_t(), static_cast<unsigned long>(p) * p) < 0)
      break;
    while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
      rem /= p;
      ++found[p];
    }
  }

  unsigned long budget = cfg.rho_max_iterations;
  std::vector<Int> pending;
  if (rem > 1) pending.push_back(rem);
  while (!pending.empty()) {
    Int m = pending.back();
    pending.pop_back();
    if (is_prime(m)) {
      ++found[m];
      continue;
    }
    Int f = rho_brent(m, budget);
    if (f == 0) {
      Factorization partial;
      partial.factors.assign(found.begin(), found.end());
      Int unfactored = m;
      for (const Int& left : pending) unfactored *= left;
      throw FactorizationExhausted(
          "factorize: effort cap reached with composite cofactor " +
              unfactored.get_str(),
          std::move(partial), std::move(unfactored));
    }
    pending.push_back(f);
    pending.push_back(m / f);
  }

  Factorization result;
  result.factors.assign(found.begin(), found.end());
  return result;
}

Int radical(const Int& n, const FactorConfig& cfg) {
  require_positive(n, "radical");
  return factorize(n, cfg).radical();
}

Int radical_of_product(const std::vector<Int>& values,
                       const FactorConfig& cfg) {
  std::set<Int> primes;
  for (const Int& v : values) {
    require_positive(v, "radical_of_product");
    for (const auto& [prime, exp] : factorize(v, cfg).factors)
      primes.insert(prime);
  }
  Int r = 1;
  for (const Int& p : primes) r *= p;
  return r;
}

unsigned long valuation(const Int& n, const Int& q) {
  require_positive(n, "valuation");
  if (q < 2 || !is_prime(q))
    throw std::invalid_argument("valuation: q must be prime");
  Int stripped;
  return mpz_remove(stripped.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t());
}

bool is_smooth(const Int& n, const Int& bound, const FactorConfig& cfg) {
  require_positive(n, "is_smooth");
  require_positive(bound, "is_smooth");
  Int rem = n;
  for (std::uint32_t p : small_primes()) {
    if (p > bound || p > kSieveLimit) break;
    while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) rem /= p;
    if (rem == 1) return true;
  }
  if (rem == 1) return true;
  if (bound <= kSieveLimit) return false;  // every factor left is > bound
  const Factorization f = factorize(rem, cfg);
  return f.factors.back().first <= bound;
}

double natural_log(const Int& n) {
  require_positive(n, "natural_log");
  signed long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log(mant) + double(exp) * M_LN2;
}

double log2_int(const Int& n) {
  require_positive(n, "log2_int");
  signed long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log2(mant) + double(exp);
}

std::size_t bit_length(const Int& n) {
  if (n == 0) return 1;
  Int m = abs(n);
  return mpz_sizeinbase(m.get_mpz_t(), 2);
}

Int pow_ui(unsigned long base, unsigned long exp) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

}  // namespace abct
