/*
   Scoring: quality ratio, compression ratio, entropy confidence score,
   residue filter, smoothness report and the large-p diagnostics.
*/

#include "abct/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace abct {

namespace {

Int radical_union(const Factorization& fa, const Factorization& fb,
                  const Factorization& fc) {
  std::set<Int> primes;
  for (const auto& [p, e] : fa.factors) primes.insert(p);
  for (const auto& [p, e] : fb.factors) primes.insert(p);
  for (const auto& [p, e] : fc.factors) primes.insert(p);
  Int r = 1;
  for (const Int& p : primes) r *= p;
  return r;
}

}  // namespace

QualityReport quality(const Triple& t, const FactorConfig& cfg) {
  if (t.a < 1 || t.b < 1)
    throw ConstraintViolated("quality: a and b must be positive");
  if (t.a + t.b != t.c)
    throw ConstraintViolated("quality: a + b != c");
  Int g;
  mpz_gcd(g.get_mpz_t(), t.a.get_mpz_t(), t.b.get_mpz_t());
  if (g != 1)
    throw ConstraintViolated("quality: gcd(a, b) = " + g.get_str());
  if (t.c < 2) throw std::invalid_argument("quality: c must be >= 2");

  QualityReport r;
  r.fact_a = factorize(t.a, cfg);
  r.fact_b = factorize(t.b, cfg);
  r.fact_c = factorize(t.c, cfg);
  r.rad_abc = radical_union(r.fact_a, r.fact_b, r.fact_c);
  if (r.rad_abc == 1)
    throw DegenerateRadical("quality: rad(abc) = 1 has zero logarithm");
  r.log_c = natural_log(t.c);
  r.log_rad = natural_log(r.rad_abc);
  r.q = r.log_c / r.log_rad;
  return r;
}

double compression_ratio(const SymbolicParams& params) {
  const Int b = build_b(params.p, params.k, params.n, params.d);
  if (b < 2)
    throw std::invalid_argument("compression_ratio: b must be >= 2");
  const std::size_t len = bit_length(Int(params.p)) +
                          bit_length(Int(params.k)) + bit_length(params.n) +
                          bit_length(params.d);
  if (len < 2)
    throw DegenerateLength("compression_ratio: parameter bit-length " +
                           std::to_string(len) + " has zero log2");
  return log2_int(b) / std::log2(double(len));
}

EcsReport ecs(unsigned p) {
  if (p < 1) throw std::invalid_argument("ecs: p must be >= 1");
  // The full inverse orbit has phi(3^p) = 2*3^(p-1) members; past p = 16
  // the residue list no longer fits in desk-scale memory.
  if (p > 16)
    throw std::invalid_argument("ecs: orbit of 3^" + std::to_string(p) +
                                " is too large to enumerate");
  const Int m = pow3(p);
  const unsigned long phi = mpz_get_ui(Int(2 * pow3(p - 1)).get_mpz_t());

  EcsReport r;
  r.p = p;
  r.residues.reserve(phi);
  const Int inv2 = inverse_mod(2, m);
  Int t = 1;  // (2^i)^-1 mod m, starting at i = 0
  Int sum = 0;
  for (unsigned long i = 0; i < phi; ++i) {
    Int d = m - t;  // (-t) mod m; t is a unit, so this stays in [1, m)
    sum += d;
    r.residues.push_back(std::move(d));
    t = t * inv2 % m;
  }
  r.mean = mpz_get_d(sum.get_mpz_t()) / double(phi);
  double dev = 0.0;
  for (const Int& d : r.residues)
    dev += std::abs(mpz_get_d(d.get_mpz_t()) - r.mean);
  r.mad = dev / double(phi);
  if (r.mad == 0.0)
    throw DegenerateSpread("ecs: residue orbit has zero spread");
  r.score = 1.0 / r.mad;
  return r;
}

ResidueFilter residue_filter(unsigned p, Range k_range) {
  if (p < 1) throw std::invalid_argument("residue_filter: p must be >= 1");
  if (k_range.empty() || k_range.lo < 1)
    throw std::invalid_argument("residue_filter: empty or invalid k range");
  std::set<Int> members;
  for (unsigned long k = k_range.lo; k <= k_range.hi; ++k) {
    Int r = canonical_d(p, unsigned(k));
    if (mpz_odd_p(r.get_mpz_t())) members.insert(std::move(r));
  }
  ResidueFilter f;
  f.p = p;
  f.k_range = k_range;
  f.members.assign(members.begin(), members.end());
  return f;
}

SmoothnessReport smoothness_report(const SymbolicParams& params,
                                   const Int& bound, const FactorConfig& cfg) {
  if (bound < 1)
    throw std::invalid_argument("smoothness_report: bound must be >= 1");
  SmoothnessReport r;
  r.m = 2 * pow3(params.p) * params.n + params.d;
  r.bound = bound;
  r.fact_m = factorize(r.m, cfg);
  r.smooth = r.fact_m.factors.empty() ||
             r.fact_m.factors.back().first <= bound;
  return r;
}

AsymptoticReport asymptotic_diagnostics(const SymbolicParams& params,
                                        const FactorConfig& cfg) {
  const Triple t = generate_triple(params);
  const DerivedS s = derive_s(t.c, params.p);
  const Int m_core = 2 * pow3(params.p) * params.n + params.d;
  const Int s_plus_1 = s.s + 1;

  AsymptoticReport r;
  r.log_c_identity = double(params.p) * std::log(3.0) + natural_log(s_plus_1);
  r.log_b_identity =
      double(params.k - 1) * std::log(2.0) + natural_log(m_core);
  r.log_rad_upper =
      std::log(6.0) + natural_log(radical_of_product({s_plus_1, m_core}, cfg));
  r.q_estimate = r.log_b_identity /
                 natural_log(radical_of_product({6, s_plus_1, m_core}, cfg));
  r.q_true = quality(t, cfg).q;
  r.log_c = natural_log(t.c);
  return r;
}

}  // namespace abct
