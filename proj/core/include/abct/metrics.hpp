#ifndef ABCT_METRICS_HPP
#define ABCT_METRICS_HPP

#include <vector>

#include "abct/symbolic.hpp"

namespace abct {

// q = ln(c) / ln(rad(abc)) plus every intermediate that went into it.
struct QualityReport {
  double q = 0.0;
  Int rad_abc;
  double log_c = 0.0;
  double log_rad = 0.0;
  Factorization fact_a;
  Factorization fact_b;
  Factorization fact_c;
};

// Throws ConstraintViolated if the triple is not additive/coprime/positive,
// DegenerateRadical if rad(abc) = 1, and propagates FactorizationExhausted.
// The natural logarithm is used throughout; q itself is base-invariant.
QualityReport quality(const Triple& t, const FactorConfig& cfg = {});

// eta = log2(b) / log2(len), len = bitlen(p) + bitlen(k) + bitlen(n) +
// bitlen(d) with bitlen(0) = 1.
double compression_ratio(const SymbolicParams& params);

// Inverse-orbit statistics mod 3^p. residues[i] = (-(2^i)^-1) mod 3^p for
// i = 0 .. phi(3^p)-1; since 2 is a primitive root mod 3^p the orbit walks
// every unit once, so the report depends on p only.
struct EcsReport {
  unsigned p = 1;
  std::vector<Int> residues;
  double mean = 0.0;
  double mad = 0.0;    // mean absolute deviation
  double score = 0.0;  // 1 / mad
};

EcsReport ecs(unsigned p);

// Odd canonical residues of -(2^(k-1))^-1 mod 3^p over a k interval.
struct ResidueFilter {
  unsigned p = 1;
  Range k_range;
  std::vector<Int> members;  // sorted, unique, all odd
};

ResidueFilter residue_filter(unsigned p, Range k_range);

// Whether the core multiplicand m = 2 * 3^p * n + d is bound-smooth.
struct SmoothnessReport {
  Int m;
  Factorization fact_m;
  Int bound;
  bool smooth = false;
};

SmoothnessReport smoothness_report(const SymbolicParams& params,
                                   const Int& bound,
                                   const FactorConfig& cfg = {});

// Large-p diagnostics. log_c_identity = p*ln3 + ln(s+1) equals ln(c) because
// c = 3^p*(s+1) exactly; log_rad_upper bounds ln(rad(abc)) from above; the
// estimate divides ln(b) by ln(rad(2*3*(s+1)*m)). Reported, never asserted.
struct AsymptoticReport {
  double log_c_identity = 0.0;  // p*ln3 + ln(s+1)
  double log_b_identity = 0.0;  // (k-1)*ln2 + ln(2*3^p*n + d)
  double log_rad_upper = 0.0;   // ln(6) + ln(rad((s+1)*m))
  double q_estimate = 0.0;      // log_b_identity / ln(rad(6*(s+1)*m))
  double q_true = 0.0;
  double log_c = 0.0;           // ln(c) computed from c directly
};

AsymptoticReport asymptotic_diagnostics(const SymbolicParams& params,
                                        const FactorConfig& cfg = {});

}  // namespace abct

#endif  // ABCT_METRICS_HPP
