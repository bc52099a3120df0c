#ifndef ABCT_AFFINE_HPP
#define ABCT_AFFINE_HPP

#include "abct/metrics.hpp"
#include "abct/symbolic.hpp"

namespace abct {

// (a, b, c) -> (alpha*a + gamma, alpha*b + delta, alpha*c + beta).
// The map preserves a + b = c iff gamma + delta = beta.
struct AffineMap {
  Int alpha = 1;  // scale, >= 1
  Int gamma = 0;
  Int delta = 0;
  Int beta = 0;
};

bool check_additivity(const AffineMap& m);

// Throws NonAdditiveMap when gamma + delta != beta and NonPositiveResult
// when the image leaves the positive integers. Coprimality of the image is
// NOT guaranteed; run validate_triple on the result to see whether it held.
Triple apply_affine(const AffineMap& m, const Triple& t);

// The additive map with scale alpha taking src to dst: gamma = dst.a -
// alpha*src.a, delta = dst.b - alpha*src.b, beta = gamma + delta. dst must
// itself satisfy a + b = c.
AffineMap solve_affine(const Triple& src, const Triple& dst, const Int& alpha);

// Diagnostic for the radical-control lower bound
//   Q(image) >= log(alpha*c) / (log rad(abc) + log rad(alpha*gamma*delta)).
// Zero shift components are omitted from the shift product (rad of an empty
// product is 1); negative shifts contribute their magnitude. The bound is
// reported alongside the actual image quality, never asserted.
struct RadicalBoundReport {
  Triple image;
  double bound = 0.0;
  double image_q = 0.0;
  bool hypotheses_met = false;  // gcd(alpha, rad(abc)) == 1
  bool bound_satisfied = false;
  bool image_coprime = false;
  Int rad_abc;
  Int rad_scale_shifts;  // rad of the nonzero components of alpha*gamma*delta
  Int alpha_rad_gcd;     // gcd(alpha, rad(abc))
  Int image_rad;         // rad(a'b'c')
};

RadicalBoundReport radical_bound(const AffineMap& m, const Triple& t,
                                 const FactorConfig& cfg = {});

}  // namespace abct

#endif  // ABCT_AFFINE_HPP
