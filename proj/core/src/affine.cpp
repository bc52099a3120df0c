/*
   Affine maps on triples. Additivity survives exactly when the shifts
   balance (gamma + delta = beta); coprimality and radical growth do not
   survive in general, so both are re-checked and reported.
*/

#include "abct/affine.hpp"

#include <stdexcept>
#include <utility>

namespace abct {

namespace {

void require_valid_map(const AffineMap& m) {
  if (m.alpha < 1)
    throw std::invalid_argument("affine: alpha must be >= 1");
}

void require_additive_triple(const Triple& t, const char* who) {
  if (t.a < 1 || t.b < 1 || t.a + t.b != t.c)
    throw std::invalid_argument(std::string(who) +
                                ": input triple must be positive and additive");
}

}  // namespace

bool check_additivity(const AffineMap& m) {
  return m.gamma + m.delta == m.beta;
}

Triple apply_affine(const AffineMap& m, const Triple& t) {
  require_valid_map(m);
  if (!check_additivity(m))
    throw NonAdditiveMap("apply_affine: gamma + delta != beta");
  Triple image{m.alpha * t.a + m.gamma, m.alpha * t.b + m.delta,
               m.alpha * t.c + m.beta};
  if (image.a < 1 || image.b < 1)
    throw NonPositiveResult("apply_affine: image left the positive integers");
  return image;
}

AffineMap solve_affine(const Triple& src, const Triple& dst, const Int& alpha) {
  if (alpha < 1) throw std::invalid_argument("solve_affine: alpha must be >= 1");
  if (dst.a + dst.b != dst.c)
    throw std::invalid_argument("solve_affine: dst must satisfy a + b = c");
  AffineMap m;
  m.alpha = alpha;
  m.gamma = dst.a - alpha * src.a;
  m.delta = dst.b - alpha * src.b;
  m.beta = m.gamma + m.delta;  // additive by construction
  return m;
}

RadicalBoundReport radical_bound(const AffineMap& m, const Triple& t,
                                 const FactorConfig& cfg) {
  require_valid_map(m);
  if (!check_additivity(m))
    throw NonAdditiveMap("radical_bound: gamma + delta != beta");
  require_additive_triple(t, "radical_bound");

  RadicalBoundReport r;
  r.rad_abc = radical_of_product({t.a, t.b, t.c}, cfg);
  mpz_gcd(r.alpha_rad_gcd.get_mpz_t(), m.alpha.get_mpz_t(),
          r.rad_abc.get_mpz_t());
  r.hypotheses_met = r.alpha_rad_gcd == 1;

  // rad(alpha * gamma * delta) with zero components left out; negative
  // shifts contribute their magnitude.
  std::vector<Int> shift_parts;
  if (m.alpha != 0) shift_parts.push_back(m.alpha);
  if (m.gamma != 0) shift_parts.push_back(abs(m.gamma));
  if (m.delta != 0) shift_parts.push_back(abs(m.delta));
  r.rad_scale_shifts = radical_of_product(shift_parts, cfg);

  r.bound = natural_log(m.alpha * t.c) /
            (natural_log(r.rad_abc) + natural_log(r.rad_scale_shifts));

  r.image = apply_affine(m, t);
  r.image_rad = radical_of_product({r.image.a, r.image.b, r.image.c}, cfg);
  r.image_q = natural_log(r.image.c) / natural_log(r.image_rad);
  Int g;
  mpz_gcd(g.get_mpz_t(), r.image.a.get_mpz_t(), r.image.b.get_mpz_t());
  r.image_coprime = g == 1;
  r.bound_satisfied = r.image_q >= r.bound - 1e-9;
  return r;
}

}  // namespace abct
