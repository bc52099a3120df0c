/*
   The parametric triple identity and its residue constraint: given p, k,
   pick d with 2^(k-1) * d = -1 (mod 3^p); then b = 2^(k-1)(2*3^p*n + d)
   makes (1, b, 1 + b) an additive triple whose c is divisible by 3^p.
*/

#include "abct/symbolic.hpp"

#include <stdexcept>

namespace abct {

namespace {

void require_positive_param(unsigned v, const char* who) {
  if (v < 1)
    throw ConstraintViolated(std::string(who) + ": parameter must be >= 1");
}

}  // namespace

bool ValidationReport::all_passed() const {
  for (const CheckResult& c : checks)
    if (!c.passed) return false;
  return true;
}

Int pow3(unsigned p) { return pow_ui(3, p); }

Int canonical_d(unsigned p, unsigned k) {
  require_positive_param(p, "canonical_d");
  require_positive_param(k, "canonical_d");
  const Int m = pow3(p);
  Int exp;
  mpz_powm(exp.get_mpz_t(), Int(2).get_mpz_t(), Int(k - 1).get_mpz_t(),
           m.get_mpz_t());
  const Int inv = inverse_mod(exp, m);
  return m - inv;  // (-inv) mod m; inv is in [1, m), so this lands in [1, m)
}

Int solve_d(unsigned p, unsigned k) {
  const Int r = canonical_d(p, k);
  if (mpz_odd_p(r.get_mpz_t())) return r;
  return r + pow3(p);
}

Int build_b(unsigned p, unsigned k, const Int& n, const Int& d) {
  return (Int(1) << (k - 1)) * (2 * pow3(p) * n + d);
}

Triple generate_triple(const SymbolicParams& params) {
  require_positive_param(params.p, "generate_triple");
  require_positive_param(params.k, "generate_triple");
  if (params.n < 0)
    throw ConstraintViolated("generate_triple: n must be >= 0");
  if (params.d < 1 || mpz_even_p(params.d.get_mpz_t()))
    throw ConstraintViolated("generate_triple: d = " + params.d.get_str() +
                             " fails the parity check (positive odd required)");
  const Int m = pow3(params.p);
  Int exp;
  mpz_powm(exp.get_mpz_t(), Int(2).get_mpz_t(), Int(params.k - 1).get_mpz_t(),
           m.get_mpz_t());
  if ((exp * params.d + 1) % m != 0)
    throw ConstraintViolated(
        "generate_triple: d = " + params.d.get_str() +
        " fails 2^(k-1)*d = -1 (mod 3^" + std::to_string(params.p) + ")");
  const Int b = build_b(params.p, params.k, params.n, params.d);
  return Triple{1, b, b + 1};
}

DerivedS derive_s(const Int& c, unsigned p) {
  if (c < 1) throw std::invalid_argument("derive_s: c must be >= 1");
  require_positive_param(p, "derive_s");
  const Int m = pow3(p);
  if (!mpz_divisible_p(c.get_mpz_t(), m.get_mpz_t()))
    throw NotDivisible("derive_s: 3^" + std::to_string(p) +
                       " does not divide " + c.get_str());
  Int s = c / m - 1;
  return DerivedS{s, mpz_even_p(s.get_mpz_t()) != 0};
}

TemplateResult construct_from_template(unsigned p, unsigned k, const Int& n) {
  const Int d = solve_d(p, k);
  const SymbolicParams params{p, k, n, d};
  const Triple t = generate_triple(params);
  // a = c - b = 1 by construction; the verification step still runs.
  const ValidationReport v = validate_triple(t);
  if (!v.all_passed())
    throw ConstraintViolated("construct_from_template: verification failed");
  return TemplateResult{params, t, derive_s(t.c, p)};
}

Triple prng_seed(unsigned p, unsigned k, const Int& n) {
  require_positive_param(p, "prng_seed");
  require_positive_param(k, "prng_seed");
  if (n < 0) throw std::invalid_argument("prng_seed: n must be >= 0");
  const Int m = pow3(p);
  const Int exp = Int(1) << (k - 1);
  const Int inv = inverse_mod(exp, m);
  Int d = (-inv) % m;  // canonical residue, possibly even: no odd lift here
  if (d < 0) d += m;
  const Int b = exp * (2 * m * n + d);
  return Triple{1, b, 1 + b};
}

ValidationReport validate_triple(const Triple& t) {
  ValidationReport r;
  r.checks.push_back({"a_positive", t.a > 0});
  r.checks.push_back({"b_positive", t.b > 0});
  r.checks.push_back({"additivity", t.a + t.b == t.c});
  Int g;
  mpz_gcd(g.get_mpz_t(), t.a.get_mpz_t(), t.b.get_mpz_t());
  r.checks.push_back({"coprimality", g == 1});
  return r;
}

}  // namespace abct
