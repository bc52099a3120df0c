#ifndef ABCT_SYMBOLIC_HPP
#define ABCT_SYMBOLIC_HPP

#include <string>
#include <vector>

#include "abct/bigmath.hpp"

namespace abct {

// Inclusive integer interval.
struct Range {
  unsigned long lo = 1;
  unsigned long hi = 1;

  bool empty() const { return hi < lo; }
  unsigned long size() const { return empty() ? 0 : hi - lo + 1; }
};

// The tuple (p, k, n, d) driving the triple identity
//   b = 2^(k-1) * (2 * 3^p * n + d),  a = 1,  c = 1 + b,
// where d is odd and 2^(k-1) * d = -1 (mod 3^p).
struct SymbolicParams {
  unsigned p = 1;  // exponent of 3
  unsigned k = 1;  // exponent index of 2
  Int n = 0;       // multiplier, >= 0
  Int d = 1;       // residue-constrained odd parameter
};

struct Triple {
  Int a;
  Int b;
  Int c;

  bool operator==(const Triple& o) const {
    return a == o.a && b == o.b && c == o.c;
  }
};

// s with c = 3^p * (s + 1); the parity flag records whether s is even.
struct DerivedS {
  Int s;
  bool even = false;
};

struct CheckResult {
  std::string name;
  bool passed;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

struct TemplateResult {
  SymbolicParams params;
  Triple triple;
  DerivedS s;
};

Int pow3(unsigned p);

// Unique residue r in [0, 3^p) with 2^(k-1) * r = -1 (mod 3^p). Always
// solvable: 2 is a unit mod 3^p.
Int canonical_d(unsigned p, unsigned k);

// Smallest positive odd representative of canonical_d(p, k): the canonical
// residue itself when odd, else canonical + 3^p (3^p is odd, so the lift
// flips parity). Result is < 2 * 3^p.
Int solve_d(unsigned p, unsigned k);

// Raw identity arithmetic, no constraint checks: 2^(k-1) * (2 * 3^p * n + d).
Int build_b(unsigned p, unsigned k, const Int& n, const Int& d);

// Throws ConstraintViolated unless params passes its invariants (d odd,
// congruent, positive; n >= 0).
Triple generate_triple(const SymbolicParams& params);

// Throws NotDivisible when 3^p does not divide c.
DerivedS derive_s(const Int& c, unsigned p);

// The five-step construction: solve d, build b, set a = c - b = 1, verify,
// derive s.
TemplateResult construct_from_template(unsigned p, unsigned k, const Int& n);

// Literal transcription of the seeding routine: d is the canonical residue
// (-inv) mod 3^p and may be even; no odd lift is applied. When the canonical
// residue is odd this agrees with generate_triple.
Triple prng_seed(unsigned p, unsigned k, const Int& n);

// Pass/fail for a > 0, b > 0, a + b = c, gcd(a, b) = 1. Failures are report
// entries, never exceptions.
ValidationReport validate_triple(const Triple& t);

}  // namespace abct

#endif  // ABCT_SYMBOLIC_HPP
