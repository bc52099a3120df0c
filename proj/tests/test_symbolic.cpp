#include "abct/symbolic.hpp"

#include <gtest/gtest.h>

using namespace abct;

namespace {

Triple make_triple(long a, long b, long c) { return Triple{a, b, c}; }

bool check(const ValidationReport& r, const std::string& name) {
  for (const CheckResult& c : r.checks)
    if (c.name == name) return c.passed;
  ADD_FAILURE() << "no check named " << name;
  return false;
}

}  // namespace

TEST(CanonicalD, WorkedExamples) {
  EXPECT_EQ(canonical_d(2, 3), 2);    // -7 mod 9
  EXPECT_EQ(canonical_d(5, 13), 125); // -118 mod 243
  EXPECT_EQ(canonical_d(1, 1), 2);    // -1 mod 3
}

TEST(SolveD, WorkedExamples) {
  EXPECT_EQ(solve_d(2, 3), 11);
  EXPECT_EQ(solve_d(5, 4), 91);
  EXPECT_EQ(solve_d(5, 13), 125);
  EXPECT_EQ(solve_d(2, 4), 1);
}

TEST(SolveD, ReproducesPublishedDColumn) {
  // (p, k) recovered from the five published triples via p = v3(c),
  // k - 1 = v2(b).
  EXPECT_EQ(solve_d(5, 2), 121);  // (1, 242, 243)
  EXPECT_EQ(solve_d(4, 5), 5);    // (1, 80, 81)
  EXPECT_EQ(solve_d(8, 6), 205);  // (1, 6560, 6561)
  EXPECT_EQ(solve_d(2, 4), 1);    // (1, 8, 9)
  EXPECT_EQ(solve_d(6, 4), 91);   // (1, 728, 729)
}

TEST(SolveD, CongruenceParityAndRangeAcrossGrid) {
  for (unsigned p = 1; p <= 12; ++p) {
    const Int m = pow3(p);
    for (unsigned k = 1; k <= 40; ++k) {
      const Int d = solve_d(p, k);
      ASSERT_TRUE(mpz_odd_p(d.get_mpz_t()));
      ASSERT_GE(d, 1);
      ASSERT_LT(d, 2 * m);
      const Int lhs = ((Int(1) << (k - 1)) * d + 1) % m;
      ASSERT_EQ(lhs, 0) << "p=" << p << " k=" << k;
      // canonical residue is the unique solution in [0, 3^p)
      ASSERT_EQ(canonical_d(p, k), d % m);
    }
  }
}

TEST(GenerateTriple, WorkedExamples) {
  EXPECT_EQ(generate_triple({2, 3, 0, 11}), make_triple(1, 44, 45));
  EXPECT_EQ(generate_triple({5, 4, 0, 91}), make_triple(1, 728, 729));
  EXPECT_EQ(generate_triple({5, 13, 0, 125}), make_triple(1, 512000, 512001));
}

TEST(GenerateTriple, RejectsBadD) {
  EXPECT_THROW(generate_triple({2, 3, 0, 7}), ConstraintViolated);   // wrong class
  EXPECT_THROW(generate_triple({2, 3, 0, 2}), ConstraintViolated);   // even
  EXPECT_THROW(generate_triple({2, 3, 0, -7}), ConstraintViolated);  // negative
  EXPECT_THROW(generate_triple({2, 3, -1, 11}), ConstraintViolated); // n < 0
}

TEST(GenerateTriple, AcceptsNonMinimalOddLifts) {
  // 11 + 2*9 = 29 is still odd and in the right class mod 9.
  EXPECT_EQ(generate_triple({2, 3, 0, 29}), make_triple(1, 116, 117));
}

TEST(DeriveS, WorkedExamples) {
  const DerivedS s1 = derive_s(45, 2);
  EXPECT_EQ(s1.s, 4);
  EXPECT_TRUE(s1.even);
  const DerivedS s2 = derive_s(729, 5);
  EXPECT_EQ(s2.s, 2);
  EXPECT_TRUE(s2.even);
  EXPECT_THROW(derive_s(10, 1), NotDivisible);
}

TEST(DeriveS, OddParityIsFlaggedNotRejected) {
  const DerivedS s = derive_s(6, 1);  // s = 1
  EXPECT_EQ(s.s, 1);
  EXPECT_FALSE(s.even);
}

TEST(ConstructFromTemplate, HighQualityExample) {
  const TemplateResult r = construct_from_template(5, 13, 0);
  EXPECT_EQ(r.params.d, 125);
  EXPECT_EQ(r.triple, make_triple(1, 512000, 512001));
  EXPECT_EQ(r.s.s, 2106);
  EXPECT_TRUE(r.s.even);
}

TEST(ConstructFromTemplate, SmallestPublishedRow) {
  const TemplateResult r = construct_from_template(2, 4, 0);
  EXPECT_EQ(r.triple, make_triple(1, 8, 9));
  EXPECT_EQ(r.params.d, 1);
  EXPECT_EQ(r.s.s, 0);
}

TEST(ConstructFromTemplate, MinimalParameters) {
  const TemplateResult r = construct_from_template(1, 1, 0);
  EXPECT_EQ(r.params.d, 5);
  EXPECT_EQ(r.triple, make_triple(1, 5, 6));
  EXPECT_EQ(r.s.s, 1);
  EXPECT_FALSE(r.s.even);
}

TEST(PrngSeed, PseudocodeTraces) {
  EXPECT_EQ(prng_seed(2, 3, 0), make_triple(1, 8, 9));    // d = 2, even
  EXPECT_EQ(prng_seed(1, 1, 0), make_triple(1, 2, 3));    // d = 2, even
  EXPECT_EQ(prng_seed(5, 13, 0), make_triple(1, 512000, 512001));  // d = 125
}

TEST(PrngSeed, AgreesWithGenerateWhenCanonicalIsOdd) {
  for (unsigned p = 1; p <= 8; ++p) {
    for (unsigned k = 1; k <= 13; ++k) {
      const Int r = canonical_d(p, k);
      if (!mpz_odd_p(r.get_mpz_t())) continue;
      for (unsigned long n = 0; n <= 3; ++n) {
        ASSERT_EQ(prng_seed(p, k, Int(n)),
                  generate_triple({p, k, Int(n), solve_d(p, k)}));
      }
    }
  }
}

TEST(PrngSeed, SeedTripleIsAdditiveAndDivisible) {
  for (unsigned p = 1; p <= 8; ++p) {
    for (unsigned k = 1; k <= 13; ++k) {
      const Triple t = prng_seed(p, k, 1);
      ASSERT_EQ(t.a + t.b, t.c);
      ASSERT_TRUE(mpz_divisible_p(t.c.get_mpz_t(), pow3(p).get_mpz_t()));
    }
  }
}

TEST(ValidateTriple, ReportsAllChecks) {
  const ValidationReport good = validate_triple(make_triple(1, 728, 729));
  EXPECT_TRUE(good.all_passed());
  EXPECT_EQ(good.checks.size(), 4u);

  const ValidationReport shared = validate_triple(make_triple(2, 2, 4));
  EXPECT_FALSE(shared.all_passed());
  EXPECT_TRUE(check(shared, "additivity"));
  EXPECT_FALSE(check(shared, "coprimality"));

  const ValidationReport gap = validate_triple(make_triple(1, 2, 4));
  EXPECT_FALSE(check(gap, "additivity"));
  EXPECT_TRUE(check(gap, "coprimality"));
}

TEST(Identity, DivisibilityAndValuationAcrossGrid) {
  for (unsigned p = 1; p <= 10; ++p) {
    const Int m = pow3(p);
    for (unsigned k = 1; k <= 20; ++k) {
      for (unsigned long n = 0; n <= 4; ++n) {
        const SymbolicParams params{p, k, Int(n), solve_d(p, k)};
        const Triple t = generate_triple(params);
        ASSERT_EQ(t.a, 1);
        ASSERT_EQ(t.a + t.b, t.c);
        ASSERT_TRUE(mpz_divisible_p(t.c.get_mpz_t(), m.get_mpz_t()));
        ASSERT_EQ(valuation(t.b, 2), k - 1);  // d odd pins the 2-adic part
        Int g;
        mpz_gcd(g.get_mpz_t(), t.b.get_mpz_t(), t.c.get_mpz_t());
        ASSERT_EQ(g, 1);  // consecutive integers
        ASSERT_TRUE(validate_triple(t).all_passed());
      }
    }
  }
}
