#include "abct/metrics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

using namespace abct;

namespace {

struct PublishedRow {
  long a, b, c;
  double quality;
};

// The five published sweep rows: triple and quality.
const PublishedRow kPublished[] = {
    {1, 242, 243, 1.3111},
    {1, 80, 81, 1.2920},
    {1, 6560, 6561, 1.2353},
    {1, 8, 9, 1.2263},
    {1, 728, 729, 1.0459},
};

}  // namespace

TEST(Quality, WorkedExamples) {
  const QualityReport r1 = quality({1, 44, 45});
  EXPECT_EQ(r1.rad_abc, 330);
  EXPECT_NEAR(r1.q, 0.656, 5e-4);

  const QualityReport r2 = quality({1, 728, 729});
  EXPECT_EQ(r2.rad_abc, 546);
  EXPECT_NEAR(r2.q, 1.0459, 5e-4);

  const QualityReport r3 = quality({1, 512000, 512001});
  EXPECT_EQ(r3.rad_abc, 9030);
  EXPECT_NEAR(r3.q, 1.4437, 5e-4);

  const QualityReport r4 = quality({1, 1, 2});
  EXPECT_EQ(r4.rad_abc, 2);
  EXPECT_DOUBLE_EQ(r4.q, 1.0);
}

TEST(Quality, ReportCarriesIntermediates) {
  const QualityReport r = quality({1, 728, 729});
  EXPECT_TRUE(r.fact_a.factors.empty());
  EXPECT_EQ(r.fact_b.value(), 728);
  EXPECT_EQ(r.fact_c.value(), 729);
  EXPECT_NEAR(r.log_c / r.log_rad, r.q, 0.0);
  EXPECT_GT(r.log_rad, 0.0);
}

TEST(Quality, RejectsInvalidTriples) {
  EXPECT_THROW(quality({1, 2, 4}), ConstraintViolated);   // 1 + 2 != 4
  EXPECT_THROW(quality({2, 2, 4}), ConstraintViolated);   // gcd 2
  EXPECT_THROW(quality({0, 2, 2}), ConstraintViolated);   // nonpositive
}

TEST(Quality, PublishedQualitiesReproduced) {
  for (const PublishedRow& row : kPublished) {
    const QualityReport r = quality({row.a, row.b, row.c});
    EXPECT_NEAR(r.q, row.quality, 5e-4) << row.c;
  }
}

TEST(Quality, BaseInvariance) {
  for (const PublishedRow& row : kPublished) {
    const QualityReport r = quality({row.a, row.b, row.c});
    const Triple t{row.a, row.b, row.c};
    const double q_base2 = log2_int(t.c) / log2_int(r.rad_abc);
    EXPECT_LE(std::abs(q_base2 - r.q) / r.q, 1e-12);
  }
}

TEST(CompressionRatio, DerivedValues) {
  // log2(44) / log2(2+2+1+4)
  EXPECT_NEAR(compression_ratio({2, 3, 0, 11}), 1.7222589229, 1e-9);
  // log2(512000) / log2(3+4+1+7)
  EXPECT_NEAR(compression_ratio({5, 13, 0, 125}), 4.8544446845, 1e-9);
}

TEST(CompressionRatio, StructuralIdentity) {
  const SymbolicParams params{5, 13, 0, 125};
  const double len_bits = double(bit_length(Int(params.p)) +
                                 bit_length(Int(params.k)) +
                                 bit_length(params.n) + bit_length(params.d));
  EXPECT_NEAR(compression_ratio(params) * std::log2(len_bits),
              log2_int(build_b(5, 13, 0, 125)), 1e-9);
}

TEST(CompressionRatio, UnitWhenMagnitudeEqualsLength) {
  // b = 7 and len = 2 + 1 + 1 + 3 = 7, so the logs cancel exactly.
  EXPECT_DOUBLE_EQ(compression_ratio({2, 1, 0, 7}), 1.0);
}

TEST(Ecs, SmallestOrbit) {
  const EcsReport r = ecs(1);
  ASSERT_EQ(r.residues.size(), 2u);
  EXPECT_EQ(r.residues[0], 2);
  EXPECT_EQ(r.residues[1], 1);
  EXPECT_DOUBLE_EQ(r.mean, 1.5);
  EXPECT_DOUBLE_EQ(r.mad, 0.5);
  EXPECT_DOUBLE_EQ(r.score, 2.0);
}

TEST(Ecs, ModNine) {
  const EcsReport r = ecs(2);
  ASSERT_EQ(r.residues.size(), 6u);
  const std::set<Int> seen(r.residues.begin(), r.residues.end());
  const std::set<Int> units{1, 2, 4, 5, 7, 8};
  EXPECT_EQ(seen, units);
  EXPECT_DOUBLE_EQ(r.mean, 4.5);
  EXPECT_NEAR(r.mad, 13.0 / 6.0, 1e-12);
  EXPECT_NEAR(r.score, 6.0 / 13.0, 1e-12);
}

TEST(Ecs, OrbitCoversUnitGroup) {
  for (unsigned p = 1; p <= 6; ++p) {
    const EcsReport r = ecs(p);
    const Int m = pow3(p);
    const unsigned long phi =
        mpz_get_ui(Int(2 * pow3(p - 1)).get_mpz_t());
    ASSERT_EQ(r.residues.size(), phi);
    std::set<Int> seen(r.residues.begin(), r.residues.end());
    ASSERT_EQ(seen.size(), phi);  // no repeats: 2 is a primitive root
    for (const Int& d : seen) {
      ASSERT_GE(d, 1);
      ASSERT_LT(d, m);
      ASSERT_FALSE(mpz_divisible_ui_p(d.get_mpz_t(), 3));
    }
  }
}

TEST(Ecs, ResiduesAreTheCanonicalDs) {
  const EcsReport r = ecs(3);
  for (std::size_t i = 0; i < r.residues.size(); ++i)
    ASSERT_EQ(r.residues[i], canonical_d(3, unsigned(i + 1)));
}

TEST(ResidueFilter, DerivedExamples) {
  const ResidueFilter f1 = residue_filter(2, {1, 6});
  EXPECT_EQ(f1.members, (std::vector<Int>{1, 5, 7}));

  const ResidueFilter f2 = residue_filter(2, {3, 3});
  EXPECT_TRUE(f2.members.empty());  // canonical residue 2 is even

  const ResidueFilter f3 = residue_filter(1, {1, 2});
  EXPECT_EQ(f3.members, (std::vector<Int>{1}));
}

TEST(ResidueFilter, MembersCoincideWithSolveD) {
  for (unsigned p = 1; p <= 6; ++p) {
    const ResidueFilter f = residue_filter(p, {1, 12});
    for (unsigned k = 1; k <= 12; ++k) {
      const Int canon = canonical_d(p, k);
      const bool member =
          std::find(f.members.begin(), f.members.end(), canon) !=
          f.members.end();
      if (mpz_odd_p(canon.get_mpz_t())) {
        ASSERT_TRUE(member);
        ASSERT_EQ(solve_d(p, k), canon);  // odd lift of an odd residue
      } else {
        ASSERT_FALSE(member);
        ASSERT_EQ(solve_d(p, k), canon + pow3(p));
      }
    }
  }
}

TEST(SmoothnessReport, Examples) {
  const SmoothnessReport r1 = smoothness_report({5, 13, 0, 125}, 5);
  EXPECT_EQ(r1.m, 125);
  EXPECT_TRUE(r1.smooth);

  const SmoothnessReport r2 = smoothness_report({5, 4, 0, 91}, 5);
  EXPECT_EQ(r2.m, 91);
  EXPECT_FALSE(r2.smooth);

  const SmoothnessReport r3 = smoothness_report({5, 4, 0, 91}, 91);
  EXPECT_TRUE(r3.smooth);  // bound dominates m
}

TEST(SmoothnessReport, IncludesMultiplier) {
  const SmoothnessReport r = smoothness_report({2, 3, 1, 11}, 29);
  EXPECT_EQ(r.m, 2 * 9 * 1 + 11);
  EXPECT_TRUE(r.smooth);  // m = 29
}

TEST(Asymptotics, PublishedLogValue) {
  const AsymptoticReport r = asymptotic_diagnostics({5, 4, 0, 91});
  EXPECT_NEAR(r.log_c_identity, 6.5917, 5e-4);  // log(729)
  EXPECT_NEAR(r.log_c_identity, r.log_c, 1e-9);
  EXPECT_NEAR(r.q_true, 1.0459, 5e-4);
}

TEST(Asymptotics, UnitMultiplierReducesToPLog3) {
  // c = 9, s + 1 = 1, so the left side is exactly p*log3.
  const AsymptoticReport r = asymptotic_diagnostics({2, 4, 0, 1});
  EXPECT_DOUBLE_EQ(r.log_c_identity, 2.0 * std::log(3.0));
}

TEST(Asymptotics, EstimateTracksTrueQuality) {
  const AsymptoticReport r = asymptotic_diagnostics({5, 13, 0, 125});
  EXPECT_NEAR(r.q_true, 1.4437, 5e-4);
  EXPECT_NEAR(r.q_estimate, r.q_true, 1e-5);  // ln b vs ln c, same radical
  EXPECT_GE(r.log_rad_upper + 1e-12,
            natural_log(quality({1, 512000, 512001}).rad_abc));
}

TEST(Asymptotics, IdentityHoldsExactlyInIntegers) {
  for (unsigned p : {1u, 3u, 5u}) {
    for (unsigned k : {2u, 4u, 9u}) {
      const SymbolicParams params{p, k, 2, solve_d(p, k)};
      const Triple t = generate_triple(params);
      const DerivedS s = derive_s(t.c, p);
      ASSERT_EQ(pow3(p) * (s.s + 1), t.c);  // Eq-style identity, exact
      const AsymptoticReport r = asymptotic_diagnostics(params);
      ASSERT_NEAR(r.log_c_identity, r.log_c, 1e-9);
    }
  }
}
