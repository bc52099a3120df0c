#ifndef ABCT_SEARCH_HPP
#define ABCT_SEARCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "abct/metrics.hpp"
#include "abct/symbolic.hpp"

namespace abct {

// Sweep over (p, k, n); per grid point d is the minimal odd lift solve_d(p,
// k). Higher lifts d + 2*3^p*j are the same b values reached by raising n,
// so sweeping them would double count.
struct SweepGrid {
  Range p_range{1, 1};
  Range k_range{1, 1};
  Range n_range{0, 0};
  double quality_floor = 0.0;
  FactorConfig factor_config{};
  unsigned threads = 1;  // grid points are independent; output order is
                         // canonical (p, k, n) regardless
};

struct ScoredTriple {
  SymbolicParams params;
  Triple triple;
  QualityReport report;
};

// Grid point whose quality computation hit the factorization effort cap.
struct SkippedEntry {
  SymbolicParams params;
  std::string reason;
};

struct SweepResult {
  std::vector<ScoredTriple> results;  // q >= quality_floor, (p, k, n) order
  std::vector<SkippedEntry> skipped;
};

SweepResult sweep(const SweepGrid& grid);

// Sort by q descending, ties broken by smaller c then smaller k; truncate to
// top_m.
std::vector<ScoredTriple> rank(std::vector<ScoredTriple> results,
                               std::size_t top_m);

// One brute-force hit. rad_abc = rad(a)*rad(b)*rad(c), exact since the
// components are pairwise coprime.
struct OracleHit {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;
  std::uint64_t rad_abc = 0;
  double q = 0.0;
};

struct OracleResult {
  std::uint64_t bound = 0;
  double quality_floor = 0.0;
  std::vector<OracleHit> hits;  // sorted by (c, a); exhaustive for a <= b,
                                // gcd(a, b) = 1, c <= bound, q >= floor
};

// Exhaustive enumeration, fully independent of the bigmath/metrics path:
// smallest-prime-factor sieve for radicals, std::gcd for coprimality,
// std::log for quality.
OracleResult oracle_enumerate(std::uint64_t bound, double quality_floor);

struct CrossValidation {
  struct Match {
    Triple triple;
    double sweep_q = 0.0;
    double oracle_q = 0.0;
  };

  std::vector<Match> matches;     // unique sweep triples found in the oracle
  std::vector<Match> mismatches;  // missing from oracle or |dq| > tolerance
  std::vector<OracleHit> unreachable_hits;   // a != 1 or 3 does not divide c
  std::vector<OracleHit> reachable_unswept;  // identity-compatible hits the
                                             // grid/floor did not produce
  bool all_matched() const { return mismatches.empty(); }
};

// Every sweep triple with c <= oracle bound must reappear among the oracle
// hits with |dq| <= tolerance; callers must run the oracle at a floor no
// higher than the sweep's.
CrossValidation cross_validate(const std::vector<ScoredTriple>& sweep_out,
                               const OracleResult& oracle_out,
                               double tolerance = 1e-9);

}  // namespace abct

#endif  // ABCT_SEARCH_HPP
