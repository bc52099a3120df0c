/*
   Grid sweep over (p, k, n) with quality scoring, plus the brute-force
   enumeration oracle and the sweep-vs-oracle cross check. The oracle path
   shares no arithmetic with the symbolic/metrics path - that independence
   is the point of it.
*/

#include "abct/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <variant>

namespace abct {

namespace {

struct GridPoint {
  unsigned long p, k, n;
};

std::vector<GridPoint> enumerate_grid(const SweepGrid& grid) {
  std::vector<GridPoint> points;
  points.reserve(grid.p_range.size() * grid.k_range.size() *
                 grid.n_range.size());
  for (unsigned long p = grid.p_range.lo; p <= grid.p_range.hi; ++p)
    for (unsigned long k = grid.k_range.lo; k <= grid.k_range.hi; ++k)
      for (unsigned long n = grid.n_range.lo; n <= grid.n_range.hi; ++n)
        points.push_back({p, k, n});
  return points;
}

// Outcome of one grid point: kept, dropped by the floor, or skipped.
using PointOutcome = std::variant<std::monostate, ScoredTriple, SkippedEntry>;

PointOutcome evaluate_point(const GridPoint& pt, const SweepGrid& grid) {
  SymbolicParams params;
  params.p = unsigned(pt.p);
  params.k = unsigned(pt.k);
  params.n = Int(pt.n);
  params.d = solve_d(params.p, params.k);
  Triple t = generate_triple(params);
  try {
    QualityReport report = quality(t, grid.factor_config);
    if (report.q < grid.quality_floor) return std::monostate{};
    return ScoredTriple{std::move(params), std::move(t), std::move(report)};
  } catch (const FactorizationExhausted& e) {
    return SkippedEntry{std::move(params), e.what()};
  }
}

void validate_grid(const SweepGrid& grid) {
  if (grid.p_range.empty() || grid.k_range.empty() || grid.n_range.empty())
    throw std::invalid_argument("sweep: all ranges must be nonempty");
  if (grid.p_range.lo < 1 || grid.k_range.lo < 1)
    throw std::invalid_argument("sweep: p and k ranges start at 1");
  if (!(grid.quality_floor >= 0.0))
    throw std::invalid_argument("sweep: quality floor must be >= 0");
}

}  // namespace

SweepResult sweep(const SweepGrid& grid) {
  validate_grid(grid);
  const std::vector<GridPoint> points = enumerate_grid(grid);
  std::vector<PointOutcome> outcomes(points.size());

  const unsigned workers = std::max(
      1u, std::min(grid.threads, unsigned(std::min<std::size_t>(
                                     points.size(), 1024))));
  if (workers == 1) {
    for (std::size_t i = 0; i < points.size(); ++i)
      outcomes[i] = evaluate_point(points[i], grid);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < points.size();
             i = next.fetch_add(1))
          outcomes[i] = evaluate_point(points[i], grid);
      });
    }
    for (std::thread& th : pool) th.join();
  }

  // Slots keep grid order, so the merge is canonical no matter who ran what.
  SweepResult out;
  for (PointOutcome& o : outcomes) {
    if (auto* hit = std::get_if<ScoredTriple>(&o))
      out.results.push_back(std::move(*hit));
    else if (auto* skip = std::get_if<SkippedEntry>(&o))
      out.skipped.push_back(std::move(*skip));
  }
  return out;
}

std::vector<ScoredTriple> rank(std::vector<ScoredTriple> results,
                               std::size_t top_m) {
  std::stable_sort(results.begin(), results.end(),
                   [](const ScoredTriple& x, const ScoredTriple& y) {
                     if (x.report.q != y.report.q)
                       return x.report.q > y.report.q;
                     if (x.triple.c != y.triple.c) return x.triple.c < y.triple.c;
                     return x.params.k < y.params.k;
                   });
  if (results.size() > top_m) results.resize(top_m);
  return results;
}

OracleResult oracle_enumerate(std::uint64_t bound, double quality_floor) {
  if (bound < 2)
    throw std::invalid_argument("oracle_enumerate: bound must be >= 2");
  if (bound > 50'000'000)
    throw std::invalid_argument("oracle_enumerate: bound beyond desk scale");

  // Smallest-prime-factor sieve, then radicals by divide-out.
  std::vector<std::uint32_t> spf(bound + 1, 0);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t j = i; j <= bound; j += i)
      if (spf[j] == 0) spf[j] = std::uint32_t(i);
  }
  std::vector<std::uint64_t> rad(bound + 1, 1);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    std::uint64_t n = i, r = 1, last = 0;
    while (n > 1) {
      const std::uint64_t p = spf[n];
      if (p != last) r *= p;
      last = p;
      n /= p;
    }
    rad[i] = r;
  }

  OracleResult out;
  out.bound = bound;
  out.quality_floor = quality_floor;
  for (std::uint64_t c = 2; c <= bound; ++c) {
    const double log_c = std::log(double(c));
    for (std::uint64_t a = 1; 2 * a <= c; ++a) {
      const std::uint64_t b = c - a;
      if (std::gcd(a, b) != 1) continue;
      const std::uint64_t rad_abc = rad[a] * rad[b] * rad[c];
      const double q = log_c / std::log(double(rad_abc));
      if (q >= quality_floor)
        out.hits.push_back({a, b, c, rad_abc, q});
    }
  }
  return out;  // (c, a) order falls straight out of the loops
}

CrossValidation cross_validate(const std::vector<ScoredTriple>& sweep_out,
                               const OracleResult& oracle_out,
                               double tolerance) {
  using Key = std::array<std::uint64_t, 3>;
  std::map<Key, const OracleHit*> oracle_index;
  for (const OracleHit& h : oracle_out.hits)
    oracle_index[{h.a, h.b, h.c}] = &h;

  CrossValidation cv;
  std::map<Key, bool> seen_sweep;  // key -> matched
  for (const ScoredTriple& st : sweep_out) {
    if (st.triple.c > Int(oracle_out.bound)) continue;
    const Key key{mpz_get_ui(st.triple.a.get_mpz_t()),
                  mpz_get_ui(st.triple.b.get_mpz_t()),
                  mpz_get_ui(st.triple.c.get_mpz_t())};
    if (seen_sweep.count(key)) continue;  // same triple from another p
    auto it = oracle_index.find(key);
    if (it == oracle_index.end()) {
      cv.mismatches.push_back({st.triple, st.report.q,
                               std::numeric_limits<double>::quiet_NaN()});
      seen_sweep[key] = false;
      continue;
    }
    CrossValidation::Match m{st.triple, st.report.q, it->second->q};
    if (std::abs(m.sweep_q - m.oracle_q) <= tolerance) {
      cv.matches.push_back(std::move(m));
      seen_sweep[key] = true;
    } else {
      cv.mismatches.push_back(std::move(m));
      seen_sweep[key] = false;
    }
  }

  for (const OracleHit& h : oracle_out.hits) {
    if (seen_sweep.count({h.a, h.b, h.c})) continue;
    if (h.a != 1 || h.c % 3 != 0)
      cv.unreachable_hits.push_back(h);  // identity fixes a = 1 and 3^p | c
    else
      cv.reachable_unswept.push_back(h);
  }
  return cv;
}

}  // namespace abct
