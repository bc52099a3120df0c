/*
   abct - construct, score, transform and brute-force-check additive integer
   triples (a, b, c) with a + b = c.

   Subcommands: gen, sweep, quality, oracle, affine, ecs, seed. Exit codes:
   0 success, 1 environmental failure (I/O, factorization effort cap),
   2 domain or constraint violation.
*/

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "abct/affine.hpp"
#include "abct/serialize.hpp"

using namespace abct;

namespace {

constexpr int kOk = 0;
constexpr int kEnvFailure = 1;
constexpr int kDomainError = 2;

struct CommonOpts {
  std::string format = "table";
  std::string out_path;  // empty writes to stdout
  std::string log_base;  // rejected if set; quality is base-invariant
  unsigned long trial_bound = 1'000'000;
  unsigned long rho_cap = 5'000'000;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out_path,
                  "Write results to a file instead of standard output");
  cmd->add_option("--log-base", opts.log_base,
                  "Not configurable; the quality ratio is base-invariant and "
                  "is always computed with natural logarithms");
  cmd->add_option("--trial-bound", opts.trial_bound,
                  "Trial-division prime bound (clamped to 1e6)")
      ->capture_default_str();
  cmd->add_option("--rho-cap", opts.rho_cap,
                  "Iteration budget for the rho factoring stage")
      ->capture_default_str();
}

FactorConfig factor_config(const CommonOpts& opts) {
  return FactorConfig{opts.trial_bound, opts.rho_cap};
}

int reject_log_base(const CommonOpts& opts) {
  if (opts.log_base.empty()) return kOk;
  std::cerr << "abct: --log-base is fixed to the natural logarithm; the "
               "quality ratio is base-invariant, so no other base is "
               "accepted\n";
  return kDomainError;
}

// "1..8" or "4" -> inclusive range.
bool parse_range(const std::string& text, Range& out) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      out.lo = out.hi = std::stoul(text);
    } else {
      out.lo = std::stoul(text.substr(0, dots));
      out.hi = std::stoul(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    return false;
  }
  return out.lo <= out.hi;
}

std::string range_str(const Range& r) {
  return std::to_string(r.lo) + ".." + std::to_string(r.hi);
}

int emit(const CommonOpts& opts, const JsonDoc& doc) {
  std::string text;
  if (opts.format == "json") {
    text = render_json(doc);
  } else if (opts.format == "csv") {
    text = render_csv(doc.rows);
    for (const std::string& note : doc.notes) std::cerr << note << "\n";
  } else {
    text = render_table(doc.rows);
    for (const std::string& note : doc.notes) text += note + "\n";
  }
  if (opts.out_path.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream out(opts.out_path);
  if (!out) {
    std::cerr << "abct: cannot open " << opts.out_path << " for writing\n";
    return kEnvFailure;
  }
  out << text;
  out.close();
  if (!out) {
    std::cerr << "abct: write to " << opts.out_path << " failed\n";
    return kEnvFailure;
  }
  return kOk;
}

std::string fact_str(const Factorization& f) {
  if (f.factors.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    if (i) s += " * ";
    s += f.factors[i].first.get_str();
    if (f.factors[i].second > 1)
      s += "^" + std::to_string(f.factors[i].second);
  }
  return s;
}

bool congruence_holds(unsigned p, unsigned k, const Int& d) {
  const Int m = pow3(p);
  Int exp;
  mpz_powm(exp.get_mpz_t(), Int(2).get_mpz_t(), Int(k - 1).get_mpz_t(),
           m.get_mpz_t());
  return (exp * d + 1) % m == 0;
}

struct GenArgs {
  unsigned long p = 1, k = 1, n = 0;
  std::string d_text;
  CommonOpts common;
};

int run_gen(const GenArgs& args) {
  if (int rc = reject_log_base(args.common)) return rc;
  const unsigned p = unsigned(args.p), k = unsigned(args.k);
  Int d;
  std::vector<std::string> notes;
  Triple triple;
  if (!args.d_text.empty()) {
    d = Int(args.d_text);
    if (d < 1) {
      std::cerr << "abct gen: d must be a positive integer\n";
      return kDomainError;
    }
    if (!congruence_holds(p, k, d)) {
      std::cerr << "abct gen: d = " << d.get_str()
                << " violates d = -(2^(k-1))^-1 (mod 3^" << p << ")\n";
      return kDomainError;
    }
    if (mpz_even_p(d.get_mpz_t())) {
      const std::string warning =
          "warning: d = " + d.get_str() +
          " is even; the identity requires odd d, proceeding anyway";
      std::cerr << "abct gen: " << warning << "\n";
      notes.push_back(warning);
      const Int b = build_b(p, k, Int(args.n), d);
      triple = Triple{1, b, b + 1};
    } else {
      triple = generate_triple({p, k, Int(args.n), d});
    }
    notes.push_back("d rule: user-supplied");
  } else {
    d = solve_d(p, k);
    triple = generate_triple({p, k, Int(args.n), d});
    notes.push_back("d rule: odd lift (smallest positive odd representative)");
  }

  const DerivedS s = derive_s(triple.c, p);
  if (!s.even)
    notes.push_back("note: derived s = " + s.s.get_str() + " is odd");
  const QualityReport report = quality(triple, factor_config(args.common));

  ResultRow row;
  row.p = p;
  row.k = k;
  row.n = Int(args.n);
  row.d = d;
  row.a = triple.a;
  row.b = triple.b;
  row.c = triple.c;
  row.s = s.s;
  row.rad_abc = report.rad_abc;
  row.quality = report.q;

  JsonDoc doc;
  doc.command = "gen";
  doc.context = {{"p", std::to_string(p)},
                 {"k", std::to_string(k)},
                 {"n", std::to_string(args.n)},
                 {"d", d.get_str()}};
  doc.rows = {row};
  doc.notes = std::move(notes);
  return emit(args.common, doc);
}

struct SweepArgs {
  std::string p_text = "1..1", k_text = "1..1", n_text = "0..0";
  double floor = 0.0;
  unsigned long top = 0;  // 0 means everything
  unsigned threads = 1;
  CommonOpts common;
};

int run_sweep(const SweepArgs& args) {
  if (int rc = reject_log_base(args.common)) return rc;
  SweepGrid grid;
  if (!parse_range(args.p_text, grid.p_range) ||
      !parse_range(args.k_text, grid.k_range) ||
      !parse_range(args.n_text, grid.n_range)) {
    std::cerr << "abct sweep: ranges must look like 4 or 1..8\n";
    return kDomainError;
  }
  grid.quality_floor = args.floor;
  grid.factor_config = factor_config(args.common);
  grid.threads = args.threads;

  const SweepResult out = sweep(grid);
  const std::size_t points =
      grid.p_range.size() * grid.k_range.size() * grid.n_range.size();
  std::vector<ScoredTriple> ranked =
      rank(out.results, args.top ? args.top : out.results.size());

  JsonDoc doc;
  doc.command = "sweep";
  doc.grid_context = true;
  doc.context = {{"p", range_str(grid.p_range)},
                 {"k", range_str(grid.k_range)},
                 {"n", range_str(grid.n_range)},
                 {"floor", format_quality(grid.quality_floor)}};
  for (const ScoredTriple& st : ranked) doc.rows.push_back(to_row(st));
  doc.skipped = out.skipped;

  const int rc = emit(args.common, doc);
  std::cerr << "abct sweep: " << points << " grid points, " << ranked.size()
            << " results at floor " << args.floor << ", " << out.skipped.size()
            << " skipped\n";
  return rc;
}

struct QualityArgs {
  std::string a, b, c;
  CommonOpts common;
};

int run_quality(const QualityArgs& args) {
  if (int rc = reject_log_base(args.common)) return rc;
  const Triple t{Int(args.a), Int(args.b), Int(args.c)};
  const QualityReport report = quality(t, factor_config(args.common));

  ResultRow row;
  row.a = t.a;
  row.b = t.b;
  row.c = t.c;
  row.rad_abc = report.rad_abc;
  row.quality = report.q;

  JsonDoc doc;
  doc.command = "quality";
  doc.context = {
      {"a", t.a.get_str()}, {"b", t.b.get_str()}, {"c", t.c.get_str()}};
  doc.rows = {row};
  doc.notes = {"a = " + fact_str(report.fact_a),
               "b = " + fact_str(report.fact_b),
               "c = " + fact_str(report.fact_c)};
  return emit(args.common, doc);
}

struct OracleArgs {
  unsigned long bound = 100;
  double floor = 1.0;
  CommonOpts common;
};

int run_oracle(const OracleArgs& args) {
  if (int rc = reject_log_base(args.common)) return rc;
  const OracleResult out = oracle_enumerate(args.bound, args.floor);

  JsonDoc doc;
  doc.command = "oracle";
  doc.context = {{"bound", std::to_string(args.bound)},
                 {"floor", format_quality(args.floor)}};
  for (const OracleHit& h : out.hits) doc.rows.push_back(to_row(h));
  const int rc = emit(args.common, doc);
  std::cerr << "abct oracle: " << out.hits.size() << " hits with c <= "
            << args.bound << " and q >= " << args.floor << "\n";
  return rc;
}

struct AffineArgs {
  std::string alpha = "1", gamma = "0", delta = "0", beta = "0";
  std::string a, b, c;
  CommonOpts common;
};

int run_affine(const AffineArgs& args) {
  if (int rc = reject_log_base(args.common)) return rc;
  const AffineMap map{Int(args.alpha), Int(args.gamma), Int(args.delta),
                      Int(args.beta)};
  const Triple t{Int(args.a), Int(args.b), Int(args.c)};
  const RadicalBoundReport report =
      radical_bound(map, t, factor_config(args.common));

  ResultRow row;
  row.a = report.image.a;
  row.b = report.image.b;
  row.c = report.image.c;
  row.rad_abc = report.image_rad;
  row.quality = report.image_q;

  JsonDoc doc;
  doc.command = "affine";
  doc.context = {{"alpha", map.alpha.get_str()},
                 {"gamma", map.gamma.get_str()},
                 {"delta", map.delta.get_str()},
                 {"beta", map.beta.get_str()},
                 {"a", t.a.get_str()},
                 {"b", t.b.get_str()},
                 {"c", t.c.get_str()}};
  doc.rows = {row};
  doc.notes = {
      "radical bound = " + format_quality(report.bound),
      "image quality = " + format_quality(report.image_q),
      std::string("hypotheses gcd(alpha, rad(abc)) = 1: ") +
          (report.hypotheses_met ? "met" : "not met (gcd = " +
           report.alpha_rad_gcd.get_str() + ")"),
      std::string("bound satisfied: ") +
          (report.bound_satisfied ? "yes" : "no"),
      std::string("image coprime: ") + (report.image_coprime ? "yes" : "no"),
  };
  nlohmann::json extra;
  extra["bound"] = report.bound;
  extra["image_q"] = report.image_q;
  extra["hypotheses_met"] = report.hypotheses_met;
  extra["bound_satisfied"] = report.bound_satisfied;
  extra["image_coprime"] = report.image_coprime;
  extra["rad_abc"] = report.rad_abc.get_str();
  extra["rad_scale_shifts"] = report.rad_scale_shifts.get_str();
  doc.extra_key = "affine";
  doc.extra_json = extra.dump();
  return emit(args.common, doc);
}

struct EcsArgs {
  unsigned long p = 1;
  CommonOpts common;
};

int run_ecs(const EcsArgs& args) {
  if (int rc = reject_log_base(args.common)) return rc;
  const EcsReport report = ecs(unsigned(args.p));

  std::ostringstream stats;
  stats << "p," << "phi," << "mean," << "mad," << "score\n"
        << report.p << "," << report.residues.size() << "," << report.mean
        << "," << report.mad << "," << report.score << "\n";

  if (args.common.format == "json") {
    nlohmann::json extra;
    extra["p"] = report.p;
    extra["phi"] = report.residues.size();
    extra["mean"] = report.mean;
    extra["mad"] = report.mad;
    extra["score"] = report.score;
    nlohmann::json residues = nlohmann::json::array();
    for (const Int& d : report.residues) residues.push_back(d.get_str());
    extra["residues"] = std::move(residues);

    JsonDoc doc;
    doc.command = "ecs";
    doc.context = {{"p", std::to_string(args.p)}};
    doc.extra_key = "ecs";
    doc.extra_json = extra.dump();
    return emit(args.common, doc);
  }

  std::ostringstream text;
  if (args.common.format == "csv") {
    text << stats.str();
  } else {
    text << "ecs for p = " << report.p
         << " (phi = " << report.residues.size() << ")\n"
         << "mean  = " << report.mean << "\n"
         << "mad   = " << report.mad << "\n"
         << "score = " << report.score << "\n"
         << "residues:";
    const std::size_t shown = std::min<std::size_t>(report.residues.size(), 24);
    for (std::size_t i = 0; i < shown; ++i)
      text << " " << report.residues[i].get_str();
    if (shown < report.residues.size()) text << " ...";
    text << "\n";
  }
  CommonOpts opts = args.common;
  const std::string rendered = text.str();
  if (opts.out_path.empty()) {
    std::cout << rendered;
    return kOk;
  }
  std::ofstream out(opts.out_path);
  if (!out) {
    std::cerr << "abct: cannot open " << opts.out_path << " for writing\n";
    return kEnvFailure;
  }
  out << rendered;
  return kOk;
}

struct SeedArgs {
  unsigned long p = 1, k = 1, n = 0;
  CommonOpts common;
};

int run_seed(const SeedArgs& args) {
  if (int rc = reject_log_base(args.common)) return rc;
  const unsigned p = unsigned(args.p), k = unsigned(args.k);
  const Triple triple = prng_seed(p, k, Int(args.n));
  const Int d = canonical_d(p, k);
  const DerivedS s = derive_s(triple.c, p);
  const QualityReport report = quality(triple, factor_config(args.common));

  ResultRow row;
  row.p = p;
  row.k = k;
  row.n = Int(args.n);
  row.d = d;
  row.a = triple.a;
  row.b = triple.b;
  row.c = triple.c;
  row.s = s.s;
  row.rad_abc = report.rad_abc;
  row.quality = report.q;

  JsonDoc doc;
  doc.command = "seed";
  doc.context = {{"p", std::to_string(p)},
                 {"k", std::to_string(k)},
                 {"n", std::to_string(args.n)}};
  doc.rows = {row};
  doc.notes = {"d rule: canonical residue (-inv mod 3^p), odd lift not applied",
               "seed is deterministic, not cryptographically secure"};
  if (mpz_even_p(d.get_mpz_t()))
    doc.notes.push_back("note: canonical d = " + d.get_str() +
                        " is even; the odd-d identity invariants do not hold");
  return emit(args.common, doc);
}

int dispatch(int argc, char** argv) {
  CLI::App app{"symbolic abc-triple construction, scoring and search"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kProjectVersion);

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand(
      "gen", "Construct one triple from (p, k, n) and score it");
  gen->add_option("--p", gen_args.p, "Exponent of 3")
      ->required()
      ->check(CLI::Range(1ul, 10000ul));
  gen->add_option("--k", gen_args.k, "Exponent index of 2")
      ->required()
      ->check(CLI::Range(1ul, 100000ul));
  gen->add_option("--n", gen_args.n, "Multiplier")->capture_default_str();
  gen->add_option("--d", gen_args.d_text,
                  "Override d (must satisfy the congruence)");
  add_common(gen, gen_args.common);

  SweepArgs sweep_args;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Sweep a (p, k, n) grid and rank results by quality");
  sweep_cmd->add_option("--p", sweep_args.p_text, "p range, e.g. 1..8")
      ->required();
  sweep_cmd->add_option("--k", sweep_args.k_text, "k range, e.g. 1..13")
      ->required();
  sweep_cmd->add_option("--n", sweep_args.n_text, "n range")
      ->capture_default_str();
  sweep_cmd->add_option("--floor", sweep_args.floor, "Quality floor")
      ->capture_default_str();
  sweep_cmd->add_option("--top", sweep_args.top, "Keep only the top M rows");
  sweep_cmd->add_option("--threads", sweep_args.threads, "Worker threads")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  add_common(sweep_cmd, sweep_args.common);

  QualityArgs quality_args;
  CLI::App* quality_cmd =
      app.add_subcommand("quality", "Score an explicit triple a b c");
  quality_cmd->add_option("a", quality_args.a)->required();
  quality_cmd->add_option("b", quality_args.b)->required();
  quality_cmd->add_option("c", quality_args.c)->required();
  add_common(quality_cmd, quality_args.common);

  OracleArgs oracle_args;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "Exhaustive brute-force enumeration up to a bound");
  oracle_cmd->add_option("--bound", oracle_args.bound, "Largest c")
      ->required()
      ->check(CLI::Range(2ul, 50'000'000ul));
  oracle_cmd->add_option("--floor", oracle_args.floor, "Quality floor")
      ->capture_default_str();
  add_common(oracle_cmd, oracle_args.common);

  AffineArgs affine_args;
  CLI::App* affine_cmd = app.add_subcommand(
      "affine", "Apply an additive affine map and report the radical bound");
  affine_cmd->add_option("--alpha", affine_args.alpha, "Scale, >= 1")
      ->capture_default_str();
  affine_cmd->add_option("--gamma", affine_args.gamma, "Shift on a")
      ->capture_default_str();
  affine_cmd->add_option("--delta", affine_args.delta, "Shift on b")
      ->capture_default_str();
  affine_cmd->add_option("--beta", affine_args.beta, "Shift on c")
      ->capture_default_str();
  affine_cmd->add_option("a", affine_args.a)->required();
  affine_cmd->add_option("b", affine_args.b)->required();
  affine_cmd->add_option("c", affine_args.c)->required();
  add_common(affine_cmd, affine_args.common);

  EcsArgs ecs_args;
  CLI::App* ecs_cmd = app.add_subcommand(
      "ecs", "Entropy confidence score of the inverse orbit mod 3^p");
  ecs_cmd->add_option("--p", ecs_args.p, "Exponent of 3")
      ->required()
      ->check(CLI::Range(1ul, 16ul));
  add_common(ecs_cmd, ecs_args.common);

  SeedArgs seed_args;
  CLI::App* seed_cmd = app.add_subcommand(
      "seed", "Deterministic seed triple via the literal seeding routine");
  seed_cmd->add_option("--p", seed_args.p, "Exponent of 3")
      ->required()
      ->check(CLI::Range(1ul, 10000ul));
  seed_cmd->add_option("--k", seed_args.k, "Exponent index of 2")
      ->required()
      ->check(CLI::Range(1ul, 100000ul));
  seed_cmd->add_option("--n", seed_args.n, "Multiplier")->capture_default_str();
  add_common(seed_cmd, seed_args.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exits 0
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kDomainError;
  }

  if (gen->parsed()) return run_gen(gen_args);
  if (sweep_cmd->parsed()) return run_sweep(sweep_args);
  if (quality_cmd->parsed()) return run_quality(quality_args);
  if (oracle_cmd->parsed()) return run_oracle(oracle_args);
  if (affine_cmd->parsed()) return run_affine(affine_args);
  if (ecs_cmd->parsed()) return run_ecs(ecs_args);
  if (seed_cmd->parsed()) return run_seed(seed_args);
  return kDomainError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const FactorizationExhausted& e) {
    std::cerr << "abct: " << e.what() << "\n";
    return kEnvFailure;
  } catch (const Error& e) {
    std::cerr << "abct: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "abct: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    std::cerr << "abct: " << e.what() << "\n";
    return kEnvFailure;
  }
}
