#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "richwords/bounds.hpp"
#include "richwords/census.hpp"
#include "richwords/eertree.hpp"
#include "richwords/richfact.hpp"
#include "richwords/version.hpp"
#include "richwords/word.hpp"

namespace rw = richwords;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

unsigned default_precision_bits() {
  if (const char* env = std::getenv("RICHWORDS_PRECISION")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v >= rw::bounds::kMinPrecisionBits) {
      return static_cast<unsigned>(v);
    }
    std::cerr << "richwords: ignoring invalid RICHWORDS_PRECISION=" << env << "\n";
  }
  return rw::bounds::kDefaultPrecisionBits;
}

std::string real_str(const rw::bounds::Real& v) { return v.str(17); }

int cmd_check(const std::string& text) {
  rw::SymbolTable table(text);
  const rw::Word& w = table.word();
  rw::Eertree tree(std::max(1u, table.alphabet_size()));
  bool all_created = true;
  for (rw::Symbol s : w) all_created &= tree.push(s).created_new_node;
  const bool rich = all_created;
  std::cout << "word=" << text << "\n";
  std::cout << "rich=" << (rich ? "true" : "false") << "\n";
  std::cout << "palindromes=" << tree.distinct_palindrome_count() + 1 << "\n";
  if (w.empty()) {
    std::cout << "unioccurrent=n/a\n";
  } else {
    std::cout << "unioccurrent="
              << (rw::longest_pal_suffix_unioccurrent(w) ? "true" : "false") << "\n";
  }
  return rich ? kExitOk : kExitCheckFailed;
}

int cmd_ups(const std::string& text) {
  rw::SymbolTable table(text);
  if (table.word().empty()) {
    std::cerr << "richwords: cannot factorize the empty word\n";
    return kExitUsage;
  }
  try {
    const rw::UpsFactorization f = rw::ups_factorize(table.word());
    for (std::size_t i = 0; i < f.size(); ++i) {
      std::cout << table.render(f.factor(i)) << "\n";
    }
    std::cout << "LUF=" << f.size() << "\n";
    return kExitOk;
  } catch (const rw::NotRichError& e) {
    std::cerr << "richwords: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}

int cmd_pl(const std::string& text) {
  rw::SymbolTable table(text);
  std::cout << "PL=" << rw::palindromic_length(table.word()) << "\n";
  return kExitOk;
}

struct CensusArgs {
  unsigned q = 2;
  unsigned n_max = 8;
  double d = 0.5;
  std::string out;
  std::string format = "csv";
  unsigned workers = 1;
  bool canonical = false;
  unsigned pl_max_n = 16;
  unsigned checkpoint_depth = 7;
  unsigned precision = rw::bounds::kDefaultPrecisionBits;
};

int cmd_census(const CensusArgs& a) {
  const auto params = rw::bounds::make_params(a.q, a.d, a.precision);
  rw::census::CensusOptions opts;
  opts.workers = a.workers;
  opts.canonical = a.canonical;
  opts.pl_max_n = a.pl_max_n;
  opts.checkpoint_depth = a.checkpoint_depth;
  std::cerr << "census: q=" << a.q << " n_max=" << a.n_max << " d=" << a.d
            << " workers=" << a.workers << (a.canonical ? " canonical" : "") << "\n";
  const auto report = rw::census::run_census(a.q, a.n_max, params, opts);
  std::cerr << "census: done in " << report.wall_time_seconds << "s\n";
  const auto format =
      a.format == "json" ? rw::census::ReportFormat::Json : rw::census::ReportFormat::Csv;
  if (a.out.empty()) {
    std::cout << (format == rw::census::ReportFormat::Csv ? rw::census::render_csv(report)
                                                          : rw::census::render_json(report));
  } else {
    rw::census::write_report(report, a.out, format);
    std::cerr << "census: wrote " << a.out << "\n";
  }
  return kExitOk;
}

struct BoundsArgs {
  unsigned q = 2;
  double d = 0.5;
  std::uint64_t n = 1;
  unsigned precision = rw::bounds::kDefaultPrecisionBits;
};

int cmd_bounds(const BoundsArgs& a) {
  namespace rb = rw::bounds;
  const auto p = rb::make_params(a.q, a.d, a.precision);
  const bool growth_active = p.c1 == p.c1_candidate_growth;
  std::cout << "q=" << a.q << " d=" << a.d << " precision_bits=" << a.precision << "\n";
  std::cout << "delta=" << real_str(p.delta) << "\n";
  std::cout << "c2=" << real_str(p.c2) << "\n";
  std::cout << "alpha=" << real_str(p.alpha) << "\n";
  std::cout << "beta=" << real_str(p.beta) << "\n";
  std::cout << "c1_growth_candidate=" << real_str(p.c1_candidate_growth)
            << (growth_active ? " (active)" : "") << "\n";
  std::cout << "c1_unit_candidate=" << real_str(p.c1_candidate_unit)
            << (growth_active ? "" : " (active)") << "\n";
  std::cout << "c1=" << real_str(p.c1) << "\n";
  std::cout << "gamma=" << real_str(p.gamma) << "\n";
  std::cout << "n=" << a.n << "\n";
  std::cout << "sigma=" << real_str(rb::sigma(a.n, p)) << "\n";
  std::cout << "t_min=" << rb::luf_bound_t_min(a.n, p) << "\n";
  std::cout << "luf_bound=" << real_str(rb::luf_bound(a.n, p)) << "\n";
  std::cout << "fc_bound_raw=" << real_str(rb::fc_bound_raw(a.n, a.q, a.precision)) << "\n";
  std::cout << "fc_bound_simple=" << real_str(rb::fc_bound_simple(a.n, p)) << "\n";
  std::cout << "main_theorem_bound=" << real_str(rb::main_theorem_bound(a.n, p))
            << "  (mu=e^gamma, pi=d*alpha)\n";
  return kExitOk;
}

struct VerifyArgs {
  unsigned q = 2;
  double d = 0.5;
  std::uint64_t seed = 12345;
  std::vector<std::uint64_t> n_grid = {1, 10, 1000, 1000000, 1000000000, 1000000000000ull};
  std::vector<std::uint64_t> k_grid = {1, 2, 5, 10, 100, 1000};
  unsigned instances = 10000;
  unsigned precision = rw::bounds::kDefaultPrecisionBits;
};

int cmd_verify(const VerifyArgs& a) {
  namespace rb = rw::bounds;
  const auto p = rb::make_params(a.q, a.d, a.precision);
  int failures = 0;
  int skipped = 0;
  int checks = 0;
  const rb::Real tol = ldexp(rb::Real(1), -static_cast<int>(a.precision / 2));

  for (const std::uint64_t n : a.n_grid) {
    const auto c = rb::check_sigma_identity(n, p);
    const bool ok = c.relative_error < tol;
    ++checks;
    failures += ok ? 0 : 1;
    std::cout << "sigma-identity n=" << n << " rel_err=" << c.relative_error.str(3)
              << (ok ? " PASS" : " FAIL") << "\n";
  }
  for (const std::uint64_t n : a.n_grid) {
    const bool ok = rb::check_sum_upper_bound(n, p);
    ++checks;
    failures += ok ? 0 : 1;
    std::cout << "sum-upper n=" << n << (ok ? " PASS" : " FAIL") << "\n";
  }
  for (const std::uint64_t k : a.k_grid) {
    if (k < 2) {
      ++skipped;
      std::cout << "sum-lower k=" << k << " SKIP (domain: k >= 2 required)\n";
      continue;
    }
    const bool ok = rb::check_sum_lower_bound(k, p);
    ++checks;
    failures += ok ? 0 : 1;
    std::cout << "sum-lower k=" << k << (ok ? " PASS" : " FAIL") << "\n";
  }

  // seeded random hypothesis-satisfying instances of the weighted-sums lemma
  std::mt19937_64 rng(a.seed);
  const auto draw = [&rng](std::uint64_t lo, std::uint64_t hi) {
    return lo + rng() % (hi - lo + 1);
  };
  unsigned holds = 0;
  for (unsigned i = 0; i < a.instances; ++i) {
    std::vector<std::uint64_t> omega, omegabar;
    std::uint64_t t = 0, tbar = 0;
    for (;;) {
      t = draw(1, 49);
      tbar = draw(t + 1, 50);
      omega.assign(t, 0);
      omegabar.assign(tbar, 0);
      std::uint64_t sum = 0, sum_bar = 0;
      for (std::size_t j = 0; j < t; ++j) {
        omega[j] = draw(1, 1000);
        omegabar[j] = draw(1, omega[j]);
        sum += omega[j];
        sum_bar += omegabar[j];
      }
      for (std::size_t j = t; j < tbar; ++j) {
        omegabar[j] = draw(1, 1000);
        sum_bar += omegabar[j];
      }
      if (sum_bar > sum) break;
    }
    holds += rb::check_weighted_sums_lemma(t, tbar, omega, omegabar) ? 1 : 0;
  }
  ++checks;
  const bool ws_ok = holds == a.instances;
  failures += ws_ok ? 0 : 1;
  std::cout << "weighted-sums instances=" << a.instances << " seed=" << a.seed
            << " held=" << holds << (ws_ok ? " PASS" : " FAIL") << "\n";

  std::cout << "RESULT: " << (failures == 0 ? "PASS" : "FAIL") << " (" << checks
            << " checks, " << skipped << " skipped)\n";
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rich word analysis: richness, UPS-factorization, census, bound verification"};
  app.set_version_flag("--version", rw::kToolVersion);
  app.require_subcommand(1);

  const auto open01 = CLI::Validator(
      [](std::string& s) -> std::string {
        try {
          const double v = std::stod(s);
          if (v > 0.0 && v < 1.0) return {};
        } catch (...) {
        }
        return "value must lie in the open interval (0,1)";
      },
      "FLOAT in (0,1)");
  const unsigned precision_default = default_precision_bits();

  std::string word_arg;
  auto* check = app.add_subcommand("check", "richness and unioccurrence report for a word");
  check->add_option("word", word_arg, "word over a-z (may be empty)");

  auto* ups = app.add_subcommand("ups", "UPS-factorization and LUF of a rich word");
  ups->add_option("word", word_arg, "word over a-z")->required();

  auto* pl = app.add_subcommand("pl", "palindromic length of a word");
  pl->add_option("word", word_arg, "word over a-z (may be empty)");

  CensusArgs census_args;
  census_args.precision = precision_default;
  auto* census = app.add_subcommand("census", "exhaustive rich-word census");
  census->add_option("--q", census_args.q, "alphabet size")->required()->check(CLI::Range(1u, 26u));
  census->add_option("--n-max", census_args.n_max, "maximum word length")
      ->required()
      ->check(CLI::PositiveNumber);
  census->add_option("--d", census_args.d, "free bound parameter in (0,1)")->check(open01);
  census->add_option("--out", census_args.out, "output path (stdout when omitted)");
  census->add_option("--format", census_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  census->add_option("--workers", census_args.workers, "worker threads (0 = hardware)");
  census->add_flag("--canonical", census_args.canonical,
                   "enumerate letter-permutation classes and scale counts");
  census->add_option("--pl-max-n", census_args.pl_max_n, "compute PL only up to this length");
  census->add_option("--checkpoint-depth", census_args.checkpoint_depth,
                     "subtree distribution depth");
  census->add_option("--precision", census_args.precision, "bound precision in bits");

  BoundsArgs bounds_args;
  bounds_args.precision = precision_default;
  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate all derived constants and bounds");
  bounds_cmd->add_option("--q", bounds_args.q, "alphabet size")->required()->check(CLI::PositiveNumber);
  bounds_cmd->add_option("--d", bounds_args.d, "free bound parameter in (0,1)")
      ->required()
      ->check(open01);
  bounds_cmd->add_option("--n", bounds_args.n, "word length to evaluate at")
      ->required()
      ->check(CLI::PositiveNumber);
  bounds_cmd->add_option("--precision", bounds_args.precision, "precision in bits");

  VerifyArgs verify_args;
  verify_args.precision = precision_default;
  auto* verify = app.add_subcommand("verify", "numeric verification suite for the bound lemmas");
  verify->add_option("--q", verify_args.q, "alphabet size")->check(CLI::PositiveNumber);
  verify->add_option("--d", verify_args.d, "free bound parameter in (0,1)")->check(open01);
  verify->add_option("--seed", verify_args.seed, "seed for the weighted-sums instances");
  verify->add_option("--grid", verify_args.n_grid, "n grid")->delimiter(',');
  verify->add_option("--k-grid", verify_args.k_grid, "k grid for the lower-bound check")
      ->delimiter(',');
  verify->add_option("--instances", verify_args.instances, "number of random instances");
  verify->add_option("--precision", verify_args.precision, "precision in bits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(check)) return cmd_check(word_arg);
    if (app.got_subcommand(ups)) return cmd_ups(word_arg);
    if (app.got_subcommand(pl)) return cmd_pl(word_arg);
    if (app.got_subcommand(census)) return cmd_census(census_args);
    if (app.got_subcommand(bounds_cmd)) return cmd_bounds(bounds_args);
    if (app.got_subcommand(verify)) return cmd_verify(verify_args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "richwords: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "richwords: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
