#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "svbound/classical_bounds.hpp"
#include "svbound/errors.hpp"
#include "svbound/iterate.hpp"
#include "svbound/report.hpp"
#include "svbound/svd_oracle.hpp"

namespace svbound::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

MatrixFormat resolve_format(const CliRequest& request) {
  if (request.format) return *request.format;
  const std::string& path = *request.input_path;
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) return MatrixFormat::csv_complex;
  return MatrixFormat::matrix_market;
}

ComplexMatrix load_matrix(const CliRequest& request, std::istream& in) {
  if (!request.input_path) throw UsageError("an input file is required");
  const MatrixFormat format = resolve_format(request);
  if (*request.input_path == "-") return parse_matrix(in, format);
  std::ifstream file(*request.input_path);
  if (!file) throw UsageError("cannot open '" + *request.input_path + "'");
  return parse_matrix(file, format);
}

struct Configs {
  IterationConfig lower = default_config(Direction::lower);
  IterationConfig upper = default_config(Direction::upper);
};

Configs resolve_configs(const CliRequest& request) {
  Configs c;
  c.lower.tol_rel = c.upper.tol_rel = request.tol_rel;
  c.lower.max_iter = c.upper.max_iter = request.max_iter;

  std::optional<SeedKind> kind = request.seed_kind;
  if (request.seed_value && !kind) kind = SeedKind::custom;
  if (kind == SeedKind::custom) {
    if (!request.seed_value) throw UsageError("--seed custom requires --seed-value");
    if (request.mode == Mode::both) throw UsageError("a custom seed needs --mode lower or --mode upper");
    const SeedChoice seed = SeedChoice::custom(*request.seed_value);
    (request.mode == Mode::lower ? c.lower : c.upper).seed = seed;
  } else if (kind) {
    if (request.seed_value) throw UsageError("--seed-value is only valid with --seed custom");
    const bool upper_seed = *kind == SeedKind::frobenius;
    if (upper_seed && request.mode == Mode::lower) {
      throw UsageError("seed 'frobenius' applies to the upper iteration");
    }
    if (!upper_seed && request.mode == Mode::upper) {
      throw UsageError("seed '" + std::string(seed_kind_name(*kind)) + "' applies to the lower iteration");
    }
    (upper_seed ? c.upper : c.lower).seed = SeedChoice(*kind);
  }
  c.lower.validate();
  c.upper.validate();
  return c;
}

void emit(std::ostream& out, const Json& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: out << report.dump() << '\n'; break;
    case OutputFormat::csv: write_bound_csv(out, report); break;
    case OutputFormat::human: write_human(out, report); break;
  }
}

// 1x1 inputs sit outside the library contract; sigma is |a11| exactly.
int bound_scalar(const CliRequest& request, const ComplexMatrix& a, std::ostream& out) {
  const double sigma = std::abs(a(0, 0));
  Json report;
  report["input"] = *request.input_path;
  report["context"] = {{"n", 1}, {"frob_sq", frobenius_sq(a)}, {"log_abs_det", std::log(sigma)}};
  const Json result{{"trace", Json::array()}, {"status", "converged"}, {"bound", sigma}};
  if (request.mode != Mode::upper) report["lower"] = result;
  if (request.mode != Mode::lower) report["upper"] = result;
  if (request.verify) report["oracle"] = {{"sigma_min", sigma}, {"sigma_max", sigma}};
  emit(out, report, request.output);
  return kExitOk;
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace

int cmd_bound(const CliRequest& request, std::istream& in, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ComplexMatrix a = load_matrix(request, in);
    if (!a.is_square()) throw DimensionError("matrix must be square");
    if (a.rows() == 1) {
      if (a(0, 0) == Complex(0.0)) throw SingularMatrixError();
      return bound_scalar(request, a, out);
    }
    const Configs configs = resolve_configs(request);
    const BoundContext ctx = build_context(a);
    const SeedValues seeds = compute_seeds(ctx);

    std::optional<ConvergenceTrace> lower, upper;
    if (request.mode != Mode::upper) lower = run_lower(ctx, configs.lower);
    if (request.mode != Mode::lower) upper = run_upper(ctx, configs.upper);
    std::optional<Spectrum> oracle;
    if (request.verify) oracle = singular_values(a);

    emit(out, bound_report(*request.input_path, ctx, seeds, lower, upper, oracle), request.output);
    const bool hit_max = (lower && lower->status == IterationStatus::max_iter) ||
                         (upper && upper->status == IterationStatus::max_iter);
    return hit_max ? kExitMaxIter : kExitOk;
  });
}

int cmd_bench(const CliRequest& request, const SweepSpec& spec, unsigned threads, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const std::vector<BenchRow> rows = bench_sweep(spec, threads);
    for (const auto& row : rows) {
      if (row.error) err << "sample " << row.seed << ": " << *row.error << '\n';
    }
    if (request.output == OutputFormat::json) {
      Json arr = Json::array();
      for (const auto& row : rows) arr.push_back(bench_row_to_json(row));
      out << arr.dump() << '\n';
    } else {
      out << kBenchCsvHeader << '\n';
      for (const auto& row : rows) out << bench_csv_row(row) << '\n';
    }
    return kExitOk;
  });
}

namespace {

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

double nearest_gap(const std::vector<double>& eig, double lambda) {
  double best = std::numeric_limits<double>::infinity();
  for (double e : eig) best = std::min(best, std::abs(lambda - e));
  return best;
}

struct Attempt {
  std::optional<ConvergenceTrace> trace;
  std::string error;
};

template <class Run>
Attempt attempt(Run&& run) {
  try {
    return {run(), {}};
  } catch (const DomainError& e) {
    return {std::nullopt, e.what()};
  }
}

std::vector<Check> verify_invariants(const BoundContext& ctx, const SeedValues& seeds, const Attempt& lower_run,
                                     const Attempt& upper_run, const Spectrum& sigma,
                                     const std::vector<double>& eig) {
  constexpr double kSlack = 1e-9;
  const double smin = sigma.sigma_min(), smax = sigma.sigma_max();
  std::vector<Check> checks;

  {
    const bool ok = 0.0 < seeds.l && seeds.l < seeds.l0 && seeds.l0 < seeds.a && seeds.a <= smin * (1 + kSlack);
    checks.push_back({"seed-chain", ok,
                      "0 < l < l0 < a <= sigma_min: l=" + format_double(seeds.l) + " l0=" +
                          format_double(seeds.l0) + " a=" + format_double(seeds.a) +
                          " sigma_min=" + format_double(smin)});
  }
  for (const Attempt* r : {&lower_run, &upper_run}) {
    if (!r->trace) checks.push_back({std::string(r == &lower_run ? "lower" : "upper") + "-iteration", false, r->error});
  }
  if (lower_run.trace) {
    const ConvergenceTrace& lower = *lower_run.trace;
    bool ok = true;
    std::string detail = "a_k nondecreasing and <= sigma_min";
    for (std::size_t k = 0; k < lower.iterates.size() && ok; ++k) {
      const double next = k + 1 < lower.iterates.size() ? lower.iterates[k + 1].lambda : lower.final_lambda;
      if (next < lower.iterates[k].lambda || std::sqrt(next) > smin * (1 + kSlack)) {
        ok = false;
        detail += ": violated at k=" + std::to_string(k + 1);
      }
    }
    checks.push_back({"lower-sandwich", ok, detail});
  }
  if (upper_run.trace) {
    const ConvergenceTrace& upper = *upper_run.trace;
    bool ok = true;
    std::string detail = "a_k nonincreasing and >= sigma_max";
    for (std::size_t k = 0; k < upper.iterates.size() && ok; ++k) {
      const double next = k + 1 < upper.iterates.size() ? upper.iterates[k + 1].lambda : upper.final_lambda;
      if (next > upper.iterates[k].lambda || std::sqrt(next) < smax * (1 - kSlack)) {
        ok = false;
        detail += ": violated at k=" + std::to_string(k + 1);
      }
    }
    checks.push_back({"upper-sandwich", ok, detail});
  }
  for (const Attempt* r : {&lower_run, &upper_run}) {
    if (!r->trace) continue;
    const ConvergenceTrace* t = &*r->trace;
    const std::string name = std::string(direction_name(t->direction)) + "-limit";
    if (t->status == IterationStatus::max_iter) {
      checks.push_back({name, true, "skipped: iteration did not converge"});
      continue;
    }
    const double gap = nearest_gap(eig, t->final_lambda);
    checks.push_back({name, gap <= 1e-6 * ctx.frob_sq,
                      "|lambda_final - nearest Gram eigenvalue| = " + format_double(gap)});
  }
  {
    double sum = 0.0;
    for (double s : sigma.values()) sum += s * s;
    const double rel = std::abs(sum - ctx.frob_sq) / ctx.frob_sq;
    checks.push_back({"frobenius-identity", rel <= 1e-10,
                      "relative |sum sigma^2 - ||A||_F^2| = " + format_double(rel)});
  }
  return checks;
}

}  // namespace

int cmd_verify(const CliRequest& request, std::istream& in, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ComplexMatrix a = load_matrix(request, in);
    if (!a.is_square()) throw DimensionError("matrix must be square");
    if (a.rows() > kOracleMaxDim) throw DimensionError("oracle limited to n <= 64");
    const Configs configs = resolve_configs(request);
    const BoundContext ctx = build_context(a);
    const SeedValues seeds = compute_seeds(ctx);
    const Attempt lower = attempt([&] { return run_lower(ctx, configs.lower); });
    const Attempt upper = attempt([&] { return run_upper(ctx, configs.upper); });
    const std::vector<double> eig = jacobi_hermitian_eigen(ctx.gram);
    const Spectrum sigma = singular_values(a);

    const std::vector<Check> checks = verify_invariants(ctx, seeds, lower, upper, sigma, eig);
    Json report = nullptr;
    if (lower.trace && upper.trace) {
      report = bound_report(*request.input_path, ctx, seeds, *lower.trace, *upper.trace, sigma);
    }
    if (request.output == OutputFormat::json) {
      Json j = Json::array();
      for (const auto& c : checks) j.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      out << Json{{"checks", j}, {"report", report}}.dump() << '\n';
    } else {
      for (const auto& c : checks) out << (c.passed ? "ok     " : "FAILED ") << c.name << "  " << c.detail << '\n';
    }
    const auto failed = std::find_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; });
    if (failed != checks.end()) {
      err << "verify: invariant '" << failed->name << "' violated (" << failed->detail << ")\n";
      return kExitVerifyFailed;
    }
    return kExitOk;
  });
}

namespace {

unsigned bench_threads() {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SVBOUND_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) threads = std::min(threads, static_cast<unsigned>(cap));
    } catch (const std::exception&) {
      // Ignore malformed values.
    }
  }
  return threads;
}

void apply_spec_file(const std::string& path, SweepSpec& spec) {
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open sweep spec '" + path + "'");
  const Json j = Json::parse(file);
  if (j.contains("n_min")) spec.n_min = j.at("n_min").get<std::size_t>();
  if (j.contains("n_max")) spec.n_max = j.at("n_max").get<std::size_t>();
  if (j.contains("spread_min")) spec.spread_min = j.at("spread_min").get<double>();
  if (j.contains("spread_max")) spec.spread_max = j.at("spread_max").get<double>();
  if (j.contains("samples")) spec.samples = j.at("samples").get<std::size_t>();
  if (j.contains("base_seed")) spec.base_seed = j.at("base_seed").get<std::uint64_t>();
  if (j.contains("sigma")) spec.fixed_sigma = j.at("sigma").get<std::vector<double>>();
}

std::vector<double> parse_sigma_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto z = parse_complex_token(item);
    if (!z || z->imag() != 0.0) throw UsageError("invalid --sigma entry '" + item + "'");
    out.push_back(z->real());
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Monotone convergent bounds on the extreme singular values of a square complex matrix"};
  app.require_subcommand(1);

  CliRequest req;
  std::string input, format_name_arg, mode_arg = "both", seed_arg, output_arg;
  double seed_value = 0.0;

  const std::map<std::string, Mode> modes{{"lower", Mode::lower}, {"upper", Mode::upper}, {"both", Mode::both}};
  const std::map<std::string, OutputFormat> outputs{
      {"human", OutputFormat::human}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};
  const std::vector<std::string> formats{"matrix-market", "mm", "mtx", "csv", "csv-complex"};
  const std::vector<std::string> seeds{"yu-gu", "zou", "lin-xie", "frobenius", "custom"};

  std::vector<CLI::Option*> seed_value_opts;
  const auto add_iteration_flags = [&](CLI::App* sub) {
    sub->add_option("--seed", seed_arg, "Seed bound: yu-gu, zou, lin-xie (lower), frobenius (upper), custom")
        ->check(CLI::IsMember(seeds));
    seed_value_opts.push_back(
        sub->add_option("--seed-value", seed_value, "Starting value for --seed custom")->check(CLI::PositiveNumber));
    sub->add_option("--tol-rel", req.tol_rel, "Stop once a step moves lambda by <= tol-rel * lambda")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    sub->add_option("--max-iter", req.max_iter, "Iteration cap per direction")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  const auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "Matrix file, or - for standard input")->required();
    sub->add_option("--format", format_name_arg, "matrix-market or csv-complex (default: by extension)")
        ->check(CLI::IsMember(formats));
  };

  CLI::App* bound = app.add_subcommand("bound", "Compute seed bounds and run the iterations");
  add_input(bound);
  add_iteration_flags(bound);
  bound->add_option("--mode", mode_arg, "lower, upper or both")->check(CLI::IsMember({"lower", "upper", "both"}));
  bound->add_option("--output", output_arg, "human, json or csv")->check(CLI::IsMember({"human", "json", "csv"}));
  bound->add_flag("--verify", req.verify, "Append oracle singular values and gaps");

  CLI::App* verify = app.add_subcommand("verify", "Check every bound against a Jacobi eigenvalue oracle");
  add_input(verify);
  add_iteration_flags(verify);
  verify->add_option("--mode", mode_arg, "Direction a custom seed applies to; both iterations always run")
      ->check(CLI::IsMember({"lower", "upper", "both"}));
  verify->add_option("--output", output_arg, "human or json")->check(CLI::IsMember({"human", "json"}));

  SweepSpec spec;
  std::string spec_path, sigma_arg;
  CLI::App* bench = app.add_subcommand("bench", "Run both iterations over synthetic matrices with known spectra");
  bench->add_option("--spec", spec_path, "JSON sweep description; explicit flags override it");
  auto* n_min = bench->add_option("--n-min", spec.n_min, "Smallest dimension")->capture_default_str();
  auto* n_max = bench->add_option("--n-max", spec.n_max, "Largest dimension")->capture_default_str();
  auto* s_min = bench->add_option("--spread-min", spec.spread_min, "Smallest sigma_max/sigma_min")->capture_default_str();
  auto* s_max = bench->add_option("--spread-max", spec.spread_max, "Largest sigma_max/sigma_min")->capture_default_str();
  auto* samples = bench->add_option("--samples", spec.samples, "Number of samples")->capture_default_str();
  auto* base_seed = bench->add_option("--base-seed", spec.base_seed, "Seed of sample 0")->capture_default_str();
  auto* sigma = bench->add_option("--sigma", sigma_arg, "Fixed spectrum, comma-separated descending");
  bench->add_option("--tol-rel", req.tol_rel, "Relative stopping tolerance")->capture_default_str();
  bench->add_option("--max-iter", req.max_iter, "Iteration cap per direction")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--output", output_arg, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  std::vector<std::string> argv_storage(args);
  if (argv_storage.empty()) argv_storage.emplace_back("svbound");
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  return guarded(err, [&] {
    if (!input.empty()) req.input_path = input;
    if (!format_name_arg.empty()) req.format = parse_format_name(format_name_arg);
    req.mode = modes.at(mode_arg);
    if (!seed_arg.empty()) req.seed_kind = parse_seed_kind(seed_arg);
    for (const CLI::Option* opt : seed_value_opts) {
      if (*opt) req.seed_value = seed_value;
    }

    if (bound->parsed()) {
      req.subcommand = Subcommand::bound;
      req.output = output_arg.empty() ? OutputFormat::human : outputs.at(output_arg);
      return cmd_bound(req, in, out, err);
    }
    if (verify->parsed()) {
      req.subcommand = Subcommand::verify;
      req.output = output_arg.empty() ? OutputFormat::human : outputs.at(output_arg);
      return cmd_verify(req, in, out, err);
    }

    req.subcommand = Subcommand::bench;
    req.output = output_arg.empty() ? OutputFormat::csv : outputs.at(output_arg);
    SweepSpec effective;
    if (!spec_path.empty()) apply_spec_file(spec_path, effective);
    if (*n_min) effective.n_min = spec.n_min;
    if (*n_max) effective.n_max = spec.n_max;
    if (*s_min) effective.spread_min = spec.spread_min;
    if (*s_max) effective.spread_max = spec.spread_max;
    if (*samples) effective.samples = spec.samples;
    if (*base_seed) effective.base_seed = spec.base_seed;
    if (*sigma) effective.fixed_sigma = parse_sigma_list(sigma_arg);
    effective.lower.tol_rel = effective.upper.tol_rel = req.tol_rel;
    effective.lower.max_iter = effective.upper.max_iter = req.max_iter;
    return cmd_bench(req, effective, bench_threads(), out, err);
  });
}

}  // namespace svbound::cli
