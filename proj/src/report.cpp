#include "svbound/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "svbound/classical_bounds.hpp"

namespace svbound {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

SeedValues compute_seeds(const BoundContext& ctx) {
  return {yu_gu_lower(ctx), zou_lower(ctx), lin_xie_root(ctx), upper_seed(ctx)};
}

Json trace_to_json(const ConvergenceTrace& trace) {
  Json steps = Json::array();
  for (const auto& e : trace.iterates) {
    steps.push_back({{"k", e.k}, {"lambda", e.lambda}, {"a", e.a}, {"correction", e.correction}});
  }
  return Json{{"trace", std::move(steps)},
              {"status", std::string(status_name(trace.status))},
              {"bound", trace.final_bound}};
}

Json bound_report(const std::string& input, const BoundContext& ctx, const SeedValues& seeds,
                  const std::optional<ConvergenceTrace>& lower,
                  const std::optional<ConvergenceTrace>& upper,
                  const std::optional<Spectrum>& oracle) {
  Json report;
  report["input"] = input;
  report["context"] = {{"n", ctx.n},
                       {"frob_sq", ctx.frob_sq},
                       {"log_abs_det", 0.5 * ctx.log_det_sq.log_mag()}};
  report["seeds"] = {{"l", seeds.l}, {"l0", seeds.l0}, {"a", seeds.a}, {"frob", seeds.frob}};
  if (lower) report["lower"] = trace_to_json(*lower);
  if (upper) report["upper"] = trace_to_json(*upper);
  if (oracle) {
    Json o{{"sigma_min", oracle->sigma_min()}, {"sigma_max", oracle->sigma_max()}};
    if (lower) o["lower_gap"] = oracle->sigma_min() - lower->final_bound;
    if (upper) o["upper_gap"] = upper->final_bound - oracle->sigma_max();
    report["oracle"] = std::move(o);
  }
  return report;
}

void write_human(std::ostream& out, const Json& report) {
  const auto num = [](const Json& v) { return v.dump(); };
  out << "input: " << report.at("input").get<std::string>() << '\n';
  const Json& ctx = report.at("context");
  out << "n = " << num(ctx.at("n")) << ", ||A||_F^2 = " << num(ctx.at("frob_sq"))
      << ", log|det A| = " << num(ctx.at("log_abs_det")) << '\n';
  if (report.contains("seeds")) {
    const Json& s = report.at("seeds");
    out << "seeds:\n"
        << "  yu-gu     l   = " << num(s.at("l")) << '\n'
        << "  zou       l0  = " << num(s.at("l0")) << '\n'
        << "  lin-xie   a   = " << num(s.at("a")) << '\n'
        << "  frobenius     = " << num(s.at("frob")) << '\n';
  }
  for (const char* dir : {"lower", "upper"}) {
    if (!report.contains(dir)) continue;
    const Json& d = report.at(dir);
    out << dir << " iteration (" << d.at("status").get<std::string>() << ", "
        << d.at("trace").size() << " steps):\n";
    for (const auto& e : d.at("trace")) {
      out << "  k=" << num(e.at("k")) << "  lambda=" << num(e.at("lambda")) << "  a=" << num(e.at("a"))
          << "  correction=" << num(e.at("correction")) << '\n';
    }
    out << "  " << (std::string(dir) == "lower" ? "sigma_min >= " : "sigma_max <= ")
        << num(d.at("bound")) << '\n';
  }
  if (report.contains("oracle")) {
    const Json& o = report.at("oracle");
    out << "oracle: sigma_min = " << num(o.at("sigma_min")) << ", sigma_max = " << num(o.at("sigma_max"))
        << '\n';
    if (o.contains("lower_gap")) out << "  lower gap (sigma_min - bound) = " << num(o.at("lower_gap")) << '\n';
    if (o.contains("upper_gap")) out << "  upper gap (bound - sigma_max) = " << num(o.at("upper_gap")) << '\n';
  }
}

void write_bound_csv(std::ostream& out, const Json& report) {
  const auto num = [](const Json& v) { return v.dump(); };
  if (report.contains("seeds")) {
    out << "# seeds\nname,value\n";
    for (const auto& [name, value] : report.at("seeds").items()) out << name << ',' << num(value) << '\n';
  }
  out << "# trace\ndirection,k,lambda,a,correction\n";
  for (const char* dir : {"lower", "upper"}) {
    if (!report.contains(dir)) continue;
    for (const auto& e : report.at(dir).at("trace")) {
      out << dir << ',' << num(e.at("k")) << ',' << num(e.at("lambda")) << ',' << num(e.at("a")) << ','
          << num(e.at("correction")) << '\n';
    }
  }
  out << "# result\ndirection,status,bound,iterations\n";
  for (const char* dir : {"lower", "upper"}) {
    if (!report.contains(dir)) continue;
    const Json& d = report.at(dir);
    out << dir << ',' << d.at("status").get<std::string>() << ',' << num(d.at("bound")) << ','
        << d.at("trace").size() << '\n';
  }
  if (report.contains("oracle")) {
    out << "# oracle\nname,value\n";
    for (const auto& [name, value] : report.at("oracle").items()) out << name << ',' << num(value) << '\n';
  }
}

std::string bench_csv_row(const BenchRow& row) {
  const bool failed = row.error.has_value();
  const auto status = [&](IterationStatus s) { return failed ? std::string("error") : std::string(status_name(s)); };
  std::string out;
  out += std::to_string(row.seed) + ',' + std::to_string(row.n) + ',' + format_double(row.cond) + ',';
  out += format_double(row.l) + ',' + format_double(row.l0) + ',' + format_double(row.a) + ',';
  out += format_double(row.lower_bound) + ',' + std::to_string(row.lower_iters) + ',' +
         status(row.lower_status) + ',';
  out += format_double(row.upper_bound) + ',' + std::to_string(row.upper_iters) + ',' +
         status(row.upper_status) + ',';
  out += format_double(row.sigma_min) + ',' + format_double(row.sigma_max);
  return out;
}

Json bench_row_to_json(const BenchRow& row) {
  Json j{{"seed", row.seed},
         {"n", row.n},
         {"cond", row.cond},
         {"l", row.l},
         {"l0", row.l0},
         {"a", row.a},
         {"lower_bound", row.lower_bound},
         {"lower_iters", row.lower_iters},
         {"lower_status", std::string(status_name(row.lower_status))},
         {"upper_bound", row.upper_bound},
         {"upper_iters", row.upper_iters},
         {"upper_status", std::string(status_name(row.upper_status))},
         {"sigma_min", row.sigma_min},
         {"sigma_max", row.sigma_max}};
  if (row.error) {
    j["lower_status"] = "error";
    j["upper_status"] = "error";
    j["error"] = *row.error;
  }
  return j;
}

}  // namespace svbound
