#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "svbound/context.hpp"
#include "svbound/ensemble.hpp"
#include "svbound/iterate.hpp"
#include "svbound/svd_oracle.hpp"

namespace svbound {

using Json = nlohmann::ordered_json;

struct SeedValues {
  double l;
  double l0;
  double a;
  double frob;
};

SeedValues compute_seeds(const BoundContext& ctx);

// {"trace":[{"k","lambda","a","correction"}...],"status","bound"}
Json trace_to_json(const ConvergenceTrace& trace);

// Top-level bound report:
// {input, context:{n,frob_sq,log_abs_det}, seeds:{l,l0,a,frob},
//  lower:{...}, upper:{...}, oracle:{sigma_min,sigma_max,lower_gap,upper_gap}}
// lower/upper/oracle are present only when supplied.
Json bound_report(const std::string& input, const BoundContext& ctx, const SeedValues& seeds,
                  const std::optional<ConvergenceTrace>& lower,
                  const std::optional<ConvergenceTrace>& upper,
                  const std::optional<Spectrum>& oracle);

// Plain-text rendering; every number is printed exactly as the JSON emits it.
void write_human(std::ostream& out, const Json& report);

// Sectioned CSV: seeds, trace rows, per-direction result.
void write_bound_csv(std::ostream& out, const Json& report);

inline constexpr const char* kBenchCsvHeader =
    "seed,n,cond,l,l0,a,lower_bound,lower_iters,lower_status,upper_bound,upper_iters,upper_status,"
    "sigma_min,sigma_max";

std::string bench_csv_row(const BenchRow& row);
Json bench_row_to_json(const BenchRow& row);

// %.17g
std::string format_double(double v);

}  // namespace svbound
