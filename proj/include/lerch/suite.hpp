#ifndef LERCH_SUITE_HPP
#define LERCH_SUITE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lerch/identity_check.hpp"
#include "lerch/numeric.hpp"

namespace lerch {

enum class Metric {
  rel_le,  // rel_err <= tolerance
  abs_le,  // abs_err <= tolerance
  rel_gt,  // rel_err > tolerance (must-fail regressions)
  exact,   // abs_err == 0 (exact rational residuals)
};

std::string_view to_string(Metric m);
Metric parse_metric(std::string_view name);
bool passes(Metric m, double tolerance, double abs_err, double rel_err);

struct CheckSpec {
  std::string name;
  ParamMap params;
  Metric metric = Metric::rel_le;
  double tolerance = 1e-9;
  std::function<IdentityCheck(const SeriesParams&)> run;
};

struct CheckOutcome {
  IdentityCheck check;
  Metric metric = Metric::rel_le;
  double tolerance = 0.0;
  bool pass = false;
  std::string error;  // set when evaluation threw
};

struct SuiteConfig {
  std::string filter = "*";
  /// Replaces the threshold of rel_le and abs_le checks.
  std::optional<double> tolerance;
  SeriesParams params;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct SuiteReport {
  std::vector<CheckOutcome> checks;  // sorted by name, then params
  std::size_t pass_count = 0;
  std::size_t fail_count = 0;
  double wall_time = 0.0;
  SuiteConfig config;
};

/// Every check over its documented grid, in a fixed order.
std::vector<CheckSpec> suite_checks();
/// Distinct check names in suite order.
std::vector<std::string> suite_check_names();
/// Grid description per check family, echoed in reports.
std::vector<std::pair<std::string, std::string>> suite_grids();

/// Shell-style glob: '*', '?', and '[...]' classes.
bool glob_match(std::string_view pattern, std::string_view text);

SuiteReport run_suite(const SuiteConfig& config);

std::string report_text(const SuiteReport& report);
/// One JSON document; floats carry 17 significant digits.
std::string report_json(const SuiteReport& report);

}  // namespace lerch

#endif
