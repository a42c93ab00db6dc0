// Time loop, run configuration and CSV output.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "allspeed/diagnostics.hpp"
#include "allspeed/euler.hpp"
#include "allspeed/grid.hpp"
#include "allspeed/scenarios.hpp"

namespace allspeed {

/// One step of the scheme selected by cfg.method.
ConservedField step(const ConservedField& U, const GridSpec& grid, const SchemeConfig& cfg, double dt);

enum class ScenarioKind { kh, radial, sod1d };

struct RunConfig {
  ScenarioKind scenario = ScenarioKind::kh;
  SchemeConfig scheme;
  int nx = 128;
  int ny = 64;
  double mach = 1e-2;
  /// Scenario default when unset.
  std::optional<double> t_end;
  /// No files are written when empty.
  std::string out_dir;
  int dumps = 10;
  KHParams kh;
  RadialRiemannParams radial;
};

/// Called with (step, time, field) at every dump time.
using DumpCallback = std::function<void(int, double, const ConservedField&)>;

/// Advances U to t_end, recording diagnostics after every step. The last
/// step is shortened to land on t_end. A step failing with a denominator
/// error is retried with half the time step, at most five times; any other
/// failure propagates with the step index and time added to the message.
/// dump_times must be sorted; each fires at the first recorded time >= it.
RunRecord integrate(ConservedField& U, const GridSpec& grid, const SchemeConfig& cfg, double t_end,
                    const std::vector<double>& dump_times = {}, const DumpCallback& on_dump = {});

struct RunResult {
  RunRecord record;
  GridSpec grid;
  ConservedField field;
};

/// Builds the scenario, integrates and writes fields_<step>.csv,
/// energy.csv and (radial scenario) scatter_<time>.csv into out_dir.
RunResult run(const RunConfig& config);

GridSpec make_grid(const RunConfig& config);

// Configuration as flat key=value settings.

/// Applies one setting. Throws ConfigError on unknown keys or bad values.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);
/// Parses `key = value` lines; '#' starts a comment. Throws ConfigError.
std::map<std::string, std::string> read_config_file(const std::string& path);
/// One-line `key=value ...` summary used in file headers.
std::string describe(const RunConfig& config);

std::string to_string(Method m);
std::string to_string(ScenarioKind s);

// CSV writers. Header lines start with '#', then one column-name line.
void write_fields_csv(const std::string& path, const ConservedField& U, const GridSpec& grid, double time, int step,
                      const std::string& header);
void write_energy_csv(const std::string& path, const RunRecord& record, const std::string& header);
void write_scatter_csv(const std::string& path, const std::vector<ScatterRow>& rows, double time,
                       const std::string& header);

}  // namespace allspeed
