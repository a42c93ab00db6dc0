// Command-line driver: scenario x method x grid runs.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include "allspeed/driver.hpp"
#include "allspeed/errors.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit all-speed finite-volume solver for the 2D Euler equations"};

  std::map<std::string, std::string> cli;
  const auto opt = [&](const std::string& name, const std::string& help) {
    app.add_option_function<std::string>("--" + name, [&cli, name](const std::string& v) { cli[name] = v; }, help);
  };
  opt("method", "a | b | c");
  opt("scenario", "kh | radial | sod1d");
  opt("nx", "cells in x");
  opt("ny", "cells in y");
  opt("mach", "Kelvin-Helmholtz Mach parameter");
  opt("epsilon", "Mach scaling parameter of the equations");
  opt("gamma", "adiabatic exponent");
  opt("cfl", "CFL number in (0, 1]");
  opt("a-factor", "relaxation speed safety factor (> 1)");
  opt("a-mode", "local | global relaxation speed");
  opt("c-denominator", "transport | full (Method C)");
  opt("tend", "final time (default: scenario's own)");
  opt("out", "output directory");
  opt("dumps", "number of evenly spaced field dumps");
  std::string config_file;
  app.add_option("--config", config_file, "flat key=value file; command-line options take precedence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  allspeed::RunConfig config;
  config.out_dir = "out";
  try {
    std::map<std::string, std::string> settings;
    if (!config_file.empty()) settings = allspeed::read_config_file(config_file);
    for (const auto& [k, v] : cli) {
      std::string key = k;
      for (auto& ch : key) ch = ch == '-' ? '_' : ch;
      settings[key] = v;
    }
    for (const auto& [k, v] : settings) allspeed::apply_setting(config, k, v);

    const allspeed::RunResult result = allspeed::run(config);
    std::printf("%s: %d steps (%d retries), t = %.6g, kinetic energy decay %.3f%%\n",
                allspeed::describe(config).c_str(), result.record.steps, result.record.retries,
                result.record.times.back(), allspeed::decay_fraction(result.record));
  } catch (const allspeed::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const allspeed::NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
