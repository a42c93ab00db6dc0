#include "allspeed/driver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "allspeed/errors.hpp"
#include "allspeed/method_a.hpp"
#include "allspeed/method_b.hpp"
#include "allspeed/method_c.hpp"

namespace allspeed {

ConservedField step(const ConservedField& U, const GridSpec& grid, const SchemeConfig& cfg, double dt) {
  switch (cfg.method) {
    case Method::A: return step_a(U, grid, cfg, dt);
    case Method::B: return step_b(U, grid, cfg, dt);
    case Method::C: return step_c(U, grid, cfg, dt);
  }
  throw std::logic_error("unknown method");
}

namespace {

constexpr int kMaxRetries = 5;

std::string with_context(const std::string& what, int step_index, double t) {
  std::ostringstream msg;
  msg.precision(17);
  msg << what << " (step " << step_index << ", t = " << t << ")";
  return msg.str();
}

}  // namespace

RunRecord integrate(ConservedField& U, const GridSpec& grid, const SchemeConfig& cfg, double t_end,
                    const std::vector<double>& dump_times, const DumpCallback& on_dump) {
  RunRecord rec;
  fill_ghosts(U, grid);
  const auto record = [&](double t) {
    rec.times.push_back(t);
    rec.kinetic_energy.push_back(kinetic_energy_total(U, grid, cfg));
    rec.totals.push_back(conserved_totals(U, grid));
  };
  std::size_t next_dump = 0;
  const auto maybe_dump = [&](int n, double t) {
    bool due = false;
    while (next_dump < dump_times.size() && dump_times[next_dump] <= t) {
      due = true;
      ++next_dump;
    }
    if (due && on_dump) on_dump(n, t, U);
  };

  double t = 0.0;
  int n = 0;
  record(t);
  maybe_dump(n, t);
  while (t < t_end) {
    double dt = 0.0;
    try {
      dt = compute_dt(U, grid, cfg);
    } catch (const NumericalFailure& f) {
      throw NumericalFailure(f.kind(), with_context(f.what(), n + 1, t), f.i(), f.j());
    }
    bool last = false;
    if (t + dt >= t_end) {
      dt = t_end - t;
      last = true;
    }
    for (int attempt = 0;; ++attempt) {
      try {
        U = step(U, grid, cfg, dt);
        break;
      } catch (const NumericalFailure& f) {
        if (f.retryable() && attempt < kMaxRetries) {
          dt *= 0.5;
          last = false;
          ++rec.retries;
          continue;
        }
        throw NumericalFailure(f.kind(), with_context(f.what(), n + 1, t), f.i(), f.j());
      }
    }
    t = last ? t_end : t + dt;
    ++n;
    record(t);
    maybe_dump(n, t);
  }
  rec.steps = n;
  return rec;
}

GridSpec make_grid(const RunConfig& c) {
  switch (c.scenario) {
    case ScenarioKind::kh: return kh_grid(c.nx, c.ny);
    case ScenarioKind::radial: return radial_grid(c.nx, c.ny);
    case ScenarioKind::sod1d: return sod_grid(c.nx, c.ny);
  }
  throw std::logic_error("unknown scenario");
}

namespace {

std::string format_time(double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", t);
  return buf;
}

}  // namespace

RunResult run(const RunConfig& config) {
  RunResult out;
  try {
    config.scheme.validate();
    out.grid = make_grid(config);
    out.grid.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (config.dumps < 0) throw ConfigError("dumps must be non-negative");
  if (config.t_end && !(*config.t_end >= 0.0)) throw ConfigError("tend must be non-negative");

  Scenario scenario;
  try {
    switch (config.scenario) {
      case ScenarioKind::kh: {
        KHParams prm = config.kh;
        prm.mach = config.mach;
        scenario = init_kh(out.grid, prm, config.scheme);
        break;
      }
      case ScenarioKind::radial: scenario = init_radial_riemann(out.grid, config.radial, config.scheme); break;
      case ScenarioKind::sod1d: scenario = init_sod_1d(out.grid, config.scheme); break;
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const double t_end = config.t_end.value_or(scenario.t_end);

  std::vector<double> dump_times;
  for (int k = 0; k <= config.dumps; ++k) dump_times.push_back(config.dumps ? t_end * k / config.dumps : 0.0);
  if (config.dumps > 0) dump_times.back() = t_end;

  const std::string header = describe(config);
  const std::filesystem::path dir(config.out_dir);
  DumpCallback on_dump;
  std::vector<DumpEntry> dumps;
  if (!config.out_dir.empty()) {
    std::filesystem::create_directories(dir);
    on_dump = [&](int n, double t, const ConservedField& U) {
      const std::string path = (dir / ("fields_" + std::to_string(n) + ".csv")).string();
      write_fields_csv(path, U, out.grid, t, n, header);
      dumps.push_back({n, t, path});
      if (config.scenario == ScenarioKind::radial) {
        write_scatter_csv((dir / ("scatter_" + format_time(t) + ".csv")).string(),
                          radial_scatter(U, out.grid, config.scheme, config.radial.cx, config.radial.cy), t, header);
      }
    };
  }

  out.field = std::move(scenario.field);
  out.record = integrate(out.field, out.grid, config.scheme, t_end, dump_times, on_dump);
  out.record.dumps = std::move(dumps);
  if (!config.out_dir.empty()) write_energy_csv((dir / "energy.csv").string(), out.record, header);
  return out;
}

std::string to_string(Method m) {
  switch (m) {
    case Method::A: return "a";
    case Method::B: return "b";
    case Method::C: return "c";
  }
  return "?";
}

std::string to_string(ScenarioKind s) {
  switch (s) {
    case ScenarioKind::kh: return "kh";
    case ScenarioKind::radial: return "radial";
    case ScenarioKind::sod1d: return "sod1d";
  }
  return "?";
}

namespace {

double parse_double(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size() || !std::isfinite(x)) throw ConfigError("bad number for " + key + ": '" + value + "'");
  return x;
}

int parse_int(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  int x = 0;
  try {
    x = std::stoi(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) throw ConfigError("bad integer for " + key + ": '" + value + "'");
  return x;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

void apply_setting(RunConfig& c, const std::string& key, const std::string& value) {
  if (key == "method") {
    if (value == "a" || value == "A") c.scheme.method = Method::A;
    else if (value == "b" || value == "B") c.scheme.method = Method::B;
    else if (value == "c" || value == "C") c.scheme.method = Method::C;
    else throw ConfigError("method must be a, b or c, got '" + value + "'");
  } else if (key == "scenario") {
    if (value == "kh") c.scenario = ScenarioKind::kh;
    else if (value == "radial") c.scenario = ScenarioKind::radial;
    else if (value == "sod1d") c.scenario = ScenarioKind::sod1d;
    else throw ConfigError("scenario must be kh, radial or sod1d, got '" + value + "'");
  } else if (key == "nx") {
    c.nx = parse_int(key, value);
  } else if (key == "ny") {
    c.ny = parse_int(key, value);
  } else if (key == "mach") {
    c.mach = parse_double(key, value);
  } else if (key == "epsilon") {
    c.scheme.epsilon = parse_double(key, value);
  } else if (key == "gamma") {
    c.scheme.gamma = parse_double(key, value);
    c.kh.gamma = c.scheme.gamma;
  } else if (key == "cfl") {
    c.scheme.cfl = parse_double(key, value);
  } else if (key == "a_factor") {
    c.scheme.a_factor = parse_double(key, value);
  } else if (key == "a_mode") {
    if (value == "local") c.scheme.a_mode = SpeedMode::local;
    else if (value == "global") c.scheme.a_mode = SpeedMode::global;
    else throw ConfigError("a_mode must be local or global");
  } else if (key == "c_denominator") {
    if (value == "transport") c.scheme.c_denominator = DenominatorScope::transport;
    else if (value == "full") c.scheme.c_denominator = DenominatorScope::full;
    else throw ConfigError("c_denominator must be transport or full");
  } else if (key == "tend") {
    c.t_end = parse_double(key, value);
  } else if (key == "out") {
    c.out_dir = value;
  } else if (key == "dumps") {
    c.dumps = parse_int(key, value);
  } else {
    throw ConfigError("unknown setting '" + key + "'");
  }
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::map<std::string, std::string> settings;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
    settings[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return settings;
}

std::string describe(const RunConfig& c) {
  std::ostringstream s;
  s.precision(12);
  s << "method=" << to_string(c.scheme.method) << " scenario=" << to_string(c.scenario) << " nx=" << c.nx
    << " ny=" << c.ny << " mach=" << c.mach << " epsilon=" << c.scheme.epsilon << " gamma=" << c.scheme.gamma
    << " cfl=" << c.scheme.cfl << " a_factor=" << c.scheme.a_factor
    << " a_mode=" << (c.scheme.a_mode == SpeedMode::local ? "local" : "global")
    << " c_denominator=" << (c.scheme.c_denominator == DenominatorScope::transport ? "transport" : "full");
  if (c.t_end) s << " tend=" << *c.t_end;
  return s.str();
}

namespace {

std::ofstream open_csv(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

void put(std::ostream& out, double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out << buf;
}

}  // namespace

void write_fields_csv(const std::string& path, const ConservedField& U, const GridSpec& grid, double time, int step,
                      const std::string& header) {
  std::ofstream out = open_csv(path);
  out << "# time=";
  put(out, time);
  out << " step=" << step << "\n# " << header << "\nx,y,rho,rhou,rhov,e\n";
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      put(out, grid.xc(i));
      out << ',';
      put(out, grid.yc(j));
      for (int k = 0; k < 4; ++k) {
        out << ',';
        put(out, U[k](i, j));
      }
      out << '\n';
    }
  }
}

void write_energy_csv(const std::string& path, const RunRecord& rec, const std::string& header) {
  std::ofstream out = open_csv(path);
  out << "# " << header << "\nt,e_kin,mass_total,momx_total,momy_total,e_total\n";
  for (std::size_t n = 0; n < rec.times.size(); ++n) {
    put(out, rec.times[n]);
    out << ',';
    put(out, rec.kinetic_energy[n]);
    for (double x : rec.totals[n]) {
      out << ',';
      put(out, x);
    }
    out << '\n';
  }
}

void write_scatter_csv(const std::string& path, const std::vector<ScatterRow>& rows, double time,
                       const std::string& header) {
  std::ofstream out = open_csv(path);
  out << "# time=";
  put(out, time);
  out << "\n# " << header << "\nr,rho,ur,p\n";
  for (const auto& row : rows) {
    put(out, row.r);
    out << ',';
    put(out, row.rho);
    out << ',';
    put(out, row.ur);
    out << ',';
    put(out, row.p);
    out << '\n';
  }
}

}  // namespace allspeed
