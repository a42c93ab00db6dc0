// Fine-grid 1D cylindrical reference for the radial Riemann problem. Writes
// the same r,rho,ur,p columns as the solver's scatter files.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "allspeed/reference.hpp"

int main(int argc, char** argv) {
  CLI::App app{"1D radial reference solution for the radial Riemann problem"};
  int cells = 20000;
  double t_end = 0.1;
  double r_max = 0.7;
  std::string out = "reference.csv";
  app.add_option("--cells", cells, "number of radial cells")->check(CLI::Range(2, 100000000));
  app.add_option("--tend", t_end, "final time")->check(CLI::NonNegativeNumber);
  app.add_option("--rmax", r_max, "outer radius")->check(CLI::PositiveNumber);
  app.add_option("-o,--out", out, "output CSV");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  allspeed::RadialReferenceOptions opt;
  opt.r_max = r_max;
  const allspeed::RadialProfile prof = allspeed::radial_reference({}, cells, t_end, opt);
  std::ofstream file(out);
  if (!file) {
    std::cerr << "cannot write " << out << '\n';
    return 2;
  }
  file << "# time=" << t_end << " reference cells=" << cells << "\nr,rho,ur,p\n";
  char buf[128];
  for (std::size_t k = 0; k < prof.r.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", prof.r[k], prof.rho[k], prof.ur[k], prof.p[k]);
    file << buf;
  }
  return 0;
}
