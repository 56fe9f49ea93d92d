// Command-line interface: scaling-factor tables, superbroadcasting
// thresholds, figure data series, output entanglement and the brute-force
// verification suite. All tabular output follows the fixed CSV contract
// (15 significant digits, '\n' line endings), so identical invocations
// are byte-identical.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "superb/csv.hpp"
#include "superb/figures.hpp"
#include "superb/thresholds.hpp"
#include "superb/verify.hpp"

namespace {

using superb::csv::format_value;
using superb::thresholds::Family;

constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailure = 2;

Family parse_family(const std::string& name) {
  if (name == "universal") return Family::universal;
  if (name == "phase") return Family::phase;
  throw CLI::ValidationError("--family must be 'universal' or 'phase'");
}

// "lo:hi:step" -> inclusive grid
std::vector<double> parse_grid(const std::string& spec) {
  double lo, hi, step;
  char c1, c2;
  std::istringstream in(spec);
  if (!(in >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' ||
      !in.eof())
    throw CLI::ValidationError("--r must have the form lo:hi:step");
  try {
    return superb::figures::r_grid(lo, hi, step);
  } catch (const std::exception& e) {
    throw CLI::ValidationError(e.what());
  }
}

void emit(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << payload;
}

std::string scaling_csv(Family family, int n, const std::string& m_spec,
                        const std::vector<double>& grid) {
  std::ostringstream os;
  superb::csv::write_header(os, {"r", "p"});
  long m = 0;
  if (m_spec == "inf") {
    if (family != Family::universal)
      throw CLI::ValidationError(
          "--m inf is only defined for the universal family");
    m = superb::thresholds::kInfiniteM;
  } else {
    m = std::stol(m_spec);
  }
  for (const auto& row : superb::figures::scaling_curve(family, n, m, grid))
    superb::csv::write_row(os, {format_value(row.r), format_value(row.p)});
  return os.str();
}

std::string threshold_csv(Family family, int n, int m) {
  const auto res = superb::thresholds::r_star(family, n, m);
  std::ostringstream os;
  superb::csv::write_header(os,
                            {"family", "N", "M", "r_star", "max_p", "argmax_r"});
  superb::csv::write_row(
      os, {superb::thresholds::family_name(family), std::to_string(n),
           std::to_string(m),
           res.r_star ? format_value(*res.r_star) : std::string("none"),
           format_value(res.max_p), format_value(res.argmax_r)});
  return os.str();
}

std::string mstar_csv(Family family, int n) {
  const auto res = superb::thresholds::m_star(family, n);
  std::string value = "none";
  if (res.kind == superb::thresholds::MStarResult::Kind::finite)
    value = std::to_string(res.m_star);
  else if (res.kind == superb::thresholds::MStarResult::Kind::infinite)
    value = "inf";
  std::ostringstream os;
  superb::csv::write_header(os, {"family", "N", "m_star"});
  superb::csv::write_row(
      os, {superb::thresholds::family_name(family), std::to_string(n), value});
  return os.str();
}

std::string figure_csv(const std::string& id) {
  std::ostringstream os;
  if (id == "fig1" || id == "fig3") {
    const auto rows = id == "fig1" ? superb::figures::fig1()
                                   : superb::figures::fig3();
    superb::csv::write_header(os, {"N", "r", "p"});
    for (const auto& row : rows)
      superb::csv::write_row(os, {std::to_string(row.n), format_value(row.r),
                                  format_value(row.p)});
  } else if (id == "fig2" || id == "fig4") {
    const auto rows = id == "fig2" ? superb::figures::fig2()
                                   : superb::figures::fig4();
    superb::csv::write_header(os, {"series", "N", "one_minus_rstar"});
    for (const auto& row : rows)
      superb::csv::write_row(os, {row.series, std::to_string(row.n),
                                  format_value(row.one_minus_rstar)});
  } else if (id == "fig5") {
    superb::csv::write_header(os, {"family", "N", "r", "E"});
    for (const auto& row : superb::figures::fig5())
      superb::csv::write_row(os, {row.family, std::to_string(row.n),
                                  format_value(row.r),
                                  format_value(row.entanglement)});
  } else {
    throw CLI::ValidationError("unknown figure id (use fig1..fig5)");
  }
  return os.str();
}

std::string entanglement_csv(Family family, int n, int m,
                             const std::vector<double>& grid) {
  std::ostringstream os;
  superb::csv::write_header(os, {"r", "C", "E"});
  for (const auto& row :
       superb::figures::entanglement_curve(family, n, m, grid))
    superb::csv::write_row(os, {format_value(row.r),
                                format_value(row.concurrence),
                                format_value(row.entanglement)});
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal N->M superbroadcasting channels for mixed qubits"};
  app.require_subcommand(1);

  std::string family_name = "universal";
  int n = 1;
  std::string m_spec = "1";
  int m_int = 1;
  std::string grid_spec = "0:1:0.01";
  std::string output = "-";
  std::string figure_id;
  int max_dim = 10;
  std::string report_path;

  auto* scaling = app.add_subcommand("scaling", "Table of p^{N,M}(r)");
  scaling->add_option("--family", family_name)->required();
  scaling->add_option("--n", n)->required();
  scaling->add_option("--m", m_spec, "output copies, or 'inf'")->required();
  scaling->add_option("--r", grid_spec, "grid lo:hi:step");
  scaling->add_option("--output,-o", output);

  auto* threshold = app.add_subcommand(
      "threshold", "Superbroadcasting threshold r_*(N, M)");
  threshold->add_option("--family", family_name)->required();
  threshold->add_option("--n", n)->required();
  threshold->add_option("--m", m_int)->required();
  threshold->add_option("--output,-o", output);

  auto* mstar = app.add_subcommand("mstar", "Maximal output count M_*(N)");
  mstar->add_option("--family", family_name)->required();
  mstar->add_option("--n", n)->required();
  mstar->add_option("--output,-o", output);

  auto* figure = app.add_subcommand("figure", "Per-figure data series");
  figure->add_option("id", figure_id, "fig1..fig5")->required();
  figure->add_option("--output,-o", output);

  auto* entanglement = app.add_subcommand(
      "entanglement", "Concurrence and EoF of the double-site output");
  entanglement->add_option("--family", family_name)->required();
  entanglement->add_option("--n", n)->required();
  entanglement->add_option("--m", m_int)->required();
  entanglement->add_option("--r", grid_spec, "grid lo:hi:step");
  entanglement->add_option("--output,-o", output);

  auto* verify = app.add_subcommand(
      "verify", "Brute-force Choi-operator verification suite");
  verify->add_option("--max-dim", max_dim, "largest N + M (<= 14)");
  verify->add_option("--report", report_path, "JSON report file");
  verify->add_option("--output,-o", output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (scaling->parsed()) {
      emit(output, scaling_csv(parse_family(family_name), n, m_spec,
                               parse_grid(grid_spec)));
    } else if (threshold->parsed()) {
      emit(output, threshold_csv(parse_family(family_name), n, m_int));
    } else if (mstar->parsed()) {
      emit(output, mstar_csv(parse_family(family_name), n));
    } else if (figure->parsed()) {
      emit(output, figure_csv(figure_id));
    } else if (entanglement->parsed()) {
      emit(output, entanglement_csv(parse_family(family_name), n, m_int,
                                    parse_grid(grid_spec)));
    } else if (verify->parsed()) {
      superb::verify::Options opts;
      if (max_dim < 2 || max_dim > superb::oracle::kMaxTotalQubits)
        throw CLI::ValidationError("--max-dim must lie in [2, 14]");
      opts.max_total_qubits = max_dim;
      const auto report = superb::verify::run_suite(opts);
      std::ostringstream os;
      for (const auto& c : report.cases)
        os << (c.passed ? "pass" : "FAIL") << " "
           << superb::thresholds::family_name(c.family) << " N=" << c.n_in
           << " M=" << c.m_out << '\n';
      os << (report.all_passed ? "all checks passed" : "verification FAILED")
         << '\n';
      emit(output, os.str());
      if (!report_path.empty()) {
        std::ofstream json_out(report_path, std::ios::binary);
        json_out << report.to_json() << '\n';
      }
      return report.all_passed ? 0 : kExitVerifyFailure;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailure;
  }
  return 0;
}
