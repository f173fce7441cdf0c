// Command-line front end: dimension/bound queries, configuration
// verification, numerical design search, the built-in design families
// and the catalogued optimal rows.
//
// Exit codes: 0 success, 1 verification failure (gap above tolerance),
// 2 malformed input.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grassdesign/families.hpp"
#include "grassdesign/io.hpp"
#include "grassdesign/kernels.hpp"
#include "grassdesign/optimizer.hpp"
#include "grassdesign/potential.hpp"
#include "grassdesign/rational.hpp"
#include "grassdesign/repdim.hpp"
#include "grassdesign/zonal.hpp"

namespace {

using namespace grassdesign;

std::vector<int> parse_rank_list(const std::string& text) {
  std::vector<int> ranks;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    ranks.push_back(std::stoi(item));
  }
  if (ranks.empty()) throw std::invalid_argument("empty rank list '" + text + "'");
  return ranks;
}

// "1:1,2:5/3" -> {1: 1, 2: 5/3}
std::map<int, Rational> parse_mass_map(const std::string& text) {
  std::map<int, Rational> masses;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("expected rank:mass, got '" + item + "'");
    masses[std::stoi(item.substr(0, colon))] =
        parse_rational(item.substr(colon + 1));
  }
  if (masses.empty()) throw std::invalid_argument("empty mass list '" + text + "'");
  return masses;
}

std::map<int, int> parse_count_map(const std::string& text) {
  std::map<int, int> counts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("expected rank:count, got '" + item + "'");
    counts[std::stoi(item.substr(0, colon))] = std::stoi(item.substr(colon + 1));
  }
  if (counts.empty()) throw std::invalid_argument("empty count list '" + text + "'");
  return counts;
}

std::string format_double(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

void emit_configuration(const Configuration& config, const std::string& output) {
  if (output.empty())
    std::cout << configuration_to_json(config) << '\n';
  else
    write_configuration(config, output);
}

int report_exit_code(const CertificationReport& report) {
  return report.certified() ? 0 : 1;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"designs and cubatures on unions of Grassmannians"};
  app.require_subcommand(1);

  // dim
  auto* dim_cmd = app.add_subcommand("dim", "dimension of the degree-t polynomial space");
  int dim_d = 0, dim_t = 0;
  std::string dim_ranks;
  dim_cmd->add_option("--d", dim_d, "ambient dimension")->required();
  dim_cmd->add_option("--ranks", dim_ranks, "comma-separated ranks, e.g. 1,2")->required();
  dim_cmd->add_option("--t", dim_t, "polynomial degree")->required();
  dim_cmd->callback([&] {
    std::cout << dim_pol_union(dim_d, parse_rank_list(dim_ranks), dim_t) << '\n';
  });

  // bound
  auto* bound_cmd = app.add_subcommand("bound", "potential lower bound of a measure");
  int bound_d = 0, bound_t = 0;
  std::string bound_masses;
  bound_cmd->add_option("--d", bound_d, "ambient dimension")->required();
  bound_cmd->add_option("--masses", bound_masses, "rank:mass list, e.g. 1:1,2:5/3")->required();
  bound_cmd->add_option("--t", bound_t, "strength")->required();
  bound_cmd->callback([&] {
    SignedMeasure measure(bound_d);
    for (const auto& [k, m] : parse_mass_map(bound_masses)) measure.set_mass(k, m);
    const Rational exact = lower_bound_exact(measure, bound_t);
    std::cout << to_fraction_string(exact) << " ≈ " << format_double(to_double(exact))
              << '\n';
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "certify a configuration file");
  std::string verify_input = "-", verify_output;
  int verify_t = 0;
  double verify_tol = 1e-8;
  verify_cmd->add_option("--input", verify_input, "configuration JSON ('-' = stdin)");
  verify_cmd->add_option("--t", verify_t, "strength to test")->required();
  verify_cmd->add_option("--tol", verify_tol, "gap tolerance");
  verify_cmd->add_option("--output", verify_output, "report file (default stdout)");
  int exit_code = 0;
  verify_cmd->callback([&] {
    const Configuration config = verify_input == "-"
                                     ? configuration_from_stream(std::cin)
                                     : read_configuration(verify_input);
    const CertificationReport report = certify(config, verify_t, verify_tol);
    if (verify_output.empty())
      std::cout << report_to_json(report) << '\n';
    else {
      std::ofstream out(verify_output);
      if (!out) throw std::runtime_error("cannot open '" + verify_output + "'");
      out << report_to_json(report) << '\n';
    }
    exit_code = report_exit_code(report);
  });

  // optimize
  auto* opt_cmd = app.add_subcommand("optimize", "search a design by potential minimization");
  int opt_d = 0, opt_t = 0;
  std::string opt_counts, opt_masses, opt_output;
  OptimizerSettings settings;
  opt_cmd->add_option("--d", opt_d, "ambient dimension")->required();
  opt_cmd->add_option("--counts", opt_counts, "rank:count list, e.g. 1:6,2:4")->required();
  opt_cmd->add_option("--masses", opt_masses, "rank:mass list; weights are mass/count")->required();
  opt_cmd->add_option("--t", opt_t, "strength")->required();
  opt_cmd->add_option("--seed", settings.seed, "base RNG seed");
  opt_cmd->add_option("--max-iter", settings.max_iter, "iteration budget per restart");
  opt_cmd->add_option("--grad-tol", settings.grad_tol, "gradient norm stop");
  opt_cmd->add_option("--restarts", settings.restarts, "number of seeded restarts");
  opt_cmd->add_flag("--cg", settings.use_cg, "Polak-Ribiere direction updates");
  opt_cmd->add_option("--output", opt_output, "write configuration JSON here");
  opt_cmd->callback([&] {
    const auto counts = parse_count_map(opt_counts);
    const auto mass_map = parse_mass_map(opt_masses);
    std::map<int, double> weights;
    for (const auto& [k, n] : counts) {
      const auto it = mass_map.find(k);
      if (it == mass_map.end())
        throw std::invalid_argument("missing mass for rank " + std::to_string(k));
      weights[k] = to_double(it->second) / n;
    }
    const SearchResult result = search_design(opt_d, counts, weights, opt_t, settings);
    const CertificationReport report = certify(result.best.config, opt_t);
    emit_configuration(result.best.config, opt_output);
    std::cerr << "restart " << result.best_restart << " of " << settings.restarts
              << ", iterations " << result.best.iterations << ", grad norm "
              << result.best.grad_norm << '\n'
              << report_to_json(report) << '\n';
    exit_code = report_exit_code(report);
  });

  // family
  auto* family_cmd = app.add_subcommand("family", "construct a built-in design family");
  std::string family_name, family_output;
  int family_d = 0;
  double family_m = 0, family_m1 = 0, family_m2 = 0;
  bool has_m = false, has_m1 = false, has_m2 = false;
  family_cmd->add_option("--name", family_name,
                         "lines-hyperplane | r4-1design | r3-2design | r4-2design | r5-2design")
      ->required();
  family_cmd->add_option("--d", family_d, "ambient dimension (lines-hyperplane)");
  family_cmd->add_option("--m", family_m, "hyperplane mass (lines-hyperplane)")
      ->each([&](const std::string&) { has_m = true; });
  family_cmd->add_option("--m1", family_m1, "line mass (r4-1design)")
      ->each([&](const std::string&) { has_m1 = true; });
  family_cmd->add_option("--m2", family_m2, "plane mass (r3/r4-2design)")
      ->each([&](const std::string&) { has_m2 = true; });
  family_cmd->add_option("--output", family_output, "write configuration JSON here");
  family_cmd->callback([&] {
    double param = 0;
    if (has_m) param = family_m;
    if (has_m1) param = family_m1;
    if (has_m2) param = family_m2;
    const FamilyDesign family = build_family(family_name, param, family_d);
    int strength = 1;
    if (family_name == "r3-2design" || family_name == "r4-2design" ||
        family_name == "r5-2design")
      strength = 2;
    const CertificationReport report = certify(family.configuration, strength);
    emit_configuration(family.configuration, family_output);
    std::cerr << report_to_json(report) << '\n';
    exit_code = report_exit_code(report);
  });

  // table1
  auto* table_cmd = app.add_subcommand("table1", "regenerate and certify the catalogued rows");
  double table_tol = 1e-9;
  table_cmd->add_option("--tol", table_tol, "gap tolerance");
  table_cmd->callback([&] {
    bool all_ok = true;
    for (const Table1Row& row : table1_rows()) {
      const FamilyDesign design = row.build();
      const CertificationReport report = certify(design.configuration, row.t, table_tol);
      const auto counts = design.configuration.rank_counts();
      const int n1 = counts.count(1) ? counts.at(1) : 0;
      const int n2 = counts.count(2) ? counts.at(2) : 0;
      const bool counts_ok = n1 == row.n1 && n2 == row.n2;
      const bool ok = report.certified() && counts_ok;
      all_ok = all_ok && ok;
      std::cout << "t=" << row.t << " d=" << row.d << " n1=" << n1 << " n2=" << n2
                << " m1=" << to_fraction_string(row.m1)
                << " m2=" << to_fraction_string(row.m2) << " gap=" << report.gap
                << " verdict=" << to_string(report.verdict) << ' '
                << (ok ? "PASS" : "FAIL") << " (" << row.constructor << ")\n";
    }
    exit_code = all_ok ? 0 : 1;
  });

  // kernel-eval
  auto* kernel_cmd = app.add_subcommand("kernel-eval", "evaluate intertwining kernels (debug)");
  int kernel_d = 3, kernel_k = 1, kernel_l = 1;
  std::string kernel_pi = "1";
  std::uint64_t kernel_seed = 0;
  kernel_cmd->add_option("--d", kernel_d, "ambient dimension");
  kernel_cmd->add_option("--pi", kernel_pi, "partition parts, e.g. '2' or '1,1' ('0' = empty)");
  kernel_cmd->add_option("--k", kernel_k, "rank of P");
  kernel_cmd->add_option("--l", kernel_l, "rank of Q");
  kernel_cmd->add_option("--seed", kernel_seed, "RNG seed for the sample points");
  kernel_cmd->callback([&] {
    std::vector<int> parts;
    if (kernel_pi != "0")
      for (int p : parse_rank_list(kernel_pi)) parts.push_back(p);
    const Partition pi(parts);
    std::map<int, int> counts{{kernel_k, 1}};
    std::map<int, double> unit_weights{{kernel_k, 1.0}};
    if (kernel_l == kernel_k) {
      counts[kernel_k] = 2;
    } else {
      counts[kernel_l] = 1;
      unit_weights[kernel_l] = 1.0;
    }
    const Configuration sample =
        random_configuration(kernel_d, counts, unit_weights, kernel_seed);
    const Projector& p = *std::find_if(
        sample.points().begin(), sample.points().end(),
        [&](const Projector& pt) { return pt.rank() == kernel_k; });
    const Projector& q = *std::find_if(
        sample.points().rbegin(), sample.points().rend(),
        [&](const Projector& pt) { return pt.rank() == kernel_l; });
    std::cout << "p_pi(P,Q)        = " << format_double(p_pi(pi, p, q)) << '\n'
              << "v_pi^k, v_pi^l   = " << format_double(v_pi(pi, kernel_k, kernel_d))
              << ", " << format_double(v_pi(pi, kernel_l, kernel_d)) << '\n'
              << "p_pi^{k,l}(P,Q)  = "
              << format_double(intertwining(pi, kernel_k, kernel_l, p, q)) << '\n'
              << "p_pi^{k,k}(P,P)  = "
              << format_double(intertwining(pi, kernel_k, kernel_k, p, p)) << '\n'
              << "dim H_{2pi}      = " << dim_irrep(kernel_d, [&] {
                   std::vector<int> doubled;
                   for (int part : pi.parts()) doubled.push_back(2 * part);
                   return Partition(doubled);
                 }())
              << '\n';
  });

  CLI11_PARSE(app, argc, argv);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
