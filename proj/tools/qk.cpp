// qk: quiver coefficients from the command line.

#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "qk/checks.hpp"
#include "qk/engine.hpp"
#include "qk/errors.hpp"
#include "qk/io.hpp"
#include "qk/rep.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

qk::DimVector parse_dim(const std::string& text) {
  qk::DimVector e;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      e.push_back(v);
    } catch (const std::exception&) {
      throw qk::InputError("--dim: \"" + item + "\" is not a non-negative integer");
    }
  }
  return e;
}

int cmd_roots(const std::string& quiver_path, const std::string& format) {
  const qk::Quiver q = qk::quiver_from_json(qk::load_json(quiver_path));
  const auto type = qk::dynkin_type(q);
  const auto roots = qk::positive_roots(q);
  if (format == "json") {
    std::cout << qk::Json{{"type", type.to_string()}, {"roots", roots}}.dump(2) << "\n";
  } else {
    std::cout << "# " << type.to_string() << ", " << roots.size() << " positive roots\n";
    for (const auto& r : roots) std::cout << qk::dim_string(r) << "\n";
  }
  return 0;
}

int cmd_orbits(const std::string& quiver_path, const std::string& dim, const std::string& format) {
  const qk::Quiver q = qk::quiver_from_json(qk::load_json(quiver_path));
  const qk::DimVector e = parse_dim(dim);
  if (static_cast<int>(e.size()) != q.num_vertices()) {
    throw qk::InputError("--dim: expected " + std::to_string(q.num_vertices()) + " entries");
  }
  const auto list = qk::orbits(q, e);
  if (format == "json") {
    qk::Json out = qk::Json::array();
    for (const auto& o : list) out.push_back(qk::to_json(e, o));
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "# " << list.size() << " orbits with dimension vector " << qk::dim_string(e)
              << "\n";
    for (const auto& o : list) std::cout << o.to_string() << "\n";
  }
  return 0;
}

int cmd_coeffs(const std::string& quiver_path, const std::string& orbit_path,
               const std::string& pair_arg, const std::string& format, bool cohomological) {
  const qk::Quiver q = qk::quiver_from_json(qk::load_json(quiver_path));
  const auto [e, orbit] = qk::orbit_from_json(q, qk::load_json(orbit_path));
  qk::CoefficientTable table;
  if (pair_arg == "auto") {
    table = qk::quiver_coefficients(q, e, orbit);
  } else {
    table = qk::quiver_coefficients(q, e, orbit, qk::pair_from_json(qk::load_json(pair_arg)));
  }
  if (format == "json") {
    std::cout << qk::dump_table(qk::to_json(table, cohomological));
  } else {
    std::cout << qk::table_to_text(table, cohomological);
  }
  return 0;
}

int cmd_check(const std::string& quiver_path, const std::string& suite, int max_dim,
              unsigned threads) {
  const qk::Quiver q = qk::quiver_from_json(qk::load_json(quiver_path));
  const auto report = qk::run_check(q, qk::parse_suite(suite), max_dim, threads);
  std::cout << qk::suite_name(report.suite) << ": " << report.orbits_checked << " orbits, "
            << report.failures.size() << " failures\n";
  if (!report.passed()) {
    std::cout << report.to_json().dump(2) << "\n";
    std::cout << "FAIL\n";
    return kExitFail;
  }
  std::cout << "PASS\n";
  return 0;
}

int cmd_member(const std::string& quiver_path, const std::string& orbit_path,
               const std::string& rep_path) {
  const qk::Quiver q = qk::quiver_from_json(qk::load_json(quiver_path));
  const auto [e, orbit] = qk::orbit_from_json(q, qk::load_json(orbit_path));
  const qk::QuiverRep rep = qk::rep_from_json(q, qk::load_json(rep_path));
  if (rep.dims != e) throw qk::InputError("representation and orbit have different dimension vectors");
  const auto report = qk::membership_report(q, rep, orbit);
  std::cout << (report.member ? "member" : "not-member") << "\n";
  std::cout << "root        hom(orbit)  hom(rep)\n";
  for (const auto& row : report.rows) {
    std::string root = qk::dim_string(row.root);
    root.resize(std::max<std::size_t>(root.size(), 10), ' ');
    std::cout << root << "  " << row.hom_orbit << "           " << row.hom_candidate
              << (row.hom_candidate < row.hom_orbit ? "  <" : "") << "\n";
  }
  return report.member ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"K-theoretic quiver coefficients of Dynkin orbit closures"};
  app.require_subcommand(1);
  std::string quiver, orbit, roots_format, orbits_format, coeffs_format, pair = "auto", suite, rep, dim;
  bool cohomological = false;
  int max_dim = 2;
  unsigned threads = 1;

  auto* roots = app.add_subcommand("roots", "List the positive roots");
  roots->add_option("quiver", quiver, "Quiver JSON file")->required();
  roots->add_option("--format", roots_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");

  auto* orbs = app.add_subcommand("orbits", "List the orbits with a dimension vector");
  orbs->add_option("quiver", quiver, "Quiver JSON file")->required();
  orbs->add_option("--dim", dim, "Dimension vector, e.g. 1,2,1")->required();
  orbs->add_option("--format", orbits_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");

  auto* coeffs = app.add_subcommand("coeffs", "Quiver coefficients of an orbit closure");
  coeffs->add_option("quiver", quiver, "Quiver JSON file")->required();
  coeffs->add_option("orbit", orbit, "Orbit JSON file")->required();
  coeffs->add_option("--pair", pair, "auto, or a JSON file {\"i\":[...],\"r\":[...]}");
  coeffs->add_option("--format", coeffs_format, "json or table")
      ->check(CLI::IsMember({"json", "table"}))
      ->default_val("json");
  coeffs->add_flag("--cohomological", cohomological, "Only the terms of degree codim");

  auto* check = app.add_subcommand("check", "Run a check suite over all small orbits");
  check->add_option("quiver", quiver, "Quiver JSON file")->required();
  check->add_option("--suite", suite, "signs, oracle-a3, independence or codim")->required();
  check->add_option("--max-dim", max_dim, "Largest dimension at any vertex")->default_val(2);
  check->add_option("--threads", threads, "Worker threads (0 = hardware)")->default_val(1);

  auto* member = app.add_subcommand("member", "Bongartz orbit-closure membership test");
  member->add_option("quiver", quiver, "Quiver JSON file")->required();
  member->add_option("orbit", orbit, "Orbit JSON file")->required();
  member->add_option("--rep", rep, "Representation JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*roots) return cmd_roots(quiver, roots_format);
    if (*orbs) return cmd_orbits(quiver, dim, orbits_format);
    if (*coeffs) return cmd_coeffs(quiver, orbit, pair, coeffs_format, cohomological);
    if (*check) {
      if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
      return cmd_check(quiver, suite, max_dim, threads);
    }
    if (*member) return cmd_member(quiver, orbit, rep);
  } catch (const qk::InputError& e) {
    std::cerr << "qk: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "qk: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "qk: internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
