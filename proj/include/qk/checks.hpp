#pragma once

#include <string>
#include <vector>

#include "qk/io.hpp"
#include "qk/quiver.hpp"

namespace qk {

enum class CheckSuite { Signs, OracleA3, Independence, Codim };

/// "signs", "oracle-a3", "independence", "codim"; InputError otherwise.
CheckSuite parse_suite(const std::string& name);
std::string suite_name(CheckSuite suite);

struct CheckFailure {
  DimVector e;
  OrbitSpec orbit;
  std::string message;
  Json detail;
};

struct CheckReport {
  CheckSuite suite = CheckSuite::Signs;
  int orbits_checked = 0;
  std::vector<CheckFailure> failures;
  bool passed() const { return failures.empty(); }
  Json to_json() const;
};

/// Run one suite over every orbit with 0 <= e_i <= max_dim. Orbits are
/// distributed over `threads` workers; the report order does not depend on
/// the thread count.
CheckReport run_check(const Quiver& q, CheckSuite suite, int max_dim, unsigned threads = 1);

/// Check a single orbit; empty on success.
std::vector<CheckFailure> check_orbit(const Quiver& q, CheckSuite suite, const DimVector& e,
                                      const OrbitSpec& orbit);

}  // namespace qk
