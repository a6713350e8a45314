#include "qk/checks.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "qk/engine.hpp"
#include "qk/errors.hpp"
#include "qk/oracle_a3.hpp"

namespace qk {

namespace {

enum class Oracle { None, A2, Inbound, Outbound };

Oracle oracle_for(const Quiver& q) {
  if (q == Quiver(2, {{1, 2}})) return Oracle::A2;
  if (q == Quiver::inbound_a3()) return Oracle::Inbound;
  if (q == Quiver::outbound_a3()) return Oracle::Outbound;
  return Oracle::None;
}

Json diff_json(const TensorElement& got, const TensorElement& want) {
  TensorElement d = got;
  d -= want;
  return terms_to_json(d);
}

}  // namespace

CheckSuite parse_suite(const std::string& name) {
  if (name == "signs") return CheckSuite::Signs;
  if (name == "oracle-a3") return CheckSuite::OracleA3;
  if (name == "independence") return CheckSuite::Independence;
  if (name == "codim") return CheckSuite::Codim;
  throw InputError("unknown check suite \"" + name + "\"");
}

std::string suite_name(CheckSuite suite) {
  switch (suite) {
    case CheckSuite::Signs: return "signs";
    case CheckSuite::OracleA3: return "oracle-a3";
    case CheckSuite::Independence: return "independence";
    case CheckSuite::Codim: return "codim";
  }
  return "?";
}

Json CheckReport::to_json() const {
  Json fails = Json::array();
  for (const auto& f : failures) {
    fails.push_back({{"orbit", qk::to_json(f.e, f.orbit)}, {"message", f.message}, {"detail", f.detail}});
  }
  return {{"suite", suite_name(suite)},
          {"orbits", orbits_checked},
          {"passed", passed()},
          {"failures", fails}};
}

std::vector<CheckFailure> check_orbit(const Quiver& q, CheckSuite suite, const DimVector& e,
                                      const OrbitSpec& orbit) {
  std::vector<CheckFailure> out;
  auto fail = [&](std::string msg, Json detail) {
    out.push_back({e, orbit, std::move(msg), std::move(detail)});
  };
  switch (suite) {
    case CheckSuite::Signs: {
      const auto table = quiver_coefficients(q, e, orbit);
      const auto report = check_alternating(table);
      if (!report.ok()) {
        TensorElement bad(table.tensor.arity());
        for (const auto& [key, c] : report.violations) bad.add(key, c);
        fail("coefficients with the wrong sign", terms_to_json(bad));
      }
      break;
    }
    case CheckSuite::Codim: {
      const auto table = quiver_coefficients(q, e, orbit);
      const int d = min_degree(table.tensor);
      if (d != table.codim) {
        fail("minimal degree " + std::to_string(d) + " but codim " + std::to_string(table.codim),
             to_json(table));
      }
      break;
    }
    case CheckSuite::Independence: {
      const auto a = quiver_coefficients(q, e, orbit, PairChoice::MinimalSupport);
      const auto b = quiver_coefficients(q, e, orbit, PairChoice::AllRoots);
      if (a.codim != b.codim) {
        fail("codim differs between pairs " + a.pair.to_string() + " and " + b.pair.to_string(),
             nullptr);
      } else if (a.caveat.empty() ? !(a.tensor == b.tensor)
                                  : !(cohomological_part(a) == cohomological_part(b))) {
        fail("tables differ between pairs " + a.pair.to_string() + " and " + b.pair.to_string(),
             diff_json(a.tensor, b.tensor));
      }
      break;
    }
    case CheckSuite::OracleA3: {
      TensorElement want;
      switch (oracle_for(q)) {
        case Oracle::A2: {
          const int r = orbit.mult({1, 1});
          want = porteous(e[0], e[1], r);
          break;
        }
        case Oracle::Inbound:
          want = inbound_table(A3OrbitMults::from_orbit(orbit));
          break;
        case Oracle::Outbound:
          want = outbound_table(A3OrbitMults::from_orbit(orbit));
          break;
        case Oracle::None:
          throw InputError("oracle-a3 needs the quiver 1->2, 1->2<-3 or 1<-2->3");
      }
      const auto table = quiver_coefficients(q, e, orbit);
      if (!(table.tensor == want)) fail("engine differs from oracle", diff_json(table.tensor, want));
      break;
    }
  }
  return out;
}

CheckReport run_check(const Quiver& q, CheckSuite suite, int max_dim, unsigned threads) {
  if (max_dim < 0) throw InputError("--max-dim must be non-negative");
  if (!dynkin_type(q).dynkin) throw InputError("quiver is not of Dynkin type");
  if (suite == CheckSuite::OracleA3 && oracle_for(q) == Oracle::None) {
    throw InputError("oracle-a3 needs the quiver 1->2, 1->2<-3 or 1<-2->3");
  }
  std::vector<std::pair<DimVector, OrbitSpec>> work;
  for (const auto& e : dimension_vectors_up_to(q.num_vertices(), max_dim)) {
    for (auto& o : orbits(q, e)) work.emplace_back(e, std::move(o));
  }
  std::vector<std::vector<CheckFailure>> results(work.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t k = next++; k < work.size() && !failed; k = next++) {
      try {
        results[k] = check_orbit(q, suite, work[k].first, work[k].second);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  CheckReport report;
  report.suite = suite;
  report.orbits_checked = static_cast<int>(work.size());
  for (auto& r : results) {
    for (auto& f : r) report.failures.push_back(std::move(f));
  }
  return report;
}

}  // namespace qk
