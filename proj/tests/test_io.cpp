#include <doctest.h>

#include "qk/checks.hpp"
#include "qk/errors.hpp"
#include "qk/io.hpp"
#include "qk/oracle_a3.hpp"

using qk::Json;
using qk::Partition;
using qk::Quiver;

TEST_CASE("quiver and orbit files") {
  const Quiver q = qk::quiver_from_json(Json::parse(R"({"vertices": 3, "arrows": [[1,2],[3,2]]})"));
  CHECK(q == Quiver::inbound_a3());
  CHECK(qk::quiver_from_json(qk::to_json(q)) == q);
  CHECK_THROWS_AS(qk::quiver_from_json(Json::parse(R"({"vertices": 2, "arrows": [[1,3]]})")),
                  qk::InputError);
  CHECK_THROWS_AS(qk::quiver_from_json(Json::parse(R"({"arrows": []})")), qk::InputError);
  CHECK_THROWS_AS(qk::quiver_from_json(Json::parse(R"({"vertices": 2, "arrows": [[1]]})")),
                  qk::InputError);

  const auto [e, o] = qk::orbit_from_json(
      q, Json::parse(R"({"dim": [1,1,1], "mults": [{"root": [1,1,0], "m": 1}, {"root": [0,0,1], "m": 1}]})"));
  CHECK(e == qk::DimVector{1, 1, 1});
  CHECK(o.mult({1, 1, 0}) == 1);
  const auto again = qk::orbit_from_json(q, qk::to_json(e, o));
  CHECK(again.second == o);
  CHECK_THROWS_AS(qk::orbit_from_json(q, Json::parse(R"({"dim": [1,1,1], "mults": [{"root": [1,1,0], "m": 1}]})")),
                  qk::InputError);
  CHECK_THROWS_AS(qk::orbit_from_json(q, Json::parse(R"({"dim": [1,2,1], "mults": [{"root": [1,2,1], "m": 1}]})")),
                  qk::InputError);
}

TEST_CASE("pairs and representations") {
  const auto p = qk::pair_from_json(Json::parse(R"({"i": [2,1], "r": [1,1]})"));
  CHECK(p.i == std::vector<int>{2, 1});
  CHECK(qk::pair_from_json(qk::to_json(p)) == p);
  CHECK_THROWS_AS(qk::pair_from_json(Json::parse(R"({"i": [2,1], "r": [1]})")), qk::InputError);

  const Quiver q(2, {{1, 2}});
  const auto rep = qk::rep_from_json(q, Json::parse(R"({"dim": [2,1], "maps": [[[1, 2]]]})"));
  CHECK(rep.maps[0].rows == 1);
  CHECK(rep.maps[0].cols == 2);
  CHECK(rep.maps[0].at(0, 1) == 2);
  CHECK(qk::to_json(rep) == Json::parse(R"({"dim": [2,1], "maps": [[[1, 2]]]})"));
  CHECK_THROWS_AS(qk::rep_from_json(q, Json::parse(R"({"dim": [2,1], "maps": [[[1]]]})")),
                  qk::InputError);
  CHECK_THROWS_AS(qk::rep_from_json(q, Json::parse(R"({"dim": [2,1], "maps": []})")),
                  qk::InputError);
}

TEST_CASE("coefficient output round-trips") {
  const Quiver q = Quiver::inbound_a3();
  for (const auto& e : qk::dimension_vectors_up_to(3, 2)) {
    for (const auto& o : qk::orbits(q, e)) {
      const auto table = qk::quiver_coefficients(q, e, o);
      const Json j = qk::to_json(table);
      const std::string text = j.dump();
      const auto back = qk::table_from_json(Json::parse(text), 3);
      CHECK(back.tensor == table.tensor);
      CHECK(back.codim == table.codim);
      CHECK(back.pair == table.pair);
      CHECK(qk::to_json(back).dump() == text);
    }
  }
}

TEST_CASE("canonical term order") {
  qk::TensorElement t(2);
  t.add({Partition{1, 1}, Partition{}}, 1);
  t.add({Partition{}, Partition{2}}, 1);
  t.add({Partition{1}, Partition{1}}, 1);
  t.add({Partition{}, Partition{1}}, -1);
  const Json j = qk::terms_to_json(t);
  REQUIRE(j.size() == 4);
  CHECK(j[0]["mu"] == Json::parse("[[],[1]]"));
  CHECK(j[1]["mu"] == Json::parse("[[],[2]]"));
  CHECK(j[2]["mu"] == Json::parse("[[1],[1]]"));
  CHECK(j[3]["mu"] == Json::parse("[[1,1],[]]"));

  // Example: A2, e = (3,2), rank 1.
  const Quiver a2(2, {{1, 2}});
  const auto o = qk::make_orbit(a2, {{{1, 1}, 1}, {{1, 0}, 2}, {{0, 1}, 1}});
  const Json out = qk::to_json(qk::quiver_coefficients(a2, {3, 2}, o));
  CHECK(out["terms"] == Json::parse(R"([{"mu": [[],[2]], "coeff": 1}])"));
  CHECK(out["caveat"].is_null());
  CHECK(out["codim"] == 2);
  const std::string text = qk::table_to_text(qk::quiver_coefficients(a2, {3, 2}, o));
  CHECK(text.find("((), (2))") != std::string::npos);
  CHECK(Json::parse(qk::dump_table(out)) == out);
  CHECK(qk::dump_table(out).find(R"({"mu": [[],[2]], "coeff": 1})") != std::string::npos);
}

TEST_CASE("check suites") {
  const Quiver in = Quiver::inbound_a3();
  for (auto s : {qk::CheckSuite::Signs, qk::CheckSuite::OracleA3, qk::CheckSuite::Independence,
                 qk::CheckSuite::Codim}) {
    CHECK(qk::parse_suite(qk::suite_name(s)) == s);
    const auto one = qk::run_check(in, s, 2, 1);
    const auto many = qk::run_check(in, s, 2, 3);
    CHECK(one.passed());
    CHECK(one.orbits_checked == 74);
    CHECK(one.to_json() == many.to_json());
  }
  CHECK_THROWS_AS(qk::parse_suite("bogus"), qk::InputError);
  CHECK_THROWS_AS(qk::run_check(Quiver::equioriented_a(3), qk::CheckSuite::OracleA3, 1),
                  qk::InputError);
  CHECK_THROWS_AS(qk::run_check(Quiver(2, {{1, 2}, {1, 2}}), qk::CheckSuite::Signs, 1),
                  qk::InputError);
}
