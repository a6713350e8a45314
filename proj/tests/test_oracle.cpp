#include <doctest.h>

#include "qk/engine.hpp"
#include "qk/errors.hpp"
#include "qk/gamma.hpp"
#include "qk/oracle_a3.hpp"

using qk::A3OrbitMults;
using qk::OracleMethod;
using qk::Partition;
using qk::TensorElement;
using qk::TensorKey;

namespace {

TensorElement single(TensorKey key, qk::Coeff c = 1) {
  TensorElement t(key.size());
  t.add(std::move(key), c);
  return t;
}

int sign(int x) { return x % 2 == 0 ? 1 : -1; }

std::vector<A3OrbitMults> small_orbits(int max_e) {
  std::vector<A3OrbitMults> out;
  for (const auto& e : qk::dimension_vectors_up_to(3, max_e)) {
    for (const auto& m : qk::a3_orbits(e)) out.push_back(m);
  }
  return out;
}

}  // namespace

TEST_CASE("Porteous") {
  CHECK(qk::porteous(1, 1, 0) == single({Partition{}, Partition{1}}));
  CHECK(qk::porteous(2, 3, 2) == TensorElement::unit(2));
  CHECK(qk::porteous(3, 2, 1) == single({Partition{}, Partition{2}}));
  CHECK_THROWS_AS(qk::porteous(1, 1, 2), qk::InputError);
}

TEST_CASE("A3 orbit bookkeeping") {
  const A3OrbitMults m{1, 2, 3, 4, 5, 6};
  CHECK(m.dimension() == qk::DimVector{6, 14, 14});
  for (const auto& q : {qk::Quiver::inbound_a3(), qk::Quiver::outbound_a3()}) {
    CHECK(A3OrbitMults::from_orbit(m.to_orbit(q)) == m);
  }
  for (const auto& e : qk::dimension_vectors_up_to(3, 3)) {
    CHECK(qk::a3_orbits(e).size() == qk::orbits(qk::Quiver::inbound_a3(), e).size());
    for (const auto& o : qk::a3_orbits(e)) CHECK(o.dimension() == e);
  }
}

TEST_CASE("inbound coefficient examples") {
  A3OrbitMults m13;
  m13.m13 = 1;
  CHECK(qk::inbound_table(m13) == TensorElement::unit(3));

  A3OrbitMults m1223;
  m1223.m12 = m1223.m23 = 1;
  for (const auto& mu : qk::partitions_up_to(2)) {
    CHECK(qk::inbound_c({}, mu, {}, m1223) == (mu.empty() ? 1 : 0));
  }

  A3OrbitMults m22;
  m22.m22 = 2;
  CHECK(qk::inbound_table(m22) == TensorElement::unit(3));

  A3OrbitMults zero;
  zero.m11 = zero.m22 = zero.m33 = 1;
  const auto q = qk::Quiver::inbound_a3();
  CHECK(qk::quiver_coefficients(q, {1, 1, 1}, zero.to_orbit(q)).tensor == qk::inbound_table(zero));
}

TEST_CASE("inbound coefficient: algebraic and tableau counts agree") {
  for (const auto& m : small_orbits(2)) {
    const Partition a = Partition::rectangle(m.m12, m.m33);
    const Partition b = Partition::rectangle(m.m23, m.m11);
    for (const auto& lam : qk::subpartitions(a)) {
      for (const auto& nu : qk::subpartitions(b)) {
        for (const auto& mu : qk::partitions_up_to(a.weight() + b.weight())) {
          CAPTURE(m.to_string());
          const qk::Coeff alg = qk::inbound_c(lam, mu, nu, m, OracleMethod::Algebraic);
          CHECK(alg == qk::inbound_c(lam, mu, nu, m, OracleMethod::Tableaux));
          if (alg != 0) {
            CHECK(mu.width() <= m.m11 + m.m33);
            CHECK(sign(lam.weight() + mu.weight() + nu.weight() - m.m33 * m.m12 - m.m11 * m.m23) *
                      alg >
                  0);
          }
        }
      }
    }
  }
}

TEST_CASE("outbound coefficient examples") {
  CHECK(qk::outbound_d({}, {}, {}, {}) == 1);
  CHECK(qk::outbound_d({}, {1}, {}, {}) == 0);
  CHECK(qk::outbound_d({1}, {1}, {}, {}) == 1);
  CHECK(qk::outbound_d({1}, {1}, {}, {}, OracleMethod::Tableaux) == 1);
  CHECK(qk::outbound_d({2, 2}, {3}, {}, {}) == 0);
  CHECK_THROWS_AS(qk::outbound_d({2, 1}, {}, {}, {}), qk::InputError);

  A3OrbitMults m;
  m.m11 = 1;
  m.m12 = 2;
  m.m22 = 1;
  m.m33 = 1;
  CHECK(qk::outbound_table(m) == single({Partition{1}, Partition{}, Partition{3}}));
}

TEST_CASE("outbound coefficient: algebraic and tableau counts agree") {
  for (const auto& rect : {Partition{}, Partition{1}, Partition{2}, Partition{1, 1},
                           Partition{2, 2}, Partition{3, 3}, Partition{2, 2, 2}}) {
    const auto subs = qk::subpartitions(rect);
    for (const auto& lam : subs) {
      for (const auto& mu : subs) {
        for (const auto& nu : subs) {
          CAPTURE(rect.to_string());
          CAPTURE(lam.to_string());
          CAPTURE(mu.to_string());
          CAPTURE(nu.to_string());
          const qk::Coeff alg = qk::outbound_d(rect, lam, mu, nu);
          CHECK(alg == qk::outbound_d(rect, lam, mu, nu, OracleMethod::Tableaux));
          if (alg != 0) {
            CHECK(sign(lam.weight() + mu.weight() + nu.weight() - rect.weight()) * alg > 0);
          }
        }
      }
    }
  }
}

TEST_CASE("oracle tables: signs and minimal degree") {
  const auto in = qk::Quiver::inbound_a3();
  const auto out = qk::Quiver::outbound_a3();
  for (const auto& m : small_orbits(3)) {
    const auto e = m.dimension();
    CAPTURE(m.to_string());
    const TensorElement ti = qk::inbound_table(m);
    const TensorElement to = qk::outbound_table(m);
    const int ci = qk::codim(in, e, qk::minimal_resolution_pair(in, m.to_orbit(in)));
    const int co = qk::codim(out, e, qk::minimal_resolution_pair(out, m.to_orbit(out)));
    CHECK(qk::min_degree(ti) == ci);
    CHECK(qk::min_degree(to) == co);
    CHECK(qk::check_alternating({ti, ci, {}, {}}).ok());
    CHECK(qk::check_alternating({to, co, {}, {}}).ok());
  }
}
