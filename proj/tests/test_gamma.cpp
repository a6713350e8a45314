#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qk/gamma.hpp"

using qk::GammaElement;
using qk::Partition;
using qk::TensorElement;
using qk::TensorKey;

namespace {

GammaElement G(const Partition& p, qk::Coeff c = 1) { return GammaElement(p, c); }

std::vector<Partition> upto(int n) { return qk::partitions_up_to(n); }

}  // namespace

TEST_CASE("product examples") {
  CHECK(qk::lr_coeff({1}, {1}, {2}) == 1);
  CHECK(qk::lr_coeff({1}, {1}, {1, 1}) == 1);
  CHECK(qk::lr_coeff({1}, {1}, {2, 1}) == -1);
  CHECK(qk::lr_coeff({2}, {1}, {3, 1}) == -1);
  CHECK(qk::mul(Partition{1}, Partition{1}) == G({2}) + G({1, 1}) - G({2, 1}));
  CHECK(qk::mul(Partition{2}, Partition{1}) == G({3}) + G({2, 1}) - G({3, 1}));
  for (const auto& lam : upto(4)) {
    CHECK(qk::lr_coeff({}, lam, lam) == 1);
    CHECK(qk::mul(Partition{}, lam) == G(lam));
  }
  GammaElement a = G({2}) - G({1, 1}, 3);
  CHECK(qk::mul(GammaElement::one(), a) == a);
}

TEST_CASE("product agrees with set-valued tableau brute force") {
  for (const auto& lam : upto(3)) {
    for (const auto& mu : upto(3)) {
      const GammaElement prod = qk::mul(lam, mu);
      for (const auto& nu : upto(lam.weight() + mu.weight() + 2)) {
        if (nu.length() > lam.length() + mu.length() + 1) continue;
        CAPTURE(lam.to_string());
        CAPTURE(mu.to_string());
        CAPTURE(nu.to_string());
        const long want = oracle::brute_lr(lam, mu, nu);
        CHECK(prod.coeff(nu) == want);
        CHECK(qk::lr_coeff(lam, mu, nu) == want);
      }
    }
  }
}

TEST_CASE("product agrees with polynomial multiplication") {
  // G_lambda G_mu = sum_nu c G_nu as polynomials in 3 variables, up to degree 7.
  const int vars = 3, deg = 7;
  for (const auto& lam : upto(3)) {
    for (const auto& mu : upto(3)) {
      const auto lhs = oracle::poly_mul(qk::expand_single(lam, vars, deg),
                                        qk::expand_single(mu, vars, deg), deg);
      qk::Polynomial rhs;
      for (const auto& [nu, c] : qk::mul(lam, mu).terms()) {
        if (nu.weight() > deg) continue;
        for (const auto& [e, k] : qk::expand_single(nu, vars, deg)) rhs[e] += c * k;
      }
      std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
      CAPTURE(lam.to_string());
      CAPTURE(mu.to_string());
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("support and sign laws") {
  for (const auto& lam : upto(3)) {
    for (const auto& mu : upto(3)) {
      for (const auto& [nu, c] : qk::mul(lam, mu).terms()) {
        CHECK(nu.contains(lam));
        CHECK(nu.contains(mu));
        CHECK(nu.weight() >= lam.weight() + mu.weight());
        const int s = (nu.weight() - lam.weight() - mu.weight()) % 2 ? -1 : 1;
        CHECK(s * c > 0);
      }
    }
  }
  for (const auto& nu : upto(4)) {
    for (const auto& t : qk::coproduct_terms(nu)) {
      CHECK(nu.contains(t.left));
      CHECK(nu.contains(t.right));
      CHECK(nu.weight() <= t.left.weight() + t.right.weight());
      const int s = (t.left.weight() + t.right.weight() - nu.weight()) % 2 ? -1 : 1;
      CHECK(s * t.coeff > 0);
    }
  }
}

TEST_CASE("classical limit") {
  for (const auto& lam : upto(3)) {
    for (const auto& mu : upto(3)) {
      for (const auto& nu : qk::partitions_of(lam.weight() + mu.weight())) {
        CHECK(qk::mul(lam, mu).coeff(nu) == oracle::classical_lr(lam, mu, nu));
      }
    }
  }
}

TEST_CASE("coproduct examples") {
  CHECK(qk::coproduct_coeff({}, {}, {}) == 1);
  CHECK(qk::coproduct_coeff({1}, {1}, {1}) == -1);
  CHECK(qk::coproduct_coeff({1}, {}, {1}) == 1);
  CHECK(qk::coproduct_coeff({}, {1}, {1}) == 1);

  TensorElement d0(2);
  d0.add({Partition{}, Partition{}}, 1);
  CHECK(qk::coproduct(Partition{}) == d0);

  TensorElement d1(2);
  d1.add({Partition{1}, Partition{}}, 1);
  d1.add({Partition{}, Partition{1}}, 1);
  d1.add({Partition{1}, Partition{1}}, -1);
  CHECK(qk::coproduct(Partition{1}) == d1);

  CHECK(qk::coproduct2(Partition{1}).coeff({Partition{1}, Partition{1}, Partition{1}}) == 1);
}

TEST_CASE("coproduct terms agree with coproduct_coeff") {
  for (const auto& nu : upto(4)) {
    const TensorElement d = qk::coproduct(nu);
    for (const auto& lam : qk::subpartitions(nu)) {
      for (const auto& mu : qk::subpartitions(nu)) {
        CHECK(d.coeff({lam, mu}) == qk::coproduct_coeff(lam, mu, nu));
      }
    }
  }
}

TEST_CASE("rectangle independence of d") {
  for (const auto& nu : upto(3)) {
    for (const auto& lam : qk::subpartitions(nu)) {
      for (const auto& mu : qk::subpartitions(nu)) {
        const int rows = std::max(lam.length(), mu.length());
        const int cols = std::max(lam.width(), mu.width());
        const qk::Coeff base = qk::coproduct_coeff(lam, mu, nu);
        CHECK(qk::coproduct_coeff(lam, mu, nu, Partition::rectangle(rows + 1, cols)) == base);
        CHECK(qk::coproduct_coeff(lam, mu, nu, Partition::rectangle(rows, cols + 2)) == base);
      }
    }
  }
  CHECK_THROWS(qk::coproduct_coeff({2}, {}, {2}, Partition{1}));
}

TEST_CASE("coproduct agrees with polynomial splitting") {
  // G_nu(x1,x2,y1) = sum d G_lambda(x1,x2) G_mu(y1).
  const int deg = 6;
  for (const auto& nu : upto(3)) {
    const auto whole = qk::expand_single(nu, 3, deg);
    qk::Polynomial rhs;
    for (const auto& t : qk::coproduct_terms(nu)) {
      auto left = qk::expand_single(t.left, 2, deg);
      auto right = qk::expand_single(t.right, 1, deg);
      for (const auto& [ea, ca] : left) {
        for (const auto& [eb, cb] : right) {
          std::vector<int> e{ea[0], ea[1], eb[0]};
          if (e[0] + e[1] + e[2] <= deg) rhs[e] += t.coeff * ca * cb;
        }
      }
    }
    std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
    CAPTURE(nu.to_string());
    CHECK(rhs == whole);
  }
}

TEST_CASE("skew expansions") {
  for (const auto& lam : upto(4)) CHECK(qk::skew_expand(qk::SkewShape(lam)) == G(lam));
  CHECK(qk::skew_expand(qk::SkewShape({1, 1}, {1})) == G({1}));
  CHECK(qk::skew_expand(qk::SkewShape({2, 1}, {1})) == G({2}) + G({1, 1}) - G({2, 1}));
  CHECK(qk::skew_expand(qk::SkewShape()) == GammaElement::one());
}

TEST_CASE("straightening examples") {
  const std::vector<int> a{2, 1}, b{1, -1}, c{0, 1}, d{0}, e{};
  CHECK(qk::straighten(a) == G({2, 1}));
  CHECK(qk::straighten(b) == G({1}));
  CHECK(qk::straighten(c) == G({1, 1}));
  CHECK(qk::straighten(d) == GammaElement::one());
  CHECK(qk::straighten(e) == GammaElement::one());
  const std::vector<int> f{1, 2};
  // One step: sum over k = 2..2 of G_{2,k}, minus an empty sum.
  CHECK(qk::straighten(f) == G({2, 2}));
}

TEST_CASE("straightening does not depend on the ascent chosen") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> len(0, 5), entry(-3, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> seq(len(rng));
    for (int& x : seq) x = entry(rng);
    CAPTURE(seq);
    CHECK(qk::straighten(seq, qk::Ascent::Leftmost) == qk::straighten(seq, qk::Ascent::Rightmost));
  }
}

TEST_CASE("straightening depth guard") {
  const std::vector<int> seq{-2, 3, 0, 4};
  qk::clear_gamma_caches();
  qk::set_straighten_depth_limit(1);
  CHECK_THROWS_AS(qk::straighten(seq), qk::StraightenDepthError);
  qk::set_straighten_depth_limit(std::nullopt);
  CHECK_NOTHROW(qk::straighten(seq));
}

TEST_CASE("tensor helpers") {
  TensorElement u = TensorElement::unit(2);
  TensorElement g1(2);
  g1.add({Partition{1}, Partition{}}, 1);
  CHECK(qk::tensor_mul_at(u, 0, G({1})) == g1);
  CHECK_THROWS_AS(qk::tensor_mul_at(u, 2, G({1})), std::out_of_range);

  TensorElement p(2);
  p.add({Partition{1}, Partition{2}}, 1);
  p.add({Partition{3}, Partition{}}, 1);
  CHECK(qk::min_degree(p) == 3);
  CHECK(qk::project_degree(p, 4).is_zero());
  CHECK(qk::project_degree(p, 3) == p);
  CHECK(qk::min_degree(TensorElement(2)) == -1);
  CHECK(qk::append_unit(u) == TensorElement::unit(3));
  CHECK_THROWS(p.add({Partition{}}, 1));

  TensorElement q(2);
  q.add({Partition{1}, Partition{1}}, 2);
  q.add({Partition{1}, Partition{1}}, -2);
  CHECK(q.is_zero());
}
