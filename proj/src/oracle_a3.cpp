#include "qk/oracle_a3.hpp"

#include <algorithm>

#include "qk/errors.hpp"
#include "qk/gamma.hpp"
#include "qk/tableau.hpp"

namespace qk {

namespace {

DimVector interval_root(int i, int j) {
  DimVector d(3, 0);
  for (int p = i; p <= j; ++p) d[p - 1] = 1;
  return d;
}

int sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

bool same_content(const Word& w, const Partition& mu) {
  auto c = content(w);
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c == mu.vec();
}

/// Number of set-valued tableaux T of `shape` with w(T) u(tail) a reverse
/// lattice word of content mu.
long count_lattice_tableaux(const SkewShape& shape, const Partition& tail, const Partition& mu) {
  const int excess = mu.weight() - shape.size() - tail.weight();
  if (excess < 0) return 0;
  const Word u = u_word(tail);
  long count = 0;
  for_each_svt(shape, std::max(mu.length(), 1), excess, [&](const SetValuedTableau& t) {
    Word w = word(t);
    w.insert(w.end(), u.begin(), u.end());
    if (is_reverse_lattice(w) && same_content(w, mu)) ++count;
  });
  return count;
}

}  // namespace

DimVector A3OrbitMults::dimension() const {
  return {m11 + m12 + m13, m12 + m13 + m22 + m23, m13 + m23 + m33};
}

OrbitSpec A3OrbitMults::to_orbit(const Quiver& q) const {
  return make_orbit(q, {{interval_root(1, 1), m11},
                        {interval_root(1, 2), m12},
                        {interval_root(1, 3), m13},
                        {interval_root(2, 2), m22},
                        {interval_root(2, 3), m23},
                        {interval_root(3, 3), m33}});
}

A3OrbitMults A3OrbitMults::from_orbit(const OrbitSpec& orbit) {
  A3OrbitMults m;
  m.m11 = orbit.mult(interval_root(1, 1));
  m.m12 = orbit.mult(interval_root(1, 2));
  m.m13 = orbit.mult(interval_root(1, 3));
  m.m22 = orbit.mult(interval_root(2, 2));
  m.m23 = orbit.mult(interval_root(2, 3));
  m.m33 = orbit.mult(interval_root(3, 3));
  int total = 0;
  for (const auto& [root, k] : orbit.mults) total += k;
  if (total != m.m11 + m.m12 + m.m13 + m.m22 + m.m23 + m.m33) {
    throw InputError("orbit is not an A3 orbit");
  }
  return m;
}

std::string A3OrbitMults::to_string() const {
  return "m11=" + std::to_string(m11) + " m12=" + std::to_string(m12) +
         " m13=" + std::to_string(m13) + " m22=" + std::to_string(m22) +
         " m23=" + std::to_string(m23) + " m33=" + std::to_string(m33);
}

std::vector<A3OrbitMults> a3_orbits(const DimVector& e) {
  if (e.size() != 3) throw InputError("a3_orbits: dimension vector must have 3 entries");
  std::vector<A3OrbitMults> out;
  for (int m13 = 0; m13 <= std::min({e[0], e[1], e[2]}); ++m13) {
    for (int m12 = 0; m12 + m13 <= std::min(e[0], e[1]); ++m12) {
      for (int m23 = 0; m23 + m13 <= e[2] && m12 + m13 + m23 <= e[1]; ++m23) {
        A3OrbitMults m{e[0] - m12 - m13, m12, m13, e[1] - m12 - m13 - m23, m23,
                       e[2] - m13 - m23};
        out.push_back(m);
      }
    }
  }
  return out;
}

TensorElement porteous(int e1, int e2, int r) {
  if (r < 0 || r > std::min(e1, e2)) throw InputError("porteous: rank out of range");
  TensorElement t(2);
  t.add(TensorKey{Partition{}, Partition::rectangle(e2 - r, e1 - r)}, 1);
  return t;
}

Coeff inbound_c(const Partition& lambda, const Partition& mu, const Partition& nu,
                const A3OrbitMults& m, OracleMethod method) {
  const Partition a = Partition::rectangle(m.m12, m.m33);
  const Partition b = Partition::rectangle(m.m23, m.m11);
  if (method == OracleMethod::Algebraic) {
    Coeff total = 0;
    for (const auto& s : coproduct_terms(a)) {
      if (s.left != lambda) continue;
      for (const auto& t : coproduct_terms(b)) {
        if (t.right != nu) continue;
        total += s.coeff * t.coeff * mul(s.right, t.left).coeff(mu);
      }
    }
    return total;
  }
  long count = 0;
  for (const auto& sigma : subpartitions(a)) {
    if (!rook_strip_complement(a, sigma, lambda)) continue;
    for (const auto& tau : subpartitions(b)) {
      if (!rook_strip_complement(b, tau, nu)) continue;
      count += count_lattice_tableaux(SkewShape(tau), sigma, mu);
    }
  }
  return sign(lambda.weight() + mu.weight() + nu.weight() - m.m33 * m.m12 - m.m11 * m.m23) * count;
}

TensorElement inbound_table(const A3OrbitMults& m) {
  const Partition a = Partition::rectangle(m.m12, m.m33);
  const Partition b = Partition::rectangle(m.m23, m.m11);
  const int cols = m.m11 + m.m13 + m.m33;
  TensorElement out(3);
  for (const auto& s : coproduct_terms(a)) {
    for (const auto& t : coproduct_terms(b)) {
      for (const auto& [mu, c] : mul(s.right, t.left).terms()) {
        if (mu.width() > cols) {
          throw InternalError("inbound_table: middle index " + mu.to_string() +
                              " is wider than the prepended rectangle");
        }
        out.add(TensorKey{s.left, prepend_rectangle(m.m22, cols, mu), t.right},
                s.coeff * t.coeff * c);
      }
    }
  }
  return out;
}

Coeff outbound_d(const Partition& rect, const Partition& lambda, const Partition& mu,
                 const Partition& nu, OracleMethod method) {
  if (!rect.is_rectangle()) throw InputError("outbound_d: " + rect.to_string() + " is not a rectangle");
  if (!rect.contains(lambda) || !rect.contains(mu) || !rect.contains(nu)) return 0;
  if (method == OracleMethod::Algebraic) {
    return coproduct2(rect).coeff(TensorKey{lambda, mu, nu});
  }
  long count = 0;
  for (const auto& tau : subpartitions(rect)) {
    if (!tau.contains(lambda) || !rook_strip_complement(rect, tau, nu)) continue;
    for (const auto& sigma : subpartitions(tau)) {
      if (!lambda.contains(sigma) || !is_rook_strip(lambda, sigma)) continue;
      count += count_lattice_tableaux(SkewShape(tau, sigma), Partition{}, mu);
    }
  }
  return sign(lambda.weight() + mu.weight() + nu.weight() - rect.weight()) * count;
}

TensorElement outbound_table(const A3OrbitMults& m) {
  const Partition r = Partition::rectangle(m.m13, m.m22);
  const TensorElement d = coproduct2(r);
  TensorElement out(3);
  for (const auto& [key, c] : d.terms()) {
    out.add(TensorKey{prepend_rectangle(m.m11, m.m22 + m.m23, key[0]), key[1],
                      prepend_rectangle(m.m33, m.m22 + m.m12, key[2])},
            c);
  }
  return out;
}

}  // namespace qk
