#include "qk/engine.hpp"

#include <string>

#include "qk/errors.hpp"
#include "qk/gamma.hpp"

namespace qk {

TensorElement psi(const TensorElement& p, int i) {
  const std::size_t n = p.arity();
  if (i < 1 || static_cast<std::size_t>(i) >= n) {
    throw std::out_of_range("psi: slot " + std::to_string(i) + " out of range");
  }
  const std::size_t slot = static_cast<std::size_t>(i) - 1;
  TensorElement out(n);
  for (const auto& [key, coeff] : p.terms()) {
    for (const auto& t : coproduct_terms(key[slot])) {
      const GammaElement& prod = mul(t.right, key.back());
      for (const auto& [nu, c] : prod.terms()) {
        TensorKey k = key;
        k[slot] = t.left;
        k.back() = nu;
        out.add(std::move(k), coeff * t.coeff * c);
      }
    }
  }
  return out;
}

TensorElement a_op(const TensorElement& p, int i, int r, int c) {
  const std::size_t n = p.arity();
  if (n == 0 || i < 1 || static_cast<std::size_t>(i) >= n) {
    throw std::out_of_range("a_op: slot " + std::to_string(i) + " out of range");
  }
  if (r < 0) throw InputError("a_op: r must be non-negative");
  const std::size_t slot = static_cast<std::size_t>(i) - 1;
  TensorElement out(n - 1);
  std::vector<int> seq;
  for (const auto& [key, coeff] : p.terms()) {
    const Partition& nu = key.back();
    if (nu.length() > r) continue;
    seq.clear();
    for (int k = 0; k < r; ++k) seq.push_back(c + nu[k]);
    for (int part : key[slot].parts()) seq.push_back(part);
    const GammaElement g = straighten(seq);
    for (const auto& [lam, s] : g.terms()) {
      TensorKey k(key.begin(), key.end() - 1);
      k[slot] = lam;
      out.add(std::move(k), coeff * s);
    }
  }
  return out;
}

TensorElement phi(const Quiver& q, const DimVector& e, const TensorElement& p, int i, int r) {
  if (i < 1 || i > q.num_vertices()) {
    throw InputError("phi: vertex " + std::to_string(i) + " out of range");
  }
  if (r > e[i - 1]) {
    throw InputError("phi: r = " + std::to_string(r) + " exceeds e_" + std::to_string(i) + " = " +
                     std::to_string(e[i - 1]));
  }
  const int c = q.in_rank(e, i) - e[i - 1] + r;
  TensorElement t = append_unit(p);
  for (int h : q.heads_from(i)) t = psi(t, h);
  return a_op(t, i, r, c);
}

TensorElement coefficients(const Quiver& q, const DimVector& e, const ResolutionPair& pair) {
  validate_pair(q, e, pair);
  const std::size_t m = pair.size();
  std::vector<DimVector> stages(m + 1, e);
  for (std::size_t k = 0; k < m; ++k) {
    stages[k + 1] = stages[k];
    stages[k + 1][pair.i[k] - 1] -= pair.r[k];
  }
  TensorElement p = TensorElement::unit(static_cast<std::size_t>(q.num_vertices()));
  for (std::size_t k = m; k-- > 0;) p = phi(q, stages[k], p, pair.i[k], pair.r[k]);
  return p;
}

namespace {

std::string caveat_for(const Quiver& q) {
  const DynkinType t = dynkin_type(q);
  if (!t.dynkin) throw InputError("quiver is not of Dynkin type");
  return t.is_type_a() ? std::string() : std::string(kRationalSingularitiesCaveat);
}

}  // namespace

CoefficientTable quiver_coefficients(const Quiver& q, const DimVector& e, const OrbitSpec& orbit,
                                     const ResolutionPair& pair) {
  std::string caveat = caveat_for(q);
  validate_orbit(q, e, orbit);
  CoefficientTable table{coefficients(q, e, pair), codim(q, e, pair), pair, std::move(caveat)};
  return table;
}

CoefficientTable quiver_coefficients(const Quiver& q, const DimVector& e, const OrbitSpec& orbit,
                                     PairChoice choice) {
  caveat_for(q);
  validate_orbit(q, e, orbit);
  const ResolutionPair pair = choice == PairChoice::MinimalSupport
                                  ? minimal_resolution_pair(q, orbit)
                                  : full_resolution_pair(q, orbit);
  return quiver_coefficients(q, e, orbit, pair);
}

TensorElement cohomological_part(const CoefficientTable& table) {
  return project_degree(table.tensor, table.codim);
}

AlternatingReport check_alternating(const CoefficientTable& table) {
  AlternatingReport report;
  for (const auto& [key, coeff] : table.tensor.sorted_terms()) {
    const bool even = (degree(key) - table.codim) % 2 == 0;
    if ((even && coeff < 0) || (!even && coeff > 0)) report.violations.emplace_back(key, coeff);
  }
  return report;
}

CoefficientTable dual_coefficients(const Quiver& q, const DimVector& e, const OrbitSpec& orbit) {
  const Quiver rev = q.reversed();
  return quiver_coefficients(rev, e, make_orbit(rev, orbit.mults));
}

}  // namespace qk
