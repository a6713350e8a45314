#include "qk/rep.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "qk/errors.hpp"

namespace qk {

using boost::multiprecision::cpp_int;

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

int matrix_rank(const IntMatrix& m) {
  const int rows = m.rows, cols = m.cols;
  std::vector<std::vector<cpp_int>> a(rows, std::vector<cpp_int>(cols));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) a[r][c] = m.at(r, c);
  }
  cpp_int prev = 1;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int k = c + 1; k < cols; ++k) {
        // Exact by Sylvester's identity.
        a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

void validate_rep(const Quiver& q, const QuiverRep& rep) {
  const auto n = static_cast<std::size_t>(q.num_vertices());
  if (rep.dims.size() != n) throw InputError("representation: wrong number of vertex dimensions");
  if (rep.maps.size() != q.arrows().size()) {
    throw InputError("representation: expected " + std::to_string(q.arrows().size()) +
                     " arrow matrices, got " + std::to_string(rep.maps.size()));
  }
  for (std::size_t k = 0; k < rep.maps.size(); ++k) {
    const auto& a = q.arrows()[k];
    const auto& m = rep.maps[k];
    if (m.rows != rep.dims[a.head - 1] || m.cols != rep.dims[a.tail - 1]) {
      throw InputError("representation: matrix for arrow " + std::to_string(a.tail) + "->" +
                       std::to_string(a.head) + " must be " +
                       std::to_string(rep.dims[a.head - 1]) + "x" +
                       std::to_string(rep.dims[a.tail - 1]));
    }
  }
}

QuiverRep zero_rep(const Quiver& q, const DimVector& dims) {
  QuiverRep rep{dims, {}};
  for (const auto& a : q.arrows()) rep.maps.emplace_back(dims[a.head - 1], dims[a.tail - 1]);
  return rep;
}

QuiverRep indecomposable_rep(const Quiver& q, const DimVector& root) {
  if (!dynkin_type(q).is_type_a()) {
    throw InputError("indecomposable_rep: only quivers of type A are supported");
  }
  if (!is_positive_root(q, root)) {
    throw InputError("indecomposable_rep: " + dim_string(root) + " is not a positive root");
  }
  QuiverRep rep = zero_rep(q, root);
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto& a = q.arrows()[k];
    if (root[a.tail - 1] == 1 && root[a.head - 1] == 1) rep.maps[k].at(0, 0) = 1;
  }
  return rep;
}

QuiverRep direct_sum(const Quiver& q, const QuiverRep& a, const QuiverRep& b) {
  DimVector dims(a.dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) dims[i] = a.dims[i] + b.dims[i];
  QuiverRep out = zero_rep(q, dims);
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto& ma = a.maps[k];
    const auto& mb = b.maps[k];
    auto& m = out.maps[k];
    for (int r = 0; r < ma.rows; ++r) {
      for (int c = 0; c < ma.cols; ++c) m.at(r, c) = ma.at(r, c);
    }
    for (int r = 0; r < mb.rows; ++r) {
      for (int c = 0; c < mb.cols; ++c) m.at(ma.rows + r, ma.cols + c) = mb.at(r, c);
    }
  }
  return out;
}

QuiverRep orbit_representative(const Quiver& q, const OrbitSpec& orbit) {
  QuiverRep rep = zero_rep(q, DimVector(q.num_vertices(), 0));
  for (const auto& [root, m] : orbit.mults) {
    QuiverRep block = indecomposable_rep(q, root);
    for (int k = 0; k < m; ++k) rep = direct_sum(q, rep, block);
  }
  return rep;
}

int hom_dim(const Quiver& q, const QuiverRep& psi, const QuiverRep& phi) {
  validate_rep(q, psi);
  validate_rep(q, phi);
  const int n = q.num_vertices();
  // Unknowns: entries of beta_i (phi.dims[i] x psi.dims[i]).
  std::vector<int> offset(n + 1, 0);
  for (int i = 0; i < n; ++i) offset[i + 1] = offset[i] + phi.dims[i] * psi.dims[i];
  const int unknowns = offset[n];
  if (unknowns == 0) return 0;
  auto var = [&](int vertex, int r, int c) { return offset[vertex] + r * psi.dims[vertex] + c; };

  int equations = 0;
  for (const auto& a : q.arrows()) equations += phi.dims[a.head - 1] * psi.dims[a.tail - 1];
  IntMatrix gamma(equations, unknowns);
  int row = 0;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const int t = q.arrows()[k].tail - 1, h = q.arrows()[k].head - 1;
    const auto& pa = psi.maps[k];
    const auto& fa = phi.maps[k];
    // (beta_h psi_a - phi_a beta_t)[p][s]
    for (int p = 0; p < phi.dims[h]; ++p) {
      for (int s = 0; s < psi.dims[t]; ++s, ++row) {
        for (int j = 0; j < psi.dims[h]; ++j) gamma.at(row, var(h, p, j)) += pa.at(j, s);
        for (int j = 0; j < phi.dims[t]; ++j) gamma.at(row, var(t, j, s)) -= fa.at(p, j);
      }
    }
  }
  return unknowns - matrix_rank(gamma);
}

MembershipReport membership_report(const Quiver& q, const QuiverRep& candidate,
                                   const OrbitSpec& orbit) {
  validate_rep(q, candidate);
  validate_orbit(q, candidate.dims, orbit);
  const QuiverRep phi = orbit_representative(q, orbit);
  MembershipReport report;
  for (const auto& root : positive_roots(q)) {
    QuiverRep psi = indecomposable_rep(q, root);
    HomRow row{root, hom_dim(q, psi, phi), hom_dim(q, psi, candidate)};
    if (row.hom_candidate < row.hom_orbit) report.member = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

bool in_orbit_closure(const Quiver& q, const QuiverRep& candidate, const OrbitSpec& orbit) {
  return membership_report(q, candidate, orbit).member;
}

}  // namespace qk
