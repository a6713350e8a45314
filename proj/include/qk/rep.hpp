#pragma once

#include <cstdint>
#include <vector>

#include "qk/quiver.hpp"

namespace qk {

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> data;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}
  static IntMatrix identity(int n);

  std::int64_t& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  std::int64_t at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
  bool operator==(const IntMatrix&) const = default;
};

/// Exact rank over Q (fraction-free Bareiss elimination on big integers).
int matrix_rank(const IntMatrix& m);

/// A representation: one matrix of shape dims[h(a)] x dims[t(a)] per arrow,
/// in the quiver's arrow order.
struct QuiverRep {
  DimVector dims;
  std::vector<IntMatrix> maps;
};

void validate_rep(const Quiver& q, const QuiverRep& rep);

QuiverRep zero_rep(const Quiver& q, const DimVector& dims);

/// The indecomposable of a type-A quiver with dimension vector `root` (a 0/1
/// vector with connected support): 1x1 identities on arrows inside the
/// support, zero maps elsewhere. Throws InputError for other quivers.
QuiverRep indecomposable_rep(const Quiver& q, const DimVector& root);

QuiverRep direct_sum(const Quiver& q, const QuiverRep& a, const QuiverRep& b);

/// Block-diagonal sum of indecomposables, roots in orbit order.
QuiverRep orbit_representative(const Quiver& q, const OrbitSpec& orbit);

/// dim Hom(psi, phi) = dim A - rank(gamma_{psi,phi}).
int hom_dim(const Quiver& q, const QuiverRep& psi, const QuiverRep& phi);

struct HomRow {
  DimVector root;
  int hom_orbit;      // dim Hom(indec(root), orbit representative)
  int hom_candidate;  // dim Hom(indec(root), candidate)
};

struct MembershipReport {
  bool member = true;
  std::vector<HomRow> rows;
};

/// Bongartz criterion: candidate lies in the orbit closure iff
/// dim Hom(psi, candidate) >= dim Hom(psi, phi) for every indecomposable psi.
MembershipReport membership_report(const Quiver& q, const QuiverRep& candidate,
                                   const OrbitSpec& orbit);

bool in_orbit_closure(const Quiver& q, const QuiverRep& candidate, const OrbitSpec& orbit);

}  // namespace qk
