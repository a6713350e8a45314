#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qk {

/// Per-vertex integers indexed 0..n-1 for vertices 1..n.
using DimVector = std::vector<int>;

struct Arrow {
  int tail;  // 1-based
  int head;  // 1-based
  bool operator==(const Arrow&) const = default;
};

/// A quiver on vertices 1..n without oriented cycles. Parallel arrows are
/// allowed.
class Quiver {
 public:
  Quiver(int num_vertices, std::vector<Arrow> arrows);

  int num_vertices() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  /// Heads of the arrows leaving v, ascending, repeated per arrow.
  std::vector<int> heads_from(int v) const;

  /// rank(M_v) = sum of e_{t(a)} over arrows a with h(a) = v.
  int in_rank(const DimVector& e, int v) const;

  /// Length of the longest directed path ending at each vertex (0 at
  /// sources), indexed 0..n-1.
  std::vector<int> depth() const;

  Quiver reversed() const;

  /// 1 -> 2 <- 3
  static Quiver inbound_a3();
  /// 1 <- 2 -> 3
  static Quiver outbound_a3();
  /// 1 -> 2 -> ... -> n
  static Quiver equioriented_a(int n);

  bool operator==(const Quiver&) const = default;

 private:
  int n_;
  std::vector<Arrow> arrows_;
};

/// <a,b> = sum_i a_i b_i - sum_arrows a_{t} b_{h}.
int euler_form(const Quiver& q, const DimVector& a, const DimVector& b);

/// q(d) = <d,d>.
int tits_form(const Quiver& q, const DimVector& d);

struct DynkinComponent {
  char family = 'A';  // 'A', 'D' or 'E'
  int rank = 0;
  std::vector<int> vertices;  // 1-based, ascending
  std::string name() const { return std::string(1, family) + std::to_string(rank); }
};

struct DynkinType {
  bool dynkin = false;
  std::vector<DynkinComponent> components;

  /// "A3", "D4+A1", or "not-Dynkin".
  std::string to_string() const;
  bool is_type_a() const;
};

DynkinType dynkin_type(const Quiver& q);

/// All positive roots, ordered by height then lexicographically descending.
/// Throws InputError for non-Dynkin quivers.
std::vector<DimVector> positive_roots(const Quiver& q);

bool is_positive_root(const Quiver& q, const DimVector& d);

/// Root multiplicities (m_alpha) describing one orbit; roots kept in
/// positive_roots order, multiplicities positive.
struct OrbitSpec {
  std::vector<std::pair<DimVector, int>> mults;

  /// sum m_alpha * alpha over n vertices.
  DimVector dimension(int n) const;
  std::vector<DimVector> support() const;
  int mult(const DimVector& root) const;
  std::string to_string() const;
  bool operator==(const OrbitSpec&) const = default;
};

/// Build an orbit from (root, multiplicity) pairs in any order; zero
/// multiplicities are dropped and repeated roots merged.
OrbitSpec make_orbit(const Quiver& q, std::vector<std::pair<DimVector, int>> mults);

/// Checks every root is a positive root of q and the multiplicities sum to e.
void validate_orbit(const Quiver& q, const DimVector& e, const OrbitSpec& orbit);

/// Every orbit with dimension vector e, in a deterministic order.
std::vector<OrbitSpec> orbits(const Quiver& q, const DimVector& e);

/// All dimension vectors with 0 <= e_i <= max_entry, lexicographic.
std::vector<DimVector> dimension_vectors_up_to(int n, int max_entry);

std::string dim_string(const DimVector& d);

}  // namespace qk
