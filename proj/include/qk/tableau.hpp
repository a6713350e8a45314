#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "qk/partition.hpp"

namespace qk {

/// The skew diagram outer/inner. A straight shape has an empty inner partition.
struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape() = default;
  SkewShape(Partition outer_, Partition inner_ = {});

  int size() const { return outer.weight() - inner.weight(); }
  /// Boxes as (row, col), 0-based, in row-major order.
  std::vector<std::pair<int, int>> boxes() const;
  bool contains_box(int row, int col) const;
};

using Word = std::vector<int>;

/// A filling of a (skew) diagram by non-empty sets of positive integers.
/// Rows weakly increase (max of a box <= min of its right neighbour),
/// columns strictly increase (max of a box < min of the box below).
struct SetValuedTableau {
  SkewShape shape;
  /// One sorted set per box, in the row-major order of shape.boxes().
  std::vector<std::vector<int>> cells;

  /// Total number of entries |T|.
  int degree() const;
  bool is_valid() const;
};

/// Reading word: rows left to right, bottom row first, each box in
/// increasing order.
Word word(const SetValuedTableau& t);

/// Every occurrence of i >= 2 is followed by more (i-1)s than is.
bool is_reverse_lattice(const Word& w);

/// content[i-1] = number of occurrences of i.
std::vector<int> content(const Word& w);

/// (l^{mu_l}, ..., 2^{mu_2}, 1^{mu_1}).
Word u_word(const Partition& mu);

/// Visit every set-valued tableau of `shape` with entries <= max_entry and
/// |T| - |shape| <= max_excess, each exactly once. The tableau passed to
/// `visit` is only valid during the call.
void for_each_svt(const SkewShape& shape, int max_entry, int max_excess,
                  const std::function<void(const SetValuedTableau&)>& visit);

std::vector<SetValuedTableau> enumerate_svt(const SkewShape& shape,
                                            int max_entry, int max_excess);

/// Exponent vector (length num_vars) -> coefficient.
using Polynomial = std::map<std::vector<int>, std::int64_t>;

/// Terms of G_lambda(x_1..x_p) of total degree <= max_deg.
Polynomial expand_single(const Partition& lambda, int num_vars, int max_deg);

/// outer/inner is a skew shape with at most one box in each row and column.
bool is_rook_strip(const Partition& outer, const Partition& inner);

/// `placed` in the upper-left corner of rectangle R and the 180-degree
/// rotation of `rotated` in the lower-right corner cover R, and overlap in a
/// rook strip.
bool rook_strip_complement(const Partition& rect, const Partition& placed,
                           const Partition& rotated);

}  // namespace qk
