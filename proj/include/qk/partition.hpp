#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qk {

/// A partition in canonical form: weakly decreasing positive parts, no
/// trailing zeros. (2,1,0) and (2,1) construct the same value.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  /// The rectangle with `rows` rows of `cols` boxes each.
  static Partition rectangle(int rows, int cols);

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }

  /// Part i (0-based); zero past the length.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  int length() const { return static_cast<int>(parts_.size()); }
  int width() const { return parts_.empty() ? 0 : parts_.front(); }
  int weight() const;
  bool empty() const { return parts_.empty(); }

  /// True if `inner` fits inside this diagram.
  bool contains(const Partition& inner) const;
  bool is_rectangle() const;

  Partition conjugate() const;
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

inline Partition conjugate(const Partition& p) { return p.conjugate(); }

/// True if `seq` is weakly decreasing and non-negative (trailing zeros allowed).
bool is_partition_sequence(std::span<const int> seq);

/// All partitions contained in `outer`, ordered by weight then lexicographically.
std::vector<Partition> subpartitions(const Partition& outer);

/// All partitions of weight exactly n.
std::vector<Partition> partitions_of(int n);

/// All partitions of weight at most n.
std::vector<Partition> partitions_up_to(int n);

/// Concatenate a partition after a leading rectangle: ((cols)^rows, tail).
/// Requires tail.width() <= cols.
Partition prepend_rectangle(int rows, int cols, const Partition& tail);

}  // namespace qk
