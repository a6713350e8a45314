#pragma once

#include <string>
#include <vector>

#include "qk/quiver.hpp"

namespace qk {

using RootSet = std::vector<DimVector>;

struct DirectedPartition {
  std::vector<RootSet> blocks;
  bool operator==(const DirectedPartition&) const = default;
};

struct ResolutionPair {
  std::vector<int> i;  // vertices, 1-based
  std::vector<int> r;
  std::size_t size() const { return i.size(); }
  std::string to_string() const;
  bool operator==(const ResolutionPair&) const = default;
};

/// Empty string if the partition is directed, otherwise a description of
/// the first violation found.
std::string directed_violation(const Quiver& q, const DirectedPartition& dp);
bool is_directed(const Quiver& q, const DirectedPartition& dp);

/// The largest I in roots with <a,b> >= 0 for a in I, b in roots, and
/// <b,a> <= 0 for b outside I. Result keeps the input order.
RootSet greedy_block(const Quiver& q, const RootSet& roots);

/// Shortest directed partition obtained by repeated greedy_block.
DirectedPartition directed_partition(const Quiver& q, const RootSet& roots);

ResolutionPair resolution_pair(const Quiver& q, const OrbitSpec& orbit,
                               const DirectedPartition& dp);

/// Greedy pair on the orbit's own support.
ResolutionPair minimal_resolution_pair(const Quiver& q, const OrbitSpec& orbit);

/// Greedy pair on all positive roots.
ResolutionPair full_resolution_pair(const Quiver& q, const OrbitSpec& orbit);

/// Throws InputError unless every vertex is in range, every r_j > 0 and the
/// r-values at each vertex sum to at most e_v.
void validate_pair(const Quiver& q, const DimVector& e, const ResolutionPair& pair);

/// dim V - dim V_{i,r}.
int codim(const Quiver& q, const DimVector& e, const ResolutionPair& pair);

}  // namespace qk
