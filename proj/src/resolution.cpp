#include "qk/resolution.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qk/errors.hpp"

namespace qk {

std::string ResolutionPair::to_string() const {
  std::ostringstream out;
  out << "i=(";
  for (std::size_t k = 0; k < i.size(); ++k) out << (k ? "," : "") << i[k];
  out << ") r=(";
  for (std::size_t k = 0; k < r.size(); ++k) out << (k ? "," : "") << r[k];
  out << ")";
  return out.str();
}

std::string directed_violation(const Quiver& q, const DirectedPartition& dp) {
  for (std::size_t j = 0; j < dp.blocks.size(); ++j) {
    for (const auto& a : dp.blocks[j]) {
      for (const auto& b : dp.blocks[j]) {
        if (euler_form(q, a, b) < 0) {
          return "block " + std::to_string(j + 1) + ": <" + dim_string(a) + "," +
                 dim_string(b) + "> < 0";
        }
      }
      for (std::size_t k = j + 1; k < dp.blocks.size(); ++k) {
        for (const auto& b : dp.blocks[k]) {
          if (euler_form(q, a, b) < 0 || euler_form(q, b, a) > 0) {
            return "blocks " + std::to_string(j + 1) + "," + std::to_string(k + 1) + ": roots " +
                   dim_string(a) + " and " + dim_string(b) + " out of order";
          }
        }
      }
    }
  }
  return {};
}

bool is_directed(const Quiver& q, const DirectedPartition& dp) {
  return directed_violation(q, dp).empty();
}

RootSet greedy_block(const Quiver& q, const RootSet& roots) {
  if (roots.empty()) return {};
  std::vector<char> in(roots.size(), 0);
  for (std::size_t a = 0; a < roots.size(); ++a) {
    in[a] = std::all_of(roots.begin(), roots.end(),
                        [&](const DimVector& b) { return euler_form(q, roots[a], b) >= 0; });
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < roots.size(); ++a) {
      if (!in[a]) continue;
      for (std::size_t b = 0; b < roots.size(); ++b) {
        if (!in[b] && euler_form(q, roots[b], roots[a]) > 0) {
          in[a] = 0;
          changed = true;
          break;
        }
      }
    }
  }
  RootSet out;
  for (std::size_t a = 0; a < roots.size(); ++a) {
    if (in[a]) out.push_back(roots[a]);
  }
  if (out.empty()) throw InternalError("greedy_block: no root survives the greedy selection");
  return out;
}

DirectedPartition directed_partition(const Quiver& q, const RootSet& roots) {
  DirectedPartition dp;
  RootSet rest = roots;
  while (!rest.empty()) {
    RootSet block = greedy_block(q, rest);
    RootSet next;
    for (const auto& r : rest) {
      if (std::find(block.begin(), block.end(), r) == block.end()) next.push_back(r);
    }
    dp.blocks.push_back(std::move(block));
    rest = std::move(next);
  }
  if (auto why = directed_violation(q, dp); !why.empty()) {
    throw InternalError("directed_partition: " + why);
  }
  return dp;
}

ResolutionPair resolution_pair(const Quiver& q, const OrbitSpec& orbit,
                               const DirectedPartition& dp) {
  for (const auto& [root, m] : orbit.mults) {
    bool covered = std::any_of(dp.blocks.begin(), dp.blocks.end(), [&](const RootSet& b) {
      return std::find(b.begin(), b.end(), root) != b.end();
    });
    if (!covered) {
      throw InputError("resolution_pair: root " + dim_string(root) +
                       " of the orbit is not covered by the directed partition");
    }
  }
  const int n = q.num_vertices();
  const auto depth = q.depth();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return depth[a] < depth[b]; });

  ResolutionPair pair;
  for (const auto& block : dp.blocks) {
    DimVector p(n, 0);
    for (const auto& root : block) {
      const int m = orbit.mult(root);
      for (int v = 0; v < n; ++v) p[v] += m * root[v];
    }
    for (int v : order) {
      if (p[v] != 0) {
        pair.i.push_back(v + 1);
        pair.r.push_back(p[v]);
      }
    }
  }
  return pair;
}

ResolutionPair minimal_resolution_pair(const Quiver& q, const OrbitSpec& orbit) {
  return resolution_pair(q, orbit, directed_partition(q, orbit.support()));
}

ResolutionPair full_resolution_pair(const Quiver& q, const OrbitSpec& orbit) {
  return resolution_pair(q, orbit, directed_partition(q, positive_roots(q)));
}

void validate_pair(const Quiver& q, const DimVector& e, const ResolutionPair& pair) {
  const int n = q.num_vertices();
  if (static_cast<int>(e.size()) != n) throw InputError("dimension vector has wrong length");
  if (pair.i.size() != pair.r.size()) throw InputError("resolution pair: i and r differ in length");
  DimVector used(n, 0);
  for (std::size_t k = 0; k < pair.size(); ++k) {
    const int v = pair.i[k];
    if (v < 1 || v > n) throw InputError("resolution pair: vertex " + std::to_string(v) + " out of range");
    if (pair.r[k] <= 0) throw InputError("resolution pair: r values must be positive");
    used[v - 1] += pair.r[k];
  }
  for (int v = 0; v < n; ++v) {
    if (e[v] < 0) throw InputError("dimension vector has a negative entry");
    if (used[v] > e[v]) {
      throw InputError("resolution pair: r-values at vertex " + std::to_string(v + 1) +
                       " exceed e = " + std::to_string(e[v]));
    }
  }
}

int codim(const Quiver& q, const DimVector& e, const ResolutionPair& pair) {
  validate_pair(q, e, pair);
  DimVector stage = e;
  int fiber = 0;
  for (std::size_t k = 0; k < pair.size(); ++k) {
    const int v = pair.i[k] - 1;
    const int r = pair.r[k];
    fiber += r * (stage[v] - r) - r * q.in_rank(stage, v + 1);
    stage[v] -= r;
  }
  return -fiber;
}

}  // namespace qk
