#include "qk/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qk {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (!is_partition_sequence(parts_)) {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      s += (i ? "," : "") + std::to_string(parts_[i]);
    }
    throw std::invalid_argument("not a partition: " + s + ")");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::rectangle(int rows, int cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative rectangle");
  if (rows == 0 || cols == 0) return {};
  return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 0; i < inner.length(); ++i) {
    if (inner.parts_[i] > parts_[i]) return false;
  }
  return true;
}

bool Partition::is_rectangle() const {
  return parts_.empty() || parts_.front() == parts_.back();
}

Partition Partition::conjugate() const {
  std::vector<int> out(static_cast<std::size_t>(width()), 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++out[j];
  }
  Partition c;
  c.parts_ = std::move(out);
  return c;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int x : p.parts()) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool is_partition_sequence(std::span<const int> seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < 0) return false;
    if (i > 0 && seq[i] > seq[i - 1]) return false;
  }
  return true;
}

namespace {

void subpartitions_rec(const Partition& outer, std::vector<int>& cur, int row,
                       int cap, std::vector<Partition>& out) {
  out.emplace_back(cur);
  if (row >= outer.length()) return;
  int hi = std::min(cap, outer[row]);
  for (int v = 1; v <= hi; ++v) {
    cur.push_back(v);
    subpartitions_rec(outer, cur, row + 1, v, out);
    cur.pop_back();
  }
}

void partitions_rec(int remaining, int cap, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int v = std::min(remaining, cap); v >= 1; --v) {
    cur.push_back(v);
    partitions_rec(remaining - v, v, cur, out);
    cur.pop_back();
  }
}

void sort_by_weight(std::vector<Partition>& ps) {
  std::sort(ps.begin(), ps.end(), [](const Partition& a, const Partition& b) {
    int wa = a.weight(), wb = b.weight();
    return wa != wb ? wa < wb : a < b;
  });
}

}  // namespace

std::vector<Partition> subpartitions(const Partition& outer) {
  std::vector<Partition> out;
  std::vector<int> cur;
  subpartitions_rec(outer, cur, 0, outer.width(), out);
  sort_by_weight(out);
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto ps = partitions_of(k);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

Partition prepend_rectangle(int rows, int cols, const Partition& tail) {
  if (rows > 0 && tail.width() > cols) {
    throw std::invalid_argument("tail " + tail.to_string() +
                                " does not fit under rectangle width " +
                                std::to_string(cols));
  }
  std::vector<int> parts(static_cast<std::size_t>(rows), cols);
  parts.insert(parts.end(), tail.parts().begin(), tail.parts().end());
  return Partition(std::move(parts));
}

}  // namespace qk
