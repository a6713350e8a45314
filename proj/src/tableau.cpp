#include "qk/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace qk {

SkewShape::SkewShape(Partition outer_, Partition inner_)
    : outer(std::move(outer_)), inner(std::move(inner_)) {
  if (!outer.contains(inner)) {
    throw std::invalid_argument("skew shape " + outer.to_string() + "/" +
                                inner.to_string() + " has inner not inside outer");
  }
}

std::vector<std::pair<int, int>> SkewShape::boxes() const {
  std::vector<std::pair<int, int>> out;
  for (int r = 0; r < outer.length(); ++r) {
    for (int c = inner[r]; c < outer[r]; ++c) out.emplace_back(r, c);
  }
  return out;
}

bool SkewShape::contains_box(int row, int col) const {
  return row >= 0 && col >= inner[row] && col < outer[row];
}

int SetValuedTableau::degree() const {
  int d = 0;
  for (const auto& c : cells) d += static_cast<int>(c.size());
  return d;
}

bool SetValuedTableau::is_valid() const {
  auto bx = shape.boxes();
  if (bx.size() != cells.size()) return false;
  std::map<std::pair<int, int>, const std::vector<int>*> at;
  for (std::size_t k = 0; k < bx.size(); ++k) {
    const auto& c = cells[k];
    if (c.empty() || c.front() < 1) return false;
    if (!std::is_sorted(c.begin(), c.end())) return false;
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) return false;
    at[bx[k]] = &c;
  }
  for (const auto& [pos, cell] : at) {
    auto right = at.find({pos.first, pos.second + 1});
    if (right != at.end() && cell->back() > right->second->front()) return false;
    auto below = at.find({pos.first + 1, pos.second});
    if (below != at.end() && cell->back() >= below->second->front()) return false;
  }
  return true;
}

Word word(const SetValuedTableau& t) {
  auto bx = t.shape.boxes();
  Word w;
  // Boxes are row-major; emit rows bottom to top.
  std::size_t end = bx.size();
  while (end > 0) {
    std::size_t begin = end;
    int row = bx[end - 1].first;
    while (begin > 0 && bx[begin - 1].first == row) --begin;
    for (std::size_t k = begin; k < end; ++k) {
      w.insert(w.end(), t.cells[k].begin(), t.cells[k].end());
    }
    end = begin;
  }
  return w;
}

bool is_reverse_lattice(const Word& w) {
  std::vector<int> seen;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    int i = *it;
    if (i < 1) return false;
    if (static_cast<int>(seen.size()) < i + 1) seen.resize(i + 1, 0);
    // Occurrences strictly after this one: seen[i-1] must exceed seen[i].
    if (i >= 2 && seen[i - 1] <= seen[i]) return false;
    ++seen[i];
  }
  return true;
}

std::vector<int> content(const Word& w) {
  std::vector<int> c;
  for (int i : w) {
    if (i < 1) throw std::invalid_argument("word entries must be positive");
    if (static_cast<int>(c.size()) < i) c.resize(i, 0);
    ++c[i - 1];
  }
  return c;
}

Word u_word(const Partition& mu) {
  Word w;
  for (int row = mu.length(); row >= 1; --row) {
    w.insert(w.end(), static_cast<std::size_t>(mu[row - 1]), row);
  }
  return w;
}

namespace {

struct SvtEnumerator {
  const std::function<void(const SetValuedTableau&)>& visit;
  int max_entry;
  SetValuedTableau t;
  std::vector<std::pair<int, int>> bx;
  std::vector<int> left_of, above_of;  // box indices or -1

  void box(std::size_t k, int budget) {
    if (k == bx.size()) {
      visit(t);
      return;
    }
    int lo = 1;
    if (left_of[k] >= 0) lo = std::max(lo, t.cells[left_of[k]].back());
    if (above_of[k] >= 0) lo = std::max(lo, t.cells[above_of[k]].back() + 1);
    auto& cell = t.cells[k];
    for (int first = lo; first <= max_entry; ++first) {
      cell.assign(1, first);
      extend(k, budget);
    }
    cell.clear();
  }

  // cell[k] holds a non-empty prefix; either stop here or add larger entries.
  void extend(std::size_t k, int budget) {
    box(k + 1, budget);
    if (budget == 0) return;
    auto& cell = t.cells[k];
    for (int next = cell.back() + 1; next <= max_entry; ++next) {
      cell.push_back(next);
      extend(k, budget - 1);
      cell.pop_back();
    }
  }
};

}  // namespace

void for_each_svt(const SkewShape& shape, int max_entry, int max_excess,
                  const std::function<void(const SetValuedTableau&)>& visit) {
  if (max_entry < 1) throw std::invalid_argument("max_entry must be >= 1");
  if (max_excess < 0) return;
  SvtEnumerator e{visit, max_entry, {}, shape.boxes(), {}, {}};
  e.t.shape = shape;
  e.t.cells.assign(e.bx.size(), {});
  std::map<std::pair<int, int>, int> index;
  for (std::size_t k = 0; k < e.bx.size(); ++k) index[e.bx[k]] = static_cast<int>(k);
  for (const auto& [r, c] : e.bx) {
    auto l = index.find({r, c - 1});
    auto a = index.find({r - 1, c});
    e.left_of.push_back(l == index.end() ? -1 : l->second);
    e.above_of.push_back(a == index.end() ? -1 : a->second);
  }
  e.box(0, max_excess);
}

std::vector<SetValuedTableau> enumerate_svt(const SkewShape& shape,
                                            int max_entry, int max_excess) {
  std::vector<SetValuedTableau> out;
  for_each_svt(shape, max_entry, max_excess,
               [&](const SetValuedTableau& t) { out.push_back(t); });
  return out;
}

Polynomial expand_single(const Partition& lambda, int num_vars, int max_deg) {
  Polynomial poly;
  if (lambda.empty()) {
    poly[std::vector<int>(static_cast<std::size_t>(num_vars), 0)] = 1;
    return poly;
  }
  if (num_vars < 1 || max_deg < lambda.weight()) return poly;
  for_each_svt(SkewShape(lambda), num_vars, max_deg - lambda.weight(),
               [&](const SetValuedTableau& t) {
                 std::vector<int> exps(static_cast<std::size_t>(num_vars), 0);
                 for (const auto& cell : t.cells) {
                   for (int x : cell) ++exps[x - 1];
                 }
                 int excess = t.degree() - lambda.weight();
                 poly[exps] += (excess % 2 == 0) ? 1 : -1;
               });
  std::erase_if(poly, [](const auto& kv) { return kv.second == 0; });
  return poly;
}

bool is_rook_strip(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner)) return false;
  for (int r = 0; r < outer.length(); ++r) {
    if (outer[r] - inner[r] > 1) return false;
    // Box (r, c) and (r+1, c) both present means two boxes in column c.
    if (r + 1 < outer.length() && outer[r + 1] > inner[r]) return false;
  }
  return true;
}

bool rook_strip_complement(const Partition& rect, const Partition& placed,
                           const Partition& rotated) {
  if (!rect.is_rectangle()) throw std::invalid_argument("expected a rectangle");
  if (!rect.contains(placed) || !rect.contains(rotated)) return false;
  const int rows = rect.length(), cols = rect.width();
  std::vector<int> col_overlap(static_cast<std::size_t>(cols), 0);
  for (int i = 0; i < rows; ++i) {
    int row_overlap = 0;
    for (int j = 0; j < cols; ++j) {
      bool a = j < placed[i];
      bool b = j >= cols - rotated[rows - 1 - i];
      if (!a && !b) return false;
      if (a && b) {
        if (++row_overlap > 1 || ++col_overlap[j] > 1) return false;
      }
    }
  }
  return true;
}

}  // namespace qk
