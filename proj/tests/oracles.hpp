// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond the Partition value type.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <boost/rational.hpp>

#include "qk/partition.hpp"
#include "qk/quiver.hpp"
#include "qk/tableau.hpp"

namespace oracle {

using qk::Partition;

/// s_lambda(1^p) by the hook-content formula.
inline long hook_content(const Partition& lambda, int p) {
  const Partition conj = lambda.conjugate();
  long double num = 1, den = 1;
  for (int r = 0; r < lambda.length(); ++r) {
    for (int c = 0; c < lambda[r]; ++c) {
      num *= p + c - r;
      den *= (lambda[r] - c - 1) + (conj[c] - r - 1) + 1;
    }
  }
  return static_cast<long>(num / den + 0.5L);
}

/// Every filling of the boxes of outer/inner with integers 1..max_entry,
/// rows weakly increasing and columns strictly increasing.
inline void for_each_ssyt(const Partition& outer, const Partition& inner, int max_entry,
                          const std::function<void(const std::vector<std::vector<int>>&)>& f) {
  std::vector<std::vector<int>> t(outer.length());
  for (int r = 0; r < outer.length(); ++r) t[r].assign(outer[r], 0);
  std::vector<std::pair<int, int>> boxes;
  for (int r = 0; r < outer.length(); ++r) {
    for (int c = inner[r]; c < outer[r]; ++c) boxes.emplace_back(r, c);
  }
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == boxes.size()) {
      f(t);
      return;
    }
    auto [r, c] = boxes[k];
    int lo = 1;
    if (c > inner[r]) lo = std::max(lo, t[r][c - 1]);
    if (r > 0 && c >= inner[r - 1] && c < outer[r - 1]) lo = std::max(lo, t[r - 1][c] + 1);
    for (int x = lo; x <= max_entry; ++x) {
      t[r][c] = x;
      go(k + 1);
    }
    t[r][c] = 0;
  };
  go(0);
}

/// Classical Littlewood-Richardson number: skew tableaux of shape nu/lambda
/// and content mu whose row reading word (right to left, top to bottom) is a
/// lattice word.
inline long classical_lr(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (!nu.contains(lambda) || nu.weight() != lambda.weight() + mu.weight()) return 0;
  long count = 0;
  for_each_ssyt(nu, lambda, std::max(mu.length(), 1), [&](const auto& t) {
    std::vector<int> seen(mu.length() + 2, 0);
    for (int r = 0; r < nu.length(); ++r) {
      for (int c = nu[r] - 1; c >= lambda[r]; --c) {
        const int x = t[r][c];
        ++seen[x];
        if (x > 1 && seen[x] > seen[x - 1]) return;
      }
    }
    for (int i = 0; i < mu.length(); ++i) {
      if (seen[i + 1] != mu[i]) return;
    }
    ++count;
  });
  return count;
}

/// c^nu_{lambda mu} straight from the set-valued tableau enumeration.
inline long brute_lr(const Partition& lambda, const Partition& mu, const Partition& nu) {
  const int excess = nu.weight() - lambda.weight() - mu.weight();
  if (excess < 0) return 0;
  long count = 0;
  const qk::Word u = qk::u_word(mu);
  for (const auto& t : qk::enumerate_svt(qk::SkewShape(lambda), std::max(nu.length(), 1), excess)) {
    qk::Word w = qk::word(t);
    w.insert(w.end(), u.begin(), u.end());
    if (!qk::is_reverse_lattice(w)) continue;
    auto c = qk::content(w);
    c.resize(std::max<std::size_t>(c.size(), nu.length()), 0);
    bool ok = true;
    for (std::size_t i = 0; i < c.size(); ++i) ok = ok && c[i] == nu[i];
    if (ok) ++count;
  }
  return excess % 2 ? -count : count;
}

/// Truncated polynomial product.
inline qk::Polynomial poly_mul(const qk::Polynomial& a, const qk::Polynomial& b, int max_deg) {
  qk::Polynomial out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      int d = 0;
      for (std::size_t i = 0; i < e.size(); ++i) d += (e[i] = ea[i] + eb[i]);
      if (d > max_deg) continue;
      out[e] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// Positive roots as the orbit of the simple roots under simple reflections.
inline std::set<qk::DimVector> reflection_roots(const qk::Quiver& q) {
  const int n = q.num_vertices();
  std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
  for (const auto& a : q.arrows()) {
    ++adj[a.tail - 1][a.head - 1];
    ++adj[a.head - 1][a.tail - 1];
  }
  std::set<qk::DimVector> roots, frontier;
  for (int i = 0; i < n; ++i) {
    qk::DimVector d(n, 0);
    d[i] = 1;
    frontier.insert(d);
  }
  while (!frontier.empty()) {
    std::set<qk::DimVector> next;
    for (const auto& d : frontier) {
      if (!roots.insert(d).second) continue;
      for (int i = 0; i < n; ++i) {
        int pairing = 2 * d[i];
        for (int j = 0; j < n; ++j) pairing -= adj[i][j] * d[j];
        qk::DimVector s = d;
        s[i] -= pairing;
        if (std::all_of(s.begin(), s.end(), [](int x) { return x >= 0; }) && !roots.count(s)) {
          next.insert(s);
        }
      }
    }
    frontier = std::move(next);
  }
  return roots;
}

/// Rank over Q by Gaussian elimination with exact fractions.
inline int rational_rank(std::vector<std::vector<long long>> rows) {
  using Q = boost::rational<long long>;
  std::vector<std::vector<Q>> a;
  for (auto& r : rows) a.emplace_back(r.begin(), r.end());
  const int m = static_cast<int>(a.size());
  const int n = m ? static_cast<int>(a[0].size()) : 0;
  int rank = 0;
  for (int c = 0; c < n && rank < m; ++c) {
    int p = rank;
    while (p < m && a[p][c].numerator() == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[rank]);
    for (int r = 0; r < m; ++r) {
      if (r == rank || a[r][c].numerator() == 0) continue;
      const Q f = a[r][c] / a[rank][c];
      for (int k = c; k < n; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracle
