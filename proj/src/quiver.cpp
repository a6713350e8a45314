#include "qk/quiver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "qk/errors.hpp"

namespace qk {

Quiver::Quiver(int num_vertices, std::vector<Arrow> arrows)
    : n_(num_vertices), arrows_(std::move(arrows)) {
  if (n_ < 0) throw InputError("quiver: negative vertex count");
  for (const auto& a : arrows_) {
    if (a.tail < 1 || a.tail > n_ || a.head < 1 || a.head > n_) {
      throw InputError("quiver: arrow " + std::to_string(a.tail) + "->" +
                       std::to_string(a.head) + " has a vertex outside 1.." +
                       std::to_string(n_));
    }
    if (a.tail == a.head) {
      throw InputError("quiver: loop at vertex " + std::to_string(a.tail));
    }
  }
  // Kahn's algorithm; leftover vertices lie on a directed cycle.
  std::vector<int> indeg(n_ + 1, 0);
  for (const auto& a : arrows_) ++indeg[a.head];
  std::vector<int> stack;
  for (int v = 1; v <= n_; ++v) {
    if (indeg[v] == 0) stack.push_back(v);
  }
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (const auto& a : arrows_) {
      if (a.tail == v && --indeg[a.head] == 0) stack.push_back(a.head);
    }
  }
  if (seen != n_) throw InputError("quiver: contains an oriented cycle");
}

std::vector<int> Quiver::heads_from(int v) const {
  std::vector<int> heads;
  for (const auto& a : arrows_) {
    if (a.tail == v) heads.push_back(a.head);
  }
  std::sort(heads.begin(), heads.end());
  return heads;
}

int Quiver::in_rank(const DimVector& e, int v) const {
  int r = 0;
  for (const auto& a : arrows_) {
    if (a.head == v) r += e[a.tail - 1];
  }
  return r;
}

std::vector<int> Quiver::depth() const {
  std::vector<int> d(n_, 0);
  // Longest path relaxation; n rounds suffice on an acyclic quiver.
  for (int round = 0; round < n_; ++round) {
    bool changed = false;
    for (const auto& a : arrows_) {
      if (d[a.head - 1] < d[a.tail - 1] + 1) {
        d[a.head - 1] = d[a.tail - 1] + 1;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return d;
}

Quiver Quiver::reversed() const {
  std::vector<Arrow> rev;
  for (const auto& a : arrows_) rev.push_back({a.head, a.tail});
  return Quiver(n_, std::move(rev));
}

Quiver Quiver::inbound_a3() { return Quiver(3, {{1, 2}, {3, 2}}); }
Quiver Quiver::outbound_a3() { return Quiver(3, {{2, 1}, {2, 3}}); }

Quiver Quiver::equioriented_a(int n) {
  std::vector<Arrow> arrows;
  for (int i = 1; i < n; ++i) arrows.push_back({i, i + 1});
  return Quiver(n, std::move(arrows));
}

int euler_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  const auto n = static_cast<std::size_t>(q.num_vertices());
  if (a.size() != n || b.size() != n) {
    throw InputError("euler_form: dimension vectors must have length " + std::to_string(n));
  }
  int s = 0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  for (const auto& arr : q.arrows()) s -= a[arr.tail - 1] * b[arr.head - 1];
  return s;
}

int tits_form(const Quiver& q, const DimVector& d) { return euler_form(q, d, d); }

std::string DynkinType::to_string() const {
  if (!dynkin) return "not-Dynkin";
  std::string s;
  for (const auto& c : components) {
    if (!s.empty()) s += "+";
    s += c.name();
  }
  return s.empty() ? "empty" : s;
}

bool DynkinType::is_type_a() const {
  return dynkin && std::all_of(components.begin(), components.end(),
                               [](const DynkinComponent& c) { return c.family == 'A'; });
}

DynkinType dynkin_type(const Quiver& q) {
  const int n = q.num_vertices();
  DynkinType result;
  std::map<std::pair<int, int>, int> edges;
  std::vector<std::vector<int>> adj(n + 1);
  for (const auto& a : q.arrows()) {
    auto key = std::minmax(a.tail, a.head);
    if (++edges[key] > 1) return result;  // multiple edge
    adj[a.tail].push_back(a.head);
    adj[a.head].push_back(a.tail);
  }
  std::vector<int> comp(n + 1, -1);
  for (int start = 1; start <= n; ++start) {
    if (comp[start] >= 0) continue;
    std::vector<int> verts{start}, stack{start};
    comp[start] = start;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (comp[w] < 0) {
          comp[w] = start;
          verts.push_back(w);
          stack.push_back(w);
        }
      }
    }
    std::sort(verts.begin(), verts.end());
    int edge_count = 0;
    for (int v : verts) edge_count += static_cast<int>(adj[v].size());
    edge_count /= 2;
    if (edge_count != static_cast<int>(verts.size()) - 1) return DynkinType{};  // cycle

    std::vector<int> branch;
    for (int v : verts) {
      if (adj[v].size() > 3) return DynkinType{};
      if (adj[v].size() == 3) branch.push_back(v);
    }
    DynkinComponent c;
    c.vertices = verts;
    c.rank = static_cast<int>(verts.size());
    if (branch.empty()) {
      c.family = 'A';
    } else if (branch.size() == 1) {
      std::vector<int> arms;
      for (int first : adj[branch[0]]) {
        int len = 0, prev = branch[0], cur = first;
        while (true) {
          ++len;
          int next = -1;
          for (int w : adj[cur]) {
            if (w != prev) next = w;
          }
          if (next < 0) break;
          prev = cur;
          cur = next;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms[0] == 1 && arms[1] == 1) {
        c.family = 'D';
      } else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
        c.family = 'E';
      } else {
        return DynkinType{};
      }
    } else {
      return DynkinType{};
    }
    result.components.push_back(std::move(c));
  }
  result.dynkin = true;
  return result;
}

namespace {

// Largest coefficient of the highest root.
int coefficient_bound(const DynkinComponent& c) {
  switch (c.family) {
    case 'A': return 1;
    case 'D': return 2;
    default: return c.rank == 6 ? 3 : (c.rank == 7 ? 4 : 6);
  }
}

bool root_order(const DimVector& a, const DimVector& b) {
  int ha = std::accumulate(a.begin(), a.end(), 0);
  int hb = std::accumulate(b.begin(), b.end(), 0);
  if (ha != hb) return ha < hb;
  return a > b;
}

}  // namespace

namespace {

std::vector<DimVector> compute_positive_roots(const Quiver& q) {
  DynkinType type = dynkin_type(q);
  if (!type.dynkin) throw InputError("positive_roots: quiver is not of Dynkin type");
  const int n = q.num_vertices();
  std::vector<DimVector> roots;
  for (const auto& comp : type.components) {
    const int bound = coefficient_bound(comp);
    const auto& vs = comp.vertices;
    DimVector d(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == vs.size()) {
        if (std::any_of(d.begin(), d.end(), [](int x) { return x != 0; }) &&
            tits_form(q, d) == 1) {
          roots.push_back(d);
        }
        return;
      }
      for (int v = 0; v <= bound; ++v) {
        d[vs[k] - 1] = v;
        rec(k + 1);
      }
      d[vs[k] - 1] = 0;
    };
    rec(0);
  }
  std::sort(roots.begin(), roots.end(), root_order);
  return roots;
}

}  // namespace

std::vector<DimVector> positive_roots(const Quiver& q) {
  using Key = std::pair<int, std::vector<std::pair<int, int>>>;
  thread_local std::map<Key, std::vector<DimVector>> cache;
  Key key{q.num_vertices(), {}};
  for (const auto& a : q.arrows()) key.second.emplace_back(a.tail, a.head);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(std::move(key), compute_positive_roots(q)).first;
  return it->second;
}

bool is_positive_root(const Quiver& q, const DimVector& d) {
  if (d.size() != static_cast<std::size_t>(q.num_vertices())) return false;
  auto roots = positive_roots(q);
  return std::find(roots.begin(), roots.end(), d) != roots.end();
}

DimVector OrbitSpec::dimension(int n) const {
  DimVector e(n, 0);
  for (const auto& [root, m] : mults) {
    for (int i = 0; i < n; ++i) e[i] += m * root[i];
  }
  return e;
}

std::vector<DimVector> OrbitSpec::support() const {
  std::vector<DimVector> s;
  for (const auto& [root, m] : mults) s.push_back(root);
  return s;
}

int OrbitSpec::mult(const DimVector& root) const {
  for (const auto& [r, m] : mults) {
    if (r == root) return m;
  }
  return 0;
}

std::string OrbitSpec::to_string() const {
  std::string s = "{";
  for (const auto& [root, m] : mults) {
    if (s.size() > 1) s += ", ";
    s += dim_string(root) + ":" + std::to_string(m);
  }
  return s + "}";
}

OrbitSpec make_orbit(const Quiver& q, std::vector<std::pair<DimVector, int>> mults) {
  auto roots = positive_roots(q);
  OrbitSpec out;
  for (const auto& root : roots) {
    int m = 0;
    for (const auto& [r, k] : mults) {
      if (r == root) m += k;
    }
    if (m < 0) throw InputError("orbit: negative multiplicity for root " + dim_string(root));
    if (m > 0) out.mults.emplace_back(root, m);
  }
  for (const auto& [r, k] : mults) {
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) {
      throw InputError("orbit: " + dim_string(r) + " is not a positive root");
    }
  }
  return out;
}

void validate_orbit(const Quiver& q, const DimVector& e, const OrbitSpec& orbit) {
  const int n = q.num_vertices();
  if (e.size() != static_cast<std::size_t>(n)) {
    throw InputError("orbit: dimension vector has length " + std::to_string(e.size()) +
                     ", expected " + std::to_string(n));
  }
  auto roots = positive_roots(q);
  for (const auto& [r, m] : orbit.mults) {
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) {
      throw InputError("orbit: " + dim_string(r) + " is not a positive root");
    }
    if (m <= 0) throw InputError("orbit: multiplicities must be positive");
  }
  if (orbit.dimension(n) != e) {
    throw InputError("orbit: multiplicities sum to " + dim_string(orbit.dimension(n)) +
                     ", not " + dim_string(e));
  }
}

std::vector<OrbitSpec> orbits(const Quiver& q, const DimVector& e) {
  const int n = q.num_vertices();
  if (e.size() != static_cast<std::size_t>(n)) throw InputError("orbits: dimension mismatch");
  if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) {
    throw InputError("orbits: negative dimension");
  }
  auto roots = positive_roots(q);
  std::vector<OrbitSpec> out;
  OrbitSpec cur;
  DimVector rem = e;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == roots.size()) {
      if (std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; })) out.push_back(cur);
      return;
    }
    const auto& root = roots[k];
    int cap = 1 << 20;
    for (int i = 0; i < n; ++i) {
      if (root[i] > 0) cap = std::min(cap, rem[i] / root[i]);
    }
    for (int m = cap; m >= 0; --m) {
      if (m > 0) {
        for (int i = 0; i < n; ++i) rem[i] -= m * root[i];
        cur.mults.emplace_back(root, m);
      }
      rec(k + 1);
      if (m > 0) {
        cur.mults.pop_back();
        for (int i = 0; i < n; ++i) rem[i] += m * root[i];
      }
    }
  };
  rec(0);
  return out;
}

std::vector<DimVector> dimension_vectors_up_to(int n, int max_entry) {
  std::vector<DimVector> out;
  DimVector d(n, 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      out.push_back(d);
      return;
    }
    for (int v = 0; v <= max_entry; ++v) {
      d[k] = v;
      rec(k + 1);
    }
    d[k] = 0;
  };
  rec(0);
  return out;
}

std::string dim_string(const DimVector& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + ")";
}

}  // namespace qk
