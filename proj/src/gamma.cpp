#include "qk/gamma.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>

namespace qk {

namespace {

// Fills a (skew) diagram with sets of positive integers in reverse reading
// order (rows top to bottom, right to left, each box largest entry first),
// keeping the running content a partition. Starting from `start` this
// enumerates exactly the T with w(T) u(start) reverse lattice.
class LatticeFiller {
 public:
  template <class Emit>
  LatticeFiller(const SkewShape& shape, const Partition& start, const Partition* bound,
                int excess_budget, Emit&& emit)
      : bound_(bound), budget_(excess_budget) {
    for (int r = 0; r < shape.outer.length(); ++r) {
      for (int c = shape.outer[r] - 1; c >= shape.inner[r]; --c) {
        int right = -1, above = -1;
        if (shape.contains_box(r, c + 1)) right = index_of(r, c + 1);
        if (r > 0 && shape.contains_box(r - 1, c)) above = index_of(r - 1, c);
        rows_.push_back(r);
        cols_.push_back(c);
        right_.push_back(right);
        above_.push_back(above);
      }
    }
    const std::size_t n = rows_.size();
    box_min_.assign(n, 0);
    box_max_.assign(n, 0);
    content_.assign(static_cast<std::size_t>(start.length()) + 2 * n + 2, 0);
    for (int i = 0; i < start.length(); ++i) content_[i] = start[i];
    len_ = start.length();
    excess_ = 0;
    box(0, emit);
  }

 private:
  int index_of(int r, int c) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (rows_[k] == r && cols_[k] == c) return static_cast<int>(k);
    }
    return -1;
  }

  template <class Emit>
  void box(std::size_t k, Emit& emit) {
    if (k == rows_.size()) {
      emit(content_, len_, excess_);
      return;
    }
    int lo = above_[k] >= 0 ? box_max_[above_[k]] + 1 : 1;
    int hi = right_[k] >= 0 ? box_min_[right_[k]] : INT_MAX;
    hi = std::min(hi, len_ + 1);
    for (int x = hi; x >= lo; --x) place(k, x, true, lo, emit);
  }

  template <class Emit>
  void place(std::size_t k, int x, bool first, int lo, Emit& emit) {
    if (x >= 2 && content_[x - 2] <= content_[x - 1]) return;
    if (bound_ && content_[x - 1] >= (*bound_)[x - 1]) return;
    if (!first) {
      if (excess_ >= budget_) return;
      ++excess_;
    }
    ++content_[x - 1];
    if (x > len_) {
      len_ = x;
      if (static_cast<std::size_t>(len_) + 1 >= content_.size()) content_.resize(len_ + 2, 0);
    }
    if (first) box_max_[k] = x;
    box_min_[k] = x;

    box(k + 1, emit);
    for (int y = x - 1; y >= lo; --y) place(k, y, false, lo, emit);

    if (--content_[x - 1] == 0 && x == len_) len_ = x - 1;
    if (!first) --excess_;
  }

  const Partition* bound_;
  int budget_;
  std::vector<int> rows_, cols_, right_, above_;
  std::vector<int> box_min_, box_max_;
  std::vector<int> content_;
  int len_ = 0;
  int excess_ = 0;
};

Partition partition_from_content(const std::vector<int>& content, int len) {
  return Partition(std::vector<int>(content.begin(), content.begin() + len));
}

GammaElement lattice_expand(const SkewShape& shape, const Partition& start) {
  std::unordered_map<Partition, Coeff, PartitionHash> acc;
  LatticeFiller(shape, start, nullptr, INT_MAX,
                [&](const std::vector<int>& content, int len, int excess) {
                  acc[partition_from_content(content, len)] += (excess % 2) ? -1 : 1;
                });
  GammaElement out;
  for (const auto& [p, c] : acc) out.add(p, c);
  return out;
}

struct PairHash {
  std::size_t operator()(const std::pair<Partition, Partition>& p) const noexcept {
    PartitionHash h;
    return h(p.first) * 0x100000001b3ULL ^ h(p.second);
  }
};

struct GammaCaches {
  std::unordered_map<std::pair<Partition, Partition>, GammaElement, PairHash> mul;
  std::unordered_map<Partition, std::vector<CoproductTerm>, PartitionHash> coproduct;
  std::map<std::vector<int>, GammaElement> straighten[2];
};

GammaCaches& caches() {
  thread_local GammaCaches c;
  return c;
}

std::optional<long> g_depth_override;
std::mutex g_depth_mutex;

}  // namespace

GammaElement lr_expand(const Partition& shape, const Partition& mu) {
  return lattice_expand(SkewShape(shape), mu);
}

Coeff lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (!nu.contains(lambda) || !nu.contains(mu)) return 0;
  const int excess = nu.weight() - lambda.weight() - mu.weight();
  if (excess < 0) return 0;
  Coeff count = 0;
  LatticeFiller(SkewShape(lambda), mu, &nu, excess,
                [&](const std::vector<int>& content, int len, int) {
                  if (len != nu.length()) return;
                  for (int i = 0; i < len; ++i) {
                    if (content[i] != nu[i]) return;
                  }
                  ++count;
                });
  return (excess % 2) ? -count : count;
}

const GammaElement& mul(const Partition& lambda, const Partition& mu) {
  auto& cache = caches().mul;
  // Commutative: key on the ordered pair, enumerate the smaller shape.
  bool swap = lambda.weight() > mu.weight() ||
              (lambda.weight() == mu.weight() && mu < lambda);
  const Partition& shape = swap ? mu : lambda;
  const Partition& other = swap ? lambda : mu;
  auto key = std::make_pair(shape, other);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  return cache.emplace(std::move(key), lr_expand(shape, other)).first->second;
}

GammaElement mul(const GammaElement& a, const GammaElement& b) {
  GammaElement out;
  for (const auto& [pa, ca] : a.terms()) {
    for (const auto& [pb, cb] : b.terms()) {
      const GammaElement& prod = mul(pa, pb);
      for (const auto& [p, c] : prod.terms()) out.add(p, ca * cb * c);
    }
  }
  return out;
}

Coeff coproduct_coeff(const Partition& lambda, const Partition& mu, const Partition& nu) {
  int cols = std::max(lambda.width(), mu.width());
  int rows = std::max(lambda.length(), mu.length());
  return coproduct_coeff(lambda, mu, nu, Partition::rectangle(rows, cols));
}

Coeff coproduct_coeff(const Partition& lambda, const Partition& mu, const Partition& nu,
                      const Partition& rect) {
  if (!rect.is_rectangle()) throw std::invalid_argument("coproduct_coeff: R must be a rectangle");
  if (!rect.contains(lambda) || !rect.contains(mu)) {
    throw std::invalid_argument("coproduct_coeff: rectangle " + rect.to_string() +
                                " does not contain " + lambda.to_string() + " and " +
                                mu.to_string());
  }
  if (!nu.contains(lambda) || !nu.contains(mu)) return 0;
  if (nu.weight() > lambda.weight() + mu.weight()) return 0;
  // rho = (R + mu, lambda): mu attached to the right of R, lambda below it.
  std::vector<int> rho;
  for (int i = 0; i < rect.length(); ++i) rho.push_back(rect.width() + mu[i]);
  for (int p : lambda.parts()) rho.push_back(p);
  return lr_coeff(rect, nu, Partition(std::move(rho)));
}

const std::vector<CoproductTerm>& coproduct_terms(const Partition& nu) {
  auto& cache = caches().coproduct;
  auto it = cache.find(nu);
  if (it != cache.end()) return it->second;

  // One product G_nu * G_R with R = (nu_1)^{l(nu)} yields every
  // d^nu_{lambda mu} at once: read lambda and mu off rho = (R + mu, lambda).
  const int rows = nu.length(), cols = nu.width();
  const Partition rect = Partition::rectangle(rows, cols);
  std::vector<CoproductTerm> terms;
  const GammaElement prod = lr_expand(nu, rect);
  for (const auto& [rho, c] : prod.terms()) {
    if (!rho.contains(rect)) continue;
    if (rho.length() > 2 * rows || rho[rows] > cols) continue;
    std::vector<int> mu_parts, lambda_parts;
    bool fits = true;
    for (int i = 0; i < rows; ++i) {
      int m = rho[i] - cols;
      if (m > cols) fits = false;
      mu_parts.push_back(m);
    }
    for (int i = rows; i < rho.length(); ++i) lambda_parts.push_back(rho[i]);
    if (!fits) continue;
    Partition lambda(std::move(lambda_parts)), mu(std::move(mu_parts));
    if (!nu.contains(lambda) || !nu.contains(mu)) continue;
    terms.push_back({std::move(lambda), std::move(mu), c});
  }
  std::sort(terms.begin(), terms.end(), [](const CoproductTerm& a, const CoproductTerm& b) {
    return std::tie(a.left, a.right) < std::tie(b.left, b.right);
  });
  return cache.emplace(nu, std::move(terms)).first->second;
}

TensorElement coproduct(const Partition& nu) {
  TensorElement out(2);
  for (const auto& t : coproduct_terms(nu)) out.add(TensorKey{t.left, t.right}, t.coeff);
  return out;
}

TensorElement coproduct(const GammaElement& a) {
  TensorElement out(2);
  for (const auto& [p, c] : a.terms()) {
    for (const auto& t : coproduct_terms(p)) out.add(TensorKey{t.left, t.right}, c * t.coeff);
  }
  return out;
}

TensorElement coproduct2(const Partition& nu) {
  TensorElement out(3);
  for (const auto& outer : coproduct_terms(nu)) {
    for (const auto& inner : coproduct_terms(outer.left)) {
      out.add(TensorKey{inner.left, inner.right, outer.right}, outer.coeff * inner.coeff);
    }
  }
  return out;
}

GammaElement skew_expand(const SkewShape& shape) {
  return lattice_expand(shape, Partition{});
}

void set_straighten_depth_limit(std::optional<long> limit) {
  std::lock_guard lock(g_depth_mutex);
  g_depth_override = limit;
}

long straighten_depth_limit(std::span<const int> seq) {
  {
    std::lock_guard lock(g_depth_mutex);
    if (g_depth_override) return *g_depth_override;
  }
  if (const char* env = std::getenv("QK_MAX_DEPTH")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  if (seq.empty()) return 10;
  auto [lo, hi] = std::minmax_element(seq.begin(), seq.end());
  return 10L * static_cast<long>(seq.size()) * (static_cast<long>(*hi) - *lo + 2);
}

namespace {

std::string seq_string(std::span<const int> seq) {
  std::string s = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(seq[i]);
  }
  return s + ")";
}

const GammaElement& straighten_rec(const std::vector<int>& seq, Ascent strategy, long depth,
                                   long limit) {
  auto& memo = caches().straighten[strategy == Ascent::Leftmost ? 0 : 1];
  auto it = memo.find(seq);
  if (it != memo.end()) return it->second;
  if (depth > limit) {
    throw StraightenDepthError("straightening depth limit " + std::to_string(limit) +
                               " exceeded at " + seq_string(seq));
  }

  GammaElement result;
  if (!seq.empty() && seq.back() < 0) {
    std::vector<int> shorter(seq.begin(), seq.end() - 1);
    result = straighten_rec(shorter, strategy, depth + 1, limit);
  } else {
    int pos = -1;
    const int n = static_cast<int>(seq.size());
    if (strategy == Ascent::Leftmost) {
      for (int j = 0; j + 1 < n && pos < 0; ++j) {
        if (seq[j] < seq[j + 1]) pos = j;
      }
    } else {
      for (int j = n - 2; j >= 0 && pos < 0; --j) {
        if (seq[j] < seq[j + 1]) pos = j;
      }
    }
    if (pos < 0) {
      result = GammaElement(Partition(seq));
    } else {
      const int p = seq[pos], q = seq[pos + 1];
      std::vector<int> next = seq;
      for (int k = p + 1; k <= q; ++k) {
        next[pos] = q;
        next[pos + 1] = k;
        result += straighten_rec(next, strategy, depth + 1, limit);
      }
      for (int k = p + 1; k <= q - 1; ++k) {
        next[pos] = q - 1;
        next[pos + 1] = k;
        result -= straighten_rec(next, strategy, depth + 1, limit);
      }
    }
  }
  return memo.emplace(seq, std::move(result)).first->second;
}

}  // namespace

GammaElement straighten(std::span<const int> seq, Ascent strategy) {
  std::vector<int> s(seq.begin(), seq.end());
  return straighten_rec(s, strategy, 0, straighten_depth_limit(seq));
}

TensorElement tensor_mul_at(const TensorElement& p, std::size_t slot, const GammaElement& g) {
  if (slot >= p.arity()) {
    throw std::out_of_range("tensor_mul_at: slot " + std::to_string(slot) +
                            " out of range for arity " + std::to_string(p.arity()));
  }
  TensorElement out(p.arity());
  for (const auto& [key, c] : p.terms()) {
    for (const auto& [gp, gc] : g.terms()) {
      for (const auto& [prod, pc] : mul(key[slot], gp).terms()) {
        TensorKey k = key;
        k[slot] = prod;
        out.add(std::move(k), c * gc * pc);
      }
    }
  }
  return out;
}

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("tensor_mul: arity mismatch");
  TensorElement out(a.arity());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      // Expand slot by slot.
      std::vector<std::pair<TensorKey, Coeff>> acc{{TensorKey{}, ca * cb}};
      for (std::size_t s = 0; s < a.arity(); ++s) {
        std::vector<std::pair<TensorKey, Coeff>> next;
        for (const auto& [k, c] : acc) {
          for (const auto& [p, pc] : mul(ka[s], kb[s]).terms()) {
            TensorKey nk = k;
            nk.push_back(p);
            next.emplace_back(std::move(nk), c * pc);
          }
        }
        acc = std::move(next);
      }
      for (auto& [k, c] : acc) out.add(std::move(k), c);
    }
  }
  return out;
}

void clear_gamma_caches() {
  auto& c = caches();
  c.mul.clear();
  c.coproduct.clear();
  c.straighten[0].clear();
  c.straighten[1].clear();
}

}  // namespace qk
