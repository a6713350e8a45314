#include "qk/tensor.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace qk {

GammaElement::GammaElement(const Partition& p, Coeff c) { add(p, c); }

void GammaElement::add(const Partition& p, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Coeff GammaElement::coeff(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

std::vector<std::pair<Partition, Coeff>> GammaElement::sorted_terms() const {
  std::vector<std::pair<Partition, Coeff>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int wa = a.first.weight(), wb = b.first.weight();
    return wa != wb ? wa < wb : a.first < b.first;
  });
  return out;
}

std::string GammaElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [p, c] : sorted_terms()) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    Coeff a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a) + "*";
    s += "G" + p.to_string();
  }
  return s;
}

GammaElement& GammaElement::operator+=(const GammaElement& o) {
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

GammaElement& GammaElement::operator-=(const GammaElement& o) {
  for (const auto& [p, c] : o.terms_) add(p, -c);
  return *this;
}

GammaElement& GammaElement::operator*=(Coeff k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= k;
  return *this;
}

std::size_t TensorKeyHash::operator()(const TensorKey& k) const noexcept {
  std::size_t h = 0x84222325cbf29ce4ULL;
  PartitionHash ph;
  for (const auto& p : k) {
    h ^= ph(p) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

int degree(const TensorKey& key) {
  int d = 0;
  for (const auto& p : key) d += p.weight();
  return d;
}

bool canonical_less(const TensorKey& a, const TensorKey& b) {
  int da = degree(a), db = degree(b);
  if (da != db) return da < db;
  return a < b;
}

TensorElement TensorElement::unit(std::size_t arity) {
  TensorElement t(arity);
  t.add(TensorKey(arity), 1);
  return t;
}

void TensorElement::check_arity(const TensorKey& key) const {
  if (key.size() != arity_) {
    throw std::invalid_argument("tensor key of arity " + std::to_string(key.size()) +
                                " added to tensor of arity " + std::to_string(arity_));
  }
}

void TensorElement::add(const TensorKey& key, Coeff c) {
  if (c == 0) return;
  check_arity(key);
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void TensorElement::add(TensorKey&& key, Coeff c) {
  if (c == 0) return;
  check_arity(key);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Coeff TensorElement::coeff(const TensorKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? 0 : it->second;
}

std::vector<std::pair<TensorKey, Coeff>> TensorElement::sorted_terms() const {
  std::vector<std::pair<TensorKey, Coeff>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return canonical_less(a.first, b.first);
  });
  return out;
}

std::string TensorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : sorted_terms()) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    Coeff a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a) + "*";
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i) s += "@";
      s += "G" + k[i].to_string();
    }
  }
  return s;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  if (o.arity_ != arity_) throw std::invalid_argument("arity mismatch in tensor sum");
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  if (o.arity_ != arity_) throw std::invalid_argument("arity mismatch in tensor difference");
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

TensorElement append_unit(const TensorElement& p) {
  TensorElement out(p.arity() + 1);
  for (const auto& [k, c] : p.terms()) {
    TensorKey key = k;
    key.emplace_back();
    out.add(std::move(key), c);
  }
  return out;
}

TensorElement project_degree(const TensorElement& p, int d) {
  TensorElement out(p.arity());
  for (const auto& [k, c] : p.terms()) {
    if (degree(k) == d) out.add(k, c);
  }
  return out;
}

int min_degree(const TensorElement& p) {
  if (p.is_zero()) return -1;
  int best = std::numeric_limits<int>::max();
  for (const auto& [k, c] : p.terms()) best = std::min(best, degree(k));
  return best;
}

}  // namespace qk
