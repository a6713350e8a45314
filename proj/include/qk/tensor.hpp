#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qk/partition.hpp"

namespace qk {

using Coeff = std::int64_t;

/// Finite Z-linear combination of basis elements G_lambda of Gamma.
class GammaElement {
 public:
  using Map = std::unordered_map<Partition, Coeff, PartitionHash>;

  GammaElement() = default;
  /// The basis element G_p with coefficient c.
  explicit GammaElement(const Partition& p, Coeff c = 1);

  static GammaElement one() { return GammaElement(Partition{}); }

  void add(const Partition& p, Coeff c);
  Coeff coeff(const Partition& p) const;
  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Terms sorted by weight, then lexicographically.
  std::vector<std::pair<Partition, Coeff>> sorted_terms() const;
  std::string to_string() const;

  GammaElement& operator+=(const GammaElement& o);
  GammaElement& operator-=(const GammaElement& o);
  GammaElement& operator*=(Coeff k);
  friend GammaElement operator+(GammaElement a, const GammaElement& b) { return a += b; }
  friend GammaElement operator-(GammaElement a, const GammaElement& b) { return a -= b; }
  friend GammaElement operator*(Coeff k, GammaElement a) { return a *= k; }
  bool operator==(const GammaElement& o) const { return terms_ == o.terms_; }

 private:
  Map terms_;
};

using TensorKey = std::vector<Partition>;

struct TensorKeyHash {
  std::size_t operator()(const TensorKey& k) const noexcept;
};

/// Sum of the weights of the partitions in a key.
int degree(const TensorKey& key);

/// Total order used for all printed output: degree, then lexicographic on
/// the slots.
bool canonical_less(const TensorKey& a, const TensorKey& b);

/// Finite Z-linear combination of G_{mu_1} (x) ... (x) G_{mu_n}.
class TensorElement {
 public:
  using Map = std::unordered_map<TensorKey, Coeff, TensorKeyHash>;

  explicit TensorElement(std::size_t arity = 0) : arity_(arity) {}

  /// 1 (x) ... (x) 1 with `arity` factors.
  static TensorElement unit(std::size_t arity);

  std::size_t arity() const { return arity_; }
  void add(const TensorKey& key, Coeff c);
  void add(TensorKey&& key, Coeff c);
  Coeff coeff(const TensorKey& key) const;
  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  std::vector<std::pair<TensorKey, Coeff>> sorted_terms() const;
  std::string to_string() const;

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  bool operator==(const TensorElement& o) const {
    return arity_ == o.arity_ && terms_ == o.terms_;
  }

 private:
  void check_arity(const TensorKey& key) const;
  std::size_t arity_;
  Map terms_;
};

/// P (x) 1.
TensorElement append_unit(const TensorElement& p);

/// Terms of total degree exactly d.
TensorElement project_degree(const TensorElement& p, int d);

/// Smallest total degree of a term; -1 for the zero tensor.
int min_degree(const TensorElement& p);

}  // namespace qk
