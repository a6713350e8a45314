#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qk/errors.hpp"
#include "qk/partition.hpp"
#include "qk/tableau.hpp"
#include "qk/tensor.hpp"

namespace qk {

// ---------------------------------------------------------------------------
// Products
// ---------------------------------------------------------------------------

/// G_shape * G_mu expanded by counting set-valued tableaux T of the given
/// shape whose word w(T) u(mu) is a reverse lattice word; each T contributes
/// (-1)^{|T|-|shape|} to the coefficient of its content. Uncached.
GammaElement lr_expand(const Partition& shape, const Partition& mu);

/// The structure constant c^nu_{lambda mu}, counted directly against the
/// target content nu.
Coeff lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu);

/// G_lambda * G_mu (memoized per thread).
const GammaElement& mul(const Partition& lambda, const Partition& mu);
GammaElement mul(const GammaElement& a, const GammaElement& b);

// ---------------------------------------------------------------------------
// Coproduct
// ---------------------------------------------------------------------------

struct CoproductTerm {
  Partition left;
  Partition right;
  Coeff coeff;
};

/// d^nu_{lambda mu} computed as c^rho_{R nu} with rho = (R + mu, lambda),
/// where R is the smallest rectangle containing lambda and mu.
Coeff coproduct_coeff(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Same, with an explicitly chosen rectangle R containing lambda and mu.
Coeff coproduct_coeff(const Partition& lambda, const Partition& mu, const Partition& nu,
                      const Partition& rect);

/// Nonzero terms of Delta(G_nu) (memoized per thread).
const std::vector<CoproductTerm>& coproduct_terms(const Partition& nu);

/// Delta(G_nu) as a 2-tensor.
TensorElement coproduct(const Partition& nu);
TensorElement coproduct(const GammaElement& a);

/// (Delta (x) id) Delta(G_nu) as a 3-tensor.
TensorElement coproduct2(const Partition& nu);

// ---------------------------------------------------------------------------
// Skew shapes and integer sequences
// ---------------------------------------------------------------------------

/// G_{tau/sigma} = sum over set-valued T of shape tau/sigma with w(T) a
/// reverse lattice word of content mu of (-1)^{|T|-|tau/sigma|} G_mu.
GammaElement skew_expand(const SkewShape& shape);

enum class Ascent { Leftmost, Rightmost };

class StraightenDepthError : public InternalError {
 public:
  using InternalError::InternalError;
};

/// Rewrite G_I for an arbitrary integer sequence I in the basis G_lambda,
/// using
///   G_{I,p,q,J} = sum_{k=p+1}^{q} G_{I,q,k,J} - sum_{k=p+1}^{q-1} G_{I,q-1,k,J}  (p < q)
///   G_{I,p} = G_I                                                               (p < 0)
/// A negative last entry is always dropped first; otherwise the rule is
/// applied at the chosen adjacent ascent. Throws StraightenDepthError if the
/// recursion exceeds the depth guard.
GammaElement straighten(std::span<const int> seq, Ascent strategy = Ascent::Leftmost);

/// Depth guard for straighten(). nullopt restores the default
/// 10 * length * (max - min + 2), or $QK_MAX_DEPTH when set.
void set_straighten_depth_limit(std::optional<long> limit);
long straighten_depth_limit(std::span<const int> seq);

// ---------------------------------------------------------------------------
// Tensor helpers
// ---------------------------------------------------------------------------

/// Multiply g into slot `slot` (0-based) of every term of P.
TensorElement tensor_mul_at(const TensorElement& p, std::size_t slot, const GammaElement& g);

/// Slotwise product in the tensor power ring: (a1 (x) a2)(b1 (x) b2) = a1b1 (x) a2b2.
TensorElement tensor_mul(const TensorElement& a, const TensorElement& b);

/// Drop all memoized products, coproducts and straightenings of this thread.
void clear_gamma_caches();

}  // namespace qk
