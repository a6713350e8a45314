#pragma once

#include <string>
#include <vector>

#include "qk/quiver.hpp"
#include "qk/resolution.hpp"
#include "qk/tensor.hpp"

namespace qk {

/// psi_i on a tensor of arity n+1: coproduct on slot i (1-based), second
/// component multiplied into the last slot.
TensorElement psi(const TensorElement& p, int i);

/// A_{i, r x c} on a tensor of arity n+1, returning arity n.
TensorElement a_op(const TensorElement& p, int i, int r, int c);

/// Phi^{Q,e}_{i,r}(P) with e the stage-current dimension vector.
TensorElement phi(const Quiver& q, const DimVector& e, const TensorElement& p, int i, int r);

/// P^{Q,e}_{i,r}.
TensorElement coefficients(const Quiver& q, const DimVector& e, const ResolutionPair& pair);

inline constexpr const char* kRationalSingularitiesCaveat =
    "conjectural-under-rational-singularities";

struct CoefficientTable {
  TensorElement tensor;
  int codim = 0;
  ResolutionPair pair;
  std::string caveat;  // empty for type A
};

enum class PairChoice { MinimalSupport, AllRoots };

CoefficientTable quiver_coefficients(const Quiver& q, const DimVector& e, const OrbitSpec& orbit,
                                     PairChoice choice = PairChoice::MinimalSupport);

CoefficientTable quiver_coefficients(const Quiver& q, const DimVector& e, const OrbitSpec& orbit,
                                     const ResolutionPair& pair);

/// Terms of total degree codim.
TensorElement cohomological_part(const CoefficientTable& table);

struct AlternatingReport {
  std::vector<std::pair<TensorKey, Coeff>> violations;
  bool ok() const { return violations.empty(); }
};

/// Keys whose coefficient sign differs from (-1)^{degree - codim}.
AlternatingReport check_alternating(const CoefficientTable& table);

/// quiver_coefficients of the arrow-reversed quiver for the same orbit.
CoefficientTable dual_coefficients(const Quiver& q, const DimVector& e, const OrbitSpec& orbit);

}  // namespace qk
