#pragma once

#include <string>

#include "qk/partition.hpp"
#include "qk/quiver.hpp"
#include "qk/tensor.hpp"

namespace qk {

/// Multiplicities m_ij of the roots alpha_ij = e_i + ... + e_j of A3.
struct A3OrbitMults {
  int m11 = 0, m12 = 0, m13 = 0, m22 = 0, m23 = 0, m33 = 0;

  DimVector dimension() const;
  /// Orbit on either A3 orientation (vertices 1,2,3 in a line).
  OrbitSpec to_orbit(const Quiver& q) const;
  static A3OrbitMults from_orbit(const OrbitSpec& orbit);
  std::string to_string() const;
  bool operator==(const A3OrbitMults&) const = default;
};

/// Every A3OrbitMults with the given dimension vector.
std::vector<A3OrbitMults> a3_orbits(const DimVector& e);

/// A2 (1 -> 2) orbit of rank r: the single term (empty, (e1-r)^(e2-r)).
TensorElement porteous(int e1, int e2, int r);

enum class OracleMethod { Algebraic, Tableaux };

/// Coefficient c_{lambda,mu,nu} for the inbound quiver 1 -> 2 <- 3.
Coeff inbound_c(const Partition& lambda, const Partition& mu, const Partition& nu,
                const A3OrbitMults& m, OracleMethod method = OracleMethod::Algebraic);

/// Full table for the inbound quiver.
TensorElement inbound_table(const A3OrbitMults& m);

/// Coefficient of G_lambda (x) G_mu (x) G_nu in the double coproduct of G_R.
Coeff outbound_d(const Partition& rect, const Partition& lambda, const Partition& mu,
                 const Partition& nu, OracleMethod method = OracleMethod::Algebraic);

/// Full table for the outbound quiver 1 <- 2 -> 3.
TensorElement outbound_table(const A3OrbitMults& m);

}  // namespace qk
