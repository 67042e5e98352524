#pragma once

#include "rpa/yang_baxter.hpp"

#include <utility>

namespace rpa {

/// (A, star, circ, P) with star Zinbiel, circ pre-Lie and P a derivation of both.
struct RelPrePoissonAlgebra {
  Space space;
  BilinearOp star;
  BilinearOp circ;
  Matrix P;

  RelPrePoissonAlgebra() = default;
  RelPrePoissonAlgebra(BilinearOp star_, BilinearOp circ_, Matrix P_);
  std::size_t dim() const { return space.dim(); }
  friend bool operator==(const RelPrePoissonAlgebra&, const RelPrePoissonAlgebra&) = default;
};

AxiomReport check_zinbiel(const BilinearOp& m);
AxiomReport check_prelie(const BilinearOp& m);
AxiomReport check_rel_pre_poisson(const RelPrePoissonAlgebra& pp);

/// x o y = x * P(y) - P(x) * y. Throws PreconditionError when star is not
/// Zinbiel or P is not a derivation of it.
BilinearOp circ_from_derivation(const BilinearOp& star, const Matrix& P);

/// The sub-adjacent algebra (x*y + y*x, x o y - y o x, P) together with the
/// representation (L_star, L_circ, P) on the underlying space.
std::pair<RelPoissonAlgebra, RepData> subadjacent(const RelPrePoissonAlgebra& pp);

/// The identity O-operator pushed through o_operator_to_rmatrix with
/// beta = Q = -P. The returned Q is -P + P*.
RMatrixConstruction prepoisson_to_rmatrix(const RelPrePoissonAlgebra& pp);

}  // namespace rpa
