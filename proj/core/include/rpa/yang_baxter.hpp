#pragma once

#include "rpa/bialgebra.hpp"

#include <utility>

namespace rpa {

/// r12 * r13 - r12 * r23 + r13 * r23 for the coefficient matrix r.
Array3 aybe_tensor(const Matrix& r, const BilinearOp& dot);
/// [r12, r13] + [r12, r23] + [r13, r23].
Array3 cybe_tensor(const Matrix& r, const BilinearOp& bracket);

bool is_antisymmetric(const Matrix& r);

/// AYBE, CYBE and the two P/Q intertwining conditions.
AxiomReport check_rpybe(const RelPoissonAlgebra& a, const Matrix& Q, const Matrix& r);
/// The operator form: r viewed as a map A* -> A satisfies the two O-operator
/// identities for (-L*, ad*) and P r = r Q*. Throws std::invalid_argument
/// unless r is antisymmetric.
AxiomReport check_rpybe_via_maps(const RelPoissonAlgebra& a, const Matrix& Q, const Matrix& r);

/// Delta(x) = (id (x) L(x) - L(x) (x) id) r and
/// delta(x) = (ad(x) (x) id + id (x) ad(x)) r.
std::pair<Comultiplication, Comultiplication> coboundary_comults(const RelPoissonAlgebra& a, const Matrix& r);
/// The coboundary bialgebra candidate (A, Delta_r, delta_r, Q).
BialgebraData coboundary_bialgebra(const RelPoissonAlgebra& a, const Matrix& Q, const Matrix& r);

/// AYBE1, AYBE2, CYBE1, CYBE2 and tr1 to tr7 for a general r. Throws
/// PreconditionError unless Q dually represents A.
AxiomReport check_coboundary_conditions(const RelPoissonAlgebra& a, const Matrix& Q, const Matrix& r);

/// O1 to O3 for T: V -> A against (mu, rho, V) and alpha = rep.alpha.
AxiomReport check_weak_o_operator(const RepData& rep, const Matrix& T);
/// Weak O-operator on top of a representation.
AxiomReport check_o_operator(const RepData& rep, const Matrix& T);

/// Output of the O-operator construction: the semidirect algebra
/// A x V*, the element r = T - tau(T) and the map Q + alpha*.
struct RMatrixConstruction {
  RelPoissonAlgebra algebra;
  Matrix r;
  Matrix Q;
};

/// Throws PreconditionError naming the first failed requirement: beta
/// dually represents A on the compatible structure, T is an O-operator,
/// T beta = Q T, and Q dually represents A.
RMatrixConstruction o_operator_to_rmatrix(const RepData& rep, const Matrix& beta, const Matrix& Q, const Matrix& T);

/// Representation, beta dually representing, Q dually representing and the
/// two mixed identities cond1, cond2.
AxiomReport check_semidirect_dual_conditions(const RepData& rep, const Matrix& Q, const Matrix& beta);

}  // namespace rpa
