#pragma once

#include "rpa/prepoisson.hpp"

#include <string>
#include <vector>

namespace rpa {

/// Adjoins a unit: e.x = x, e.e = e, [e,x] = P(x), P(e) = 0. The unit is
/// the first basis vector and carries `unit_label`.
RelPoissonAlgebra extend_jacobi(const RelPoissonAlgebra& a, const std::string& unit_label = "e");

/// The same module over extend_jacobi(rep.algebra) with mu(e) = id and
/// rho(e) = alpha.
RepData extend_representation(const RepData& rep);

struct OOperatorData {
  RepData rep;
  Matrix T;
};

/// T: V -> A composed with the inclusion A -> A~, checked against the
/// extended representation.
OOperatorData lift_o_operator(const RepData& rep, const Matrix& T);

struct FrobeniusJacobiAlgebra {
  RelPoissonAlgebra algebra;
  BilinForm form;
};

/// Unit present, Jacobi algebra with P = ad(1), form symmetric,
/// nondegenerate and invariant.
AxiomReport check_frobenius_jacobi(const FrobeniusJacobiAlgebra& f);

struct StageRecord {
  std::string name;
  std::string detail;
};

struct PipelineResult {
  RelPrePoissonAlgebra input;
  RelPoissonAlgebra subadjacent;
  RelPoissonAlgebra extended;
  /// The Jacobi algebra J = A~ x A* with basis E, E1, ..., its r-matrix and Q.
  RMatrixConstruction rmatrix;
  BialgebraData bialgebra;
  MatchedPairData matched_pair;
  FrobeniusJacobiAlgebra frobenius;
  std::vector<StageRecord> stages;
};

/// Runs every construction from a relative pre-Poisson algebra to the
/// Frobenius Jacobi double and re-verifies each intermediate result. A
/// failure raises PreconditionError tagged with the stage name.
PipelineResult frobenius_jacobi_pipeline(const RelPrePoissonAlgebra& pp);

}  // namespace rpa
