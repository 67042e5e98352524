#pragma once

#include "rpa/pairing.hpp"

namespace rpa {

/// Linear map A -> A (x) A with e_k |-> sum_{i,j} d(i,j,k) e_i (x) e_j.
struct Comultiplication {
  Space space;
  Array3 d;

  Comultiplication() = default;
  explicit Comultiplication(Space s);
  Comultiplication(Space s, Array3 coeffs);

  std::size_t dim() const { return space.dim(); }
  /// Image of x as a coefficient matrix M with M(i,j) the e_i (x) e_j entry.
  Matrix of(const Vec& x) const;
  Matrix of(std::size_t k) const;
  friend bool operator==(const Comultiplication&, const Comultiplication&) = default;
};

/// (id (x) D) applied to the 2-tensor t.
Array3 id_tensor(const Comultiplication& D, const Matrix& t);
/// (D (x) id) applied to the 2-tensor t.
Array3 tensor_id(const Comultiplication& D, const Matrix& t);

AxiomReport check_cocomm_coassoc(const Comultiplication& D);
AxiomReport check_lie_coalgebra(const Comultiplication& d);
/// Coalgebra axioms for both maps plus the three compatibilities with Q.
AxiomReport check_rel_poisson_coalgebra(const Comultiplication& Delta, const Comultiplication& delta,
                                        const Matrix& Q);

/// Product on A* with e_i* e_j* = sum_k d(i,j,k) e_k*.
BilinearOp comult_to_dual_algebra(const Comultiplication& D);
/// Inverse of comult_to_dual_algebra; the space of the result is the dual
/// of the product's space.
Comultiplication dual_algebra_to_comult(const BilinearOp& m);

struct BialgebraData {
  RelPoissonAlgebra algebra;
  Comultiplication Delta;
  Comultiplication delta;
  Matrix Q;

  friend bool operator==(const BialgebraData&, const BialgebraData&) = default;
};

/// Groups "(1)" to "(7)": algebra, coalgebra, Delta cocycle, delta cocycle,
/// Q dually represents A, P* dually represents A*, the mixed identities.
/// Group (5) runs the cyclic and the product forms side by side.
AxiomReport check_bialgebra(const BialgebraData& data);

/// (A*, Delta*, delta*, Q*).
RelPoissonAlgebra dual_algebra(const BialgebraData& data);
/// (A*, Delta*, delta*, Delta_{A*}, delta_{A*}, Q*, P*) where the new
/// comultiplications are minus the transposed products of A.
BialgebraData dualize_bialgebra(const BialgebraData& data, bool verify = true);
/// Transport along the invertible map phi: A -> A (same basis labels).
BialgebraData transport_bialgebra(const BialgebraData& data, const Matrix& phi);
/// The induced matched pair between A and A*.
MatchedPairData bialgebra_to_matched_pair(const BialgebraData& data, bool verify = true);

}  // namespace rpa
