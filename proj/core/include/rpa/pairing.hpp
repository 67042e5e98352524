#pragma once

#include "rpa/representation.hpp"

namespace rpa {

/// B(e_i, e_j) = gram(i, j).
struct BilinForm {
  Space space;
  Matrix gram;

  BilinForm() = default;
  BilinForm(Space s, Matrix g);
  Scalar operator()(const Vec& x, const Vec& y) const;
  friend bool operator==(const BilinForm&, const BilinForm&) = default;
};

/// B(x.y, z) = B(x, y.z) and B([x,y], z) = B(x, [y,z]) on basis triples.
AxiomReport check_invariant_form(const RelPoissonAlgebra& a, const BilinForm& b);
bool is_nondegenerate(const BilinForm& b);
bool is_symmetric(const BilinForm& b);
/// The map P^ with B(P x, y) = B(x, P^ y). Throws std::invalid_argument
/// on a degenerate form.
Matrix adjoint_of(const Matrix& P, const BilinForm& b);
/// B_d(x + a*, y + b*) = <x, b*> + <a*, y> on A (+) A*.
BilinForm canonical_pairing_form(const Space& a);

/// Two relative Poisson algebras acting on each other: mu1, rho1 give the
/// actions of A1 on A2 (one matrix per A1 basis vector), mu2, rho2 those of
/// A2 on A1.
struct MatchedPairData {
  RelPoissonAlgebra A1;
  RelPoissonAlgebra A2;
  std::vector<Matrix> mu1, rho1, mu2, rho2;
};

AxiomReport check_matched_pair(const MatchedPairData& data);
/// A1 (+) A2 with the combined products and derivation P1 + P2.
RelPoissonAlgebra bowtie(const MatchedPairData& data, bool verify = true);

/// The double with both halves as subalgebras reproducing A and Astar, the
/// derivation P + Q*, and B_d invariant and nondegenerate.
AxiomReport check_manin_triple(const RelPoissonAlgebra& a, const RelPoissonAlgebra& astar,
                               const RelPoissonAlgebra& dbl);

/// ((A,P), (A*,Q*), -L*_A, ad*_A, -L*_{A*}, ad*_{A*}).
MatchedPairData induced_matched_pair(const RelPoissonAlgebra& a, const RelPoissonAlgebra& astar);

}  // namespace rpa
