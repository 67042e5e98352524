#pragma once

#include "rpa/algebra.hpp"

#include <vector>

namespace rpa {

/// Candidate representation (mu, rho, alpha, V) of a relative Poisson
/// algebra. mu[i] and rho[i] are the actions of the i-th basis vector.
/// Without alpha this is a compatible structure; alpha is then ignored.
struct RepData {
  RelPoissonAlgebra algebra;
  Space module;
  std::vector<Matrix> mu;
  std::vector<Matrix> rho;
  Matrix alpha;

  RepData() = default;
  RepData(RelPoissonAlgebra a, Space v, std::vector<Matrix> mu_, std::vector<Matrix> rho_, Matrix alpha_);

  std::size_t module_dim() const { return module.dim(); }
  Matrix mu_of(const Vec& x) const;
  Matrix rho_of(const Vec& x) const;
};

/// Action x -> sum_i x_i ops[i].
Matrix act(const std::vector<Matrix>& ops, const Vec& x, std::size_t module_dim);

/// mu a representation of (A, .), rho one of (A, [,]) and the compatibility
/// between them.
AxiomReport check_compatible_structure(const RepData& rep);
/// Compatible structure plus the three alpha conditions.
AxiomReport check_representation(const RepData& rep);

/// (L, ad, P, A)
RepData adjoint_rep(const RelPoissonAlgebra& a);
/// The candidate (-mu*, rho*, beta*, V*).
RepData dual_rep(const RepData& rep, const Matrix& beta);
/// The conditions for beta to dually represent A on (mu, rho, V).
AxiomReport check_dualrep_conditions(const RepData& rep, const Matrix& beta);
/// The (alpha + beta) forms of the same conditions, including both
/// product forms of the third one.
AxiomReport check_alpha_beta_conditions(const RepData& rep, const Matrix& beta);

/// Q dually represents A: (-L*, ad*, Q*, A*) is a representation. Evaluated
/// through the three identities for Q on A itself.
AxiomReport check_dually_represents(const RelPoissonAlgebra& a, const Matrix& Q);
/// Same predicate with the triple-product identity (P+Q)(x.y.z) = 0 in place
/// of the cyclic bracket identity.
AxiomReport check_dually_represents_product_form(const RelPoissonAlgebra& a, const Matrix& Q);

/// A (+) V with products extended by the actions and derivation P + alpha.
/// With verify set, the representation is checked first.
RelPoissonAlgebra semidirect_product(const RepData& rep, bool verify = true);

/// phi: V1 -> V2 invertible and intertwining mu, rho and alpha.
bool check_rep_equivalence(const RepData& rep1, const RepData& rep2, const Matrix& phi);

/// Representation of the Jacobi algebra (A, ., [,]): mu unital, both actions
/// representations and the two Jacobi compatibility identities. Throws
/// PreconditionError("no unit") when dot has no unit.
AxiomReport check_jacobi_representation(const BilinearOp& dot, const BilinearOp& bracket,
                                        const std::vector<Matrix>& mu, const std::vector<Matrix>& rho);
/// -rho(x.y) + rho(y)mu(x) + rho(x)mu(y) - rho(1)mu(x.y) = 0.
AxiomReport check_jacobi_dual_identity(const BilinearOp& dot, const std::vector<Matrix>& mu,
                                       const std::vector<Matrix>& rho);

}  // namespace rpa
