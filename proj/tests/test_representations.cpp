#include "corpus.hpp"
#include "doctest.h"

using namespace rpa;
using namespace rpa::testing;

namespace {

Vec flatten(const Matrix& m) { return m.data(); }

// The three dual-representation identities for beta, flattened.
Vec dualrep_defect(const RepData& rep, const Matrix& beta) {
  const auto& A = rep.algebra;
  const std::size_t n = A.dim();
  Vec out;
  for (std::size_t x = 0; x < n; ++x) {
    const Vec px = A.P.column(x);
    const Vec a = flatten(rep.mu[x] * beta - rep.mu_of(px) - beta * rep.mu[x]);
    const Vec b = flatten(rep.rho[x] * beta - rep.rho_of(px) - beta * rep.rho[x]);
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    for (std::size_t y = 0; y < n; ++y) {
      const Vec xy = A.dot.product(x, y);
      const Vec c = flatten(-rep.rho_of(xy) + rep.rho[y] * rep.mu[x] + rep.rho[x] * rep.mu[y] + beta * rep.mu_of(xy));
      out.insert(out.end(), c.begin(), c.end());
    }
  }
  return out;
}

std::vector<Named<RepData>> rep_corpus(Rng& rng) {
  std::vector<Named<RepData>> out;
  for (const auto& [name, a] : rel_poisson_corpus(rng)) out.push_back({name + "/adjoint", adjoint_rep(a)});
  for (const auto& [name, pp] : pre_poisson_corpus(rng)) out.push_back({name + "/pre-poisson", subadjacent(pp).second});
  for (const auto& [name, a] : unital_corpus(rng)) out.push_back({name + "/adjoint", adjoint_rep(a)});
  return out;
}

}  // namespace

TEST_CASE("adjoint representation of the worked example") {
  const RelPoissonAlgebra& a = example_pipeline().subadjacent;
  const RepData rep = adjoint_rep(a);
  CHECK(check_representation(rep).ok());
  CHECK(rep.mu[0] == Matrix{{0, 0, 0}, {0, 0, 0}, {2, 1, 0}});
  CHECK(rep.rho[0] == Matrix{{0, 0, 0}, {0, 0, 0}, {0, 1, 0}});
  RepData doubled = rep;
  doubled.alpha = Scalar(2) * a.P;
  CHECK(check_representation(doubled).mentions("rep1"));
}

TEST_CASE("small representations") {
  const RelPoissonAlgebra k(idempotents(1), BilinearOp(Space::standard(1)), Matrix(1, 1));
  const RepData rep = adjoint_rep(k);
  CHECK(rep.mu[0] == Matrix{{1}});
  CHECK(rep.rho[0] == Matrix{{0}});
  CHECK(check_representation(rep).ok());

  const RelPoissonAlgebra& a = example_pipeline().subadjacent;
  const RepData empty(a, Space(), std::vector<Matrix>(3, Matrix(0, 0)), std::vector<Matrix>(3, Matrix(0, 0)),
                      Matrix(0, 0));
  CHECK(check_representation(empty).ok());

  const RelPoissonAlgebra zero(BilinearOp(Space::standard(2)), BilinearOp(Space::standard(2)), Matrix(2, 2));
  const RepData z = adjoint_rep(zero);
  for (const auto& m : z.mu) CHECK(m.is_zero());
  for (const auto& m : z.rho) CHECK(m.is_zero());
  CHECK_THROWS_AS(RepData(a, Space::standard(2), {}, {}, Matrix(2, 2)), std::invalid_argument);
}

TEST_CASE("minus alpha always dually represents") {
  Rng rng(30);
  for (const auto& [name, rep] : rep_corpus(rng)) {
    INFO(name);
    REQUIRE(check_representation(rep).ok());
    const Matrix beta = -rep.alpha;
    CHECK(check_dualrep_conditions(rep, beta).ok());
    CHECK(check_alpha_beta_conditions(rep, beta).ok());
    CHECK(check_representation(dual_rep(rep, beta)).ok());
  }
}

TEST_CASE("dual representation conditions: three formulations agree") {
  Rng rng(31);
  std::size_t positives = 0;
  for (const auto& [name, rep] : rep_corpus(rng)) {
    INFO(name);
    const std::size_t m = rep.module_dim();
    const auto fam = solve_affine(m, [&](const Matrix& beta) { return dualrep_defect(rep, beta); });
    REQUIRE(fam);
    std::vector<Matrix> betas = {sample(rng, *fam), sample(rng, *fam), random_matrix(rng, m, m), rep.alpha};
    for (const Matrix& beta : betas) {
      const bool direct = check_dualrep_conditions(rep, beta).ok();
      CHECK(direct == check_representation(dual_rep(rep, beta)).ok());
      CHECK(direct == check_alpha_beta_conditions(rep, beta).ok());
      positives += direct;
    }
  }
  CHECK(positives > 20);
}

TEST_CASE("plus alpha fails on the extended Jacobi algebra") {
  const RelPoissonAlgebra& ext = example_pipeline().extended;
  const RepData rep = adjoint_rep(ext);
  CHECK(check_dualrep_conditions(rep, -ext.P).ok());
  const AxiomReport r = check_alpha_beta_conditions(rep, ext.P);
  CHECK(r.mentions("eqdualrep2"));
  CHECK_FALSE(check_dualrep_conditions(rep, ext.P).ok());
}

TEST_CASE("dually representing maps") {
  Rng rng(32);
  for (const auto& [name, a] : rel_poisson_corpus(rng)) {
    INFO(name);
    CHECK(check_dually_represents(a, -a.P).ok());
    CHECK(check_dually_represents_product_form(a, -a.P).ok());
  }
  for (const auto& [name, a] : unital_corpus(rng)) {
    INFO(name);
    CHECK(check_dually_represents(a, -ad(a.bracket, *find_unit(a.dot))).ok());
  }
  // Q = 0 on a Poisson algebra: trivial dot and the sl2 bracket.
  const RelPoissonAlgebra poisson(BilinearOp(Space::standard(3)), sl2(), Matrix(3, 3));
  CHECK(check_dually_represents(poisson, Matrix(3, 3)).ok());
  CHECK_FALSE(check_dually_represents(example_pipeline().subadjacent, Matrix::identity(3)).ok());
}

TEST_CASE("cyclic and product forms of the third identity agree on the corpus") {
  Rng rng(33);
  for (const auto& [name, a] : rel_poisson_corpus(rng)) {
    INFO(name);
    const auto fam = solve_affine(a.dim(), [&](const Matrix& Q) { return dually_represents_defect(a, Q); });
    REQUIRE(fam);
    for (const Matrix& Q : {sample(rng, *fam), sample(rng, *fam), random_matrix(rng, a.dim(), a.dim())}) {
      CHECK(check_dually_represents(a, Q).ok() == check_dually_represents_product_form(a, Q).ok());
      CHECK(check_dually_represents(a, Q).ok() == check_representation(dual_rep(adjoint_rep(a), Q)).ok());
    }
  }
}

TEST_CASE("semidirect products") {
  Rng rng(34);
  for (const auto& [name, rep] : rep_corpus(rng)) {
    INFO(name);
    CHECK(check_rel_poisson(semidirect_product(rep)).ok());
  }
  // The zero representation: V is an ideal with V.V = 0.
  const RelPoissonAlgebra& a = example_pipeline().subadjacent;
  const RepData zero(a, Space::standard(2, "v"), std::vector<Matrix>(3, Matrix(2, 2)),
                     std::vector<Matrix>(3, Matrix(2, 2)), Matrix(2, 2));
  const RelPoissonAlgebra sd = semidirect_product(zero);
  CHECK(sd.space.labels() == std::vector<std::string>{"e1", "e2", "e3", "v1", "v2"});
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 3; j < 5; ++j) {
      CHECK(is_zero(sd.dot.product(i, j)));
      CHECK(is_zero(sd.bracket.product(i, j)));
    }
  CHECK(sd.dot.product(0, 0) == Vec{0, 0, 2, 0, 0});

  RepData broken = adjoint_rep(a);
  broken.alpha = Scalar(2) * a.P;
  CHECK_THROWS_AS(semidirect_product(broken), PreconditionError);
}

TEST_CASE("equivalence of representations") {
  const RepData rep = adjoint_rep(example_pipeline().subadjacent);
  CHECK(check_rep_equivalence(rep, rep, Matrix::identity(3)));
  CHECK_FALSE(check_rep_equivalence(rep, rep, Matrix(3, 3)));

  // A Frobenius algebra: x -> B(x, -) intertwines the adjoint representation
  // with the dual representation twisted by the adjoint of P.
  const FrobeniusJacobiAlgebra& f = example_pipeline().frobenius;
  const RepData adj = adjoint_rep(f.algebra);
  const Matrix phat = adjoint_of(f.algebra.P, f.form);
  CHECK(check_rep_equivalence(adj, dual_rep(adj, phat), f.form.gram));
}

TEST_CASE("Jacobi representations") {
  const RelPoissonAlgebra& j = example_pipeline().rmatrix.algebra;
  const RepData reg = adjoint_rep(j);
  CHECK(check_jacobi_representation(j.dot, j.bracket, reg.mu, reg.rho).ok());
  std::vector<Matrix> mu = reg.mu;
  mu[0] = Matrix(7, 7);
  CHECK(check_jacobi_representation(j.dot, j.bracket, mu, reg.rho).mentions("unital"));
  CHECK_THROWS_AS(check_jacobi_representation(example_pipeline().subadjacent.dot,
                                              example_pipeline().subadjacent.bracket, adjoint_rep(example_pipeline().subadjacent).mu,
                                              adjoint_rep(example_pipeline().subadjacent).rho),
                  PreconditionError);
}
