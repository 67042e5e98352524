#include "corpus.hpp"
#include "doctest.h"

using namespace rpa;
using namespace rpa::testing;

namespace {

const Space& jspace() { return example_pipeline().bialgebra.algebra.space; }
std::size_t at(const char* label) { return *jspace().index_of(label); }

Comultiplication random_comult(Rng& rng, std::size_t n) {
  Comultiplication c(Space::standard(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c.d(i, j, k) = small_scalar(rng, -1, 1);
  return c;
}

}  // namespace

TEST_CASE("comultiplication evaluation") {
  Comultiplication c(Space::standard(2));
  c.d(0, 1, 1) = 3;
  CHECK(c.of(1) == Matrix{{0, 3}, {0, 0}});
  CHECK(c.of(Vec{5, 2}) == Matrix{{0, 6}, {0, 0}});
  CHECK(c.of(0).is_zero());
  CHECK_THROWS_AS(Comultiplication(Space::standard(2), Array3(3)), std::invalid_argument);
}

TEST_CASE("coalgebra checks on the worked example") {
  const BialgebraData& b = example_pipeline().bialgebra;
  CHECK(check_cocomm_coassoc(b.Delta).ok());
  CHECK(check_lie_coalgebra(b.delta).ok());
  CHECK(check_rel_poisson_coalgebra(b.Delta, b.delta, b.Q).ok());
  CHECK(check_cocomm_coassoc(Comultiplication(jspace())).ok());
  CHECK(check_lie_coalgebra(Comultiplication(jspace())).ok());

  Comultiplication half = b.Delta;
  half.d(at("E4"), at("E3"), at("E1")) = 0;
  CHECK(check_cocomm_coassoc(half).mentions("cocommutativity"));

  Comultiplication lone(jspace());
  lone.d(at("E4"), at("E5"), at("E6")) = 1;
  CHECK(check_lie_coalgebra(lone).mentions("coantisymmetry"));

  const Matrix shifted = b.Q + Matrix::identity(7);
  CHECK(check_rel_poisson_coalgebra(b.Delta, b.delta, shifted).mentions("Co1"));
  CHECK(check_rel_poisson_coalgebra(Comultiplication(jspace()), Comultiplication(jspace()), shifted).ok());
}

TEST_CASE("coalgebras are dual to algebras") {
  const BialgebraData& b = example_pipeline().bialgebra;
  const BilinearOp dual = comult_to_dual_algebra(b.Delta);
  const Space& s = dual.space();
  Vec expect = zero_vec(7);
  expect[*s.index_of("E6*")] = -2;
  CHECK(dual.product(*s.index_of("E4*"), *s.index_of("E4*")) == expect);
  expect[*s.index_of("E6*")] = -1;
  CHECK(dual.product(*s.index_of("E4*"), *s.index_of("E5*")) == expect);
  CHECK(dual_algebra_to_comult(dual) == b.Delta);
  CHECK(comult_to_dual_algebra(Comultiplication(jspace())).coeffs().is_zero());

  // A coalgebra is a relative Poisson coalgebra exactly when its dual is a
  // relative Poisson algebra.
  Rng rng(70);
  std::size_t positives = 0;
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 1 + round % 3;
    Comultiplication D = random_comult(rng, n), d = random_comult(rng, n);
    if (round % 4 == 0) d = Comultiplication(D.space);
    if (round % 4 == 1) D = Comultiplication(D.space);
    if (round % 8 == 2) {
      D = Comultiplication(D.space);
      d = Comultiplication(D.space);
    }
    const Matrix Q = random_matrix(rng, n, n, -1, 1);
    const bool co = check_rel_poisson_coalgebra(D, d, Q).ok();
    const RelPoissonAlgebra a(comult_to_dual_algebra(D), comult_to_dual_algebra(d), Q.transpose());
    CHECK(co == check_rel_poisson(a).ok());
    positives += co;
  }
  Rng rng2(71);
  for (const auto& [name, b2] : bialgebra_corpus(rng2)) {
    INFO(name);
    CHECK(check_rel_poisson_coalgebra(b2.Delta, b2.delta, b2.Q).ok());
    CHECK(check_rel_poisson(dual_algebra(b2)).ok());
  }
  CHECK(positives > 0);
}

TEST_CASE("bialgebra check on the worked example") {
  const BialgebraData& b = example_pipeline().bialgebra;
  CHECK(check_bialgebra(b).ok());
  CHECK(b.algebra.P == ad(b.algebra.bracket, basis_vec(7, 0)));
  CHECK(b.Q == -b.algebra.P);

  // delta(E6) only meets the other conditions through ad(E), which acts
  // column by column, so flipping its sign keeps a bialgebra.
  BialgebraData flipped = b;
  flipped.delta.d(at("E4"), at("E5"), at("E6")) = 1;
  flipped.delta.d(at("E5"), at("E4"), at("E6")) = -1;
  CHECK(check_bialgebra(flipped).ok());
  CHECK(check_matched_pair(bialgebra_to_matched_pair(flipped)).ok());

  // Flipping delta(E1) alone breaks delta(E1 + E2) = delta([E, E1]).
  BialgebraData one = b;
  one.delta.d(at("E3"), at("E4"), at("E1")) = 1;
  one.delta.d(at("E4"), at("E3"), at("E1")) = -1;
  const AxiomReport r = check_bialgebra(one);
  CHECK_FALSE(r.ok());
  CHECK(r.mentions("(4) lie-cocycle"));
}

TEST_CASE("zero cobrackets with Q = -P") {
  Rng rng(72);
  for (const auto& [name, a] : rel_poisson_corpus(rng)) {
    INFO(name);
    const BialgebraData b{a, Comultiplication(a.space), Comultiplication(a.space), -a.P};
    CHECK(check_bialgebra(b).ok());
    const BialgebraData d = dualize_bialgebra(b);
    CHECK(d.Delta.d == Scalar(-1) * a.dot.coeffs());
    CHECK(d.delta.d == Scalar(-1) * a.bracket.coeffs());
    CHECK(d.algebra.dot.coeffs().is_zero());
    CHECK(check_bialgebra(d).ok());
    // The double is the semidirect product along the dual of the adjoint.
    CHECK(bowtie(bialgebra_to_matched_pair(b)) == semidirect_product(dual_rep(adjoint_rep(a), -a.P)));
  }
}

TEST_CASE("dualizing the worked example") {
  const BialgebraData& b = example_pipeline().bialgebra;
  const BialgebraData d = dualize_bialgebra(b);
  CHECK(check_bialgebra(d).ok());
  CHECK(d.algebra.space.label(0) == "E*");
  CHECK(d.Q == b.algebra.P.transpose());
  CHECK(dualize_bialgebra(d) == transport_bialgebra(b, -Matrix::identity(7)));
  BialgebraData broken = b;
  broken.Q = Matrix(7, 7);
  CHECK_THROWS_AS(dualize_bialgebra(broken), PreconditionError);
  CHECK_NOTHROW(dualize_bialgebra(broken, false));
}

TEST_CASE("the double of the worked example") {
  const BialgebraData& b = example_pipeline().bialgebra;
  CHECK(bowtie(bialgebra_to_matched_pair(b)) == example_pipeline().frobenius.algebra);
  BialgebraData broken = b;
  broken.Delta.d(at("E4"), at("E3"), at("E1")) = 0;
  CHECK_THROWS_AS(bialgebra_to_matched_pair(broken), PreconditionError);
}

TEST_CASE("condition groups are reported separately") {
  const BialgebraData& b = example_pipeline().bialgebra;
  BialgebraData q = b;
  q.Q = Matrix(7, 7);
  const AxiomReport r = check_bialgebra(q);
  CHECK_FALSE(r.ok());
  CHECK(r.mentions("(5)"));
  BialgebraData p = b;
  p.algebra.P = Matrix(7, 7);
  CHECK(check_bialgebra(p).mentions("(1)"));
  CHECK_THROWS_AS(check_bialgebra(BialgebraData{b.algebra, Comultiplication(Space::standard(7)), b.delta, b.Q}),
                  std::invalid_argument);
}
