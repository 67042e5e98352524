#include "corpus.hpp"
#include "doctest.h"

using namespace rpa;
using namespace rpa::testing;

namespace {

BilinearOp worked_dot() { return symmetrize(make_op(3, {{0, 0, 2, 2}, {0, 1, 2, 1}})); }
BilinearOp worked_bracket() { return antisymmetrize(make_op(3, {{0, 1, 2, 1}})); }

}  // namespace

TEST_CASE("structure constants") {
  const BilinearOp m = worked_dot();
  CHECK(m.product(0, 0) == Vec{0, 0, 2});
  CHECK(m.product(1, 0) == Vec{0, 0, 1});
  CHECK(m.apply(Vec{1, 1, 0}, Vec{1, 0, 0}) == Vec{0, 0, 3});
  CHECK(m.apply_left(Vec{0, 1, 0}, 0) == Vec{0, 0, 1});
  // Column e1 of L(e1) is 2e3 and column e2 is e3.
  CHECK(m.left(0) == Matrix{{0, 0, 0}, {0, 0, 0}, {2, 1, 0}});
  CHECK(m.left_all().size() == 3);
  CHECK(opposite(zinbiel_example())(1, 0, 2) == 1);
  CHECK((m - m).coeffs().is_zero());
  CHECK(m.relabel(Space({"a", "b", "c"})).space().label(0) == "a");
}

TEST_CASE("commutative associative checks") {
  CHECK(check_comm_assoc(worked_dot()).ok());
  CHECK(check_comm_assoc(BilinearOp(Space::standard(3))).ok());
  const AxiomReport z = check_comm_assoc(zinbiel_example());
  CHECK_FALSE(z.ok());
  CHECK(z.mentions("commutativity"));
  BilinearOp nonassoc = make_op(2, {{0, 0, 1, 1}, {1, 1, 0, 1}});
  CHECK(check_comm_assoc(nonassoc).mentions("associativity"));
}

TEST_CASE("Lie checks") {
  CHECK(check_lie(worked_bracket()).ok());
  CHECK(check_lie(BilinearOp(Space::standard(2))).ok());
  const AxiomReport r = check_lie(make_op(3, {{0, 1, 2, 1}}));
  CHECK_FALSE(r.ok());
  CHECK(r.mentions("antisymmetry"));
  REQUIRE_FALSE(r.violations().empty());
  CHECK(r.violations().front().indices == std::vector<std::size_t>{0, 1});
  // Antisymmetric but not Jacobi: [e1,e2]=e1, [e2,e3]=e2, [e3,e1]=e3 fails.
  const BilinearOp broken = antisymmetrize(make_op(3, {{0, 1, 0, 1}, {1, 2, 1, 1}, {2, 0, 2, 1}}));
  CHECK(check_lie(broken).mentions("jacobi"));
}

TEST_CASE("derivation checks") {
  CHECK(check_derivation(worked_dot(), example_derivation()).ok());
  CHECK(check_derivation(worked_dot(), Matrix(3, 3)).ok());
  Matrix P = example_derivation();
  P(2, 2) = 2;
  const AxiomReport r = check_derivation(worked_dot(), P);
  CHECK(r.mentions("derivation"));
  // P(e1.e1) = 4e3 while P(e1).e1 + e1.P(e1) = 6e3.
  bool found = false;
  for (const auto& v : r.violations())
    if (v.indices == std::vector<std::size_t>{0, 0}) {
      CHECK(v.defect == Vec{0, 0, -2});
      found = true;
    }
  CHECK(found);
}

TEST_CASE("relative Poisson checks") {
  const RelPoissonAlgebra a(worked_dot(), worked_bracket(), example_derivation());
  CHECK(check_rel_poisson(a).ok());
  // Trivial dot, any Lie bracket, any derivation of it.
  Rng rng(3);
  for (const auto& [name, br] : lie_bases()) {
    INFO(name);
    const Matrix P = random_derivation(rng, {br});
    CHECK(check_rel_poisson(RelPoissonAlgebra(BilinearOp(br.space()), br, P)).ok());
  }
  // One flipped bracket constant is located.
  BilinearOp flipped = worked_bracket();
  flipped.set(0, 1, 2, -1);
  const AxiomReport r = check_rel_poisson(RelPoissonAlgebra(worked_dot(), flipped, example_derivation()));
  CHECK_FALSE(r.ok());
  CHECK(r.mentions("bracket antisymmetry"));
}

TEST_CASE("relative Leibniz with P = 0 is the Poisson Leibniz rule") {
  // The polynomial algebra truncated at degree 2 with [x, x^2] = 0 is Poisson.
  const BilinearOp dot = truncated_polynomial(2);
  CHECK(check_relative_leibniz(dot, BilinearOp(dot.space()), Matrix(2, 2)).ok());
  const BilinearOp br = antisymmetrize(make_op(2, {{0, 1, 1, 1}}));
  CHECK_FALSE(check_relative_leibniz(dot, br, Matrix(2, 2)).ok());
}

TEST_CASE("bracket from a derivation") {
  // x^i x^j = x^(i+j), P(x) = x, P(x^2) = 2x^2: [x, x^2] = x.2x^2 - x.x^2 = 0 in
  // the truncation, so the bracket vanishes; with a nonzero P on x^2 only it
  // does not.
  const BilinearOp dot = truncated_polynomial(2);
  const Matrix P{{1, 0}, {0, 2}};
  const BilinearOp br = bracket_from_derivation(dot, P);
  CHECK(br.coeffs().is_zero());
  CHECK(check_lie(br).ok());

  const BilinearOp unital = unital_truncated_polynomial(3);  // 1, x, x^2
  const Matrix D{{0, 0, 0}, {0, 1, 0}, {0, 0, 2}};
  const BilinearOp b = bracket_from_derivation(unital, D);
  // [1, x] = 1.P(x) - P(1).x = x.
  CHECK(b.product(0, 1) == Vec{0, 1, 0});
  CHECK(b.product(1, 0) == Vec{0, -1, 0});
  CHECK(check_rel_poisson(RelPoissonAlgebra(unital, b, D)).ok());

  CHECK(bracket_from_derivation(dot, Matrix(2, 2)).coeffs().is_zero());
  CHECK(bracket_from_derivation(BilinearOp(Space::standard(2)), P).coeffs().is_zero());
  CHECK_THROWS_AS(bracket_from_derivation(zinbiel_example(), example_derivation()), PreconditionError);
  Matrix notder = example_derivation();
  notder(2, 2) = 2;
  CHECK_THROWS_AS(bracket_from_derivation(worked_dot(), notder), PreconditionError);
}

TEST_CASE("units") {
  CHECK(find_unit(idempotents(1)) == Vec{1});
  CHECK(find_unit(idempotents(3)) == Vec{1, 1, 1});
  CHECK(find_unit(unital_truncated_polynomial(3)) == Vec{1, 0, 0});
  CHECK_FALSE(find_unit(BilinearOp(Space::standard(2))).has_value());
  CHECK_FALSE(find_unit(worked_dot()).has_value());
  CHECK(find_unit(BilinearOp(Space::standard(0))) == Vec{});
}

TEST_CASE("Jacobi algebra checks") {
  const RelPoissonAlgebra& j = example_pipeline().rmatrix.algebra;
  CHECK(check_jacobi_algebra(j.dot, j.bracket).ok());
  CHECK(check_jacobi_algebra(unital_truncated_polynomial(3), BilinearOp(Space::standard(3))).ok());
  CHECK_THROWS_AS(check_jacobi_algebra(worked_dot(), worked_bracket()), PreconditionError);
  CHECK(ad(j.bracket, basis_vec(7, 0)) == j.P);
}

TEST_CASE("axiom reports") {
  AxiomReport r(2);
  r.expect_zero("a", {0}, Vec{0, 0});
  CHECK(r.ok());
  r.expect_zero("a", {1}, Vec{1});
  r.expect_zero("b", {2}, Matrix{{1}});
  r.expect_zero("c", {3}, Vec{1});
  CHECK(r.total() == 3);
  CHECK(r.violations().size() == 2);
  AxiomReport outer;
  outer.merge(r, "group");
  CHECK(outer.total() == 3);
  CHECK(outer.mentions("group a"));
  CHECK_FALSE(outer.mentions("c"));
  CHECK_THROWS_AS(require(r, "stage"), PreconditionError);
  try {
    require(r, "stage");
  } catch (const PreconditionError& e) {
    CHECK(e.stage() == "stage");
  }
  CHECK_NOTHROW(require(AxiomReport(), "stage"));
}
