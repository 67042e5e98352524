#include "rpa/jacobi.hpp"

#include <stdexcept>

namespace rpa {

RelPoissonAlgebra extend_jacobi(const RelPoissonAlgebra& a, const std::string& unit_label) {
  require(check_rel_poisson(a), "extend-jacobi");
  std::vector<std::string> labels{unit_label};
  for (const auto& l : a.space.labels()) {
    if (l == unit_label) throw std::invalid_argument("extend-jacobi: unit label already in use");
    labels.push_back(l);
  }
  const Space s(std::move(labels));
  const std::size_t n = a.dim();
  BilinearOp dot(s), br(s);
  dot.set(0, 0, 0, Scalar(1));
  for (std::size_t i = 0; i < n; ++i) {
    dot.set(0, i + 1, i + 1, Scalar(1));
    dot.set(i + 1, 0, i + 1, Scalar(1));
    for (std::size_t k = 0; k < n; ++k) {
      br.set(0, i + 1, k + 1, a.P(k, i));
      br.set(i + 1, 0, k + 1, -a.P(k, i));
      for (std::size_t j = 0; j < n; ++j) {
        dot.set(i + 1, j + 1, k + 1, a.dot(i, j, k));
        br.set(i + 1, j + 1, k + 1, a.bracket(i, j, k));
      }
    }
  }
  return RelPoissonAlgebra(std::move(dot), std::move(br), block_diag(Matrix(1, 1), a.P));
}

RepData extend_representation(const RepData& rep) {
  require(check_representation(rep), "extend-representation");
  RelPoissonAlgebra ext = extend_jacobi(rep.algebra);
  std::vector<Matrix> mu{Matrix::identity(rep.module_dim())};
  std::vector<Matrix> rho{rep.alpha};
  mu.insert(mu.end(), rep.mu.begin(), rep.mu.end());
  rho.insert(rho.end(), rep.rho.begin(), rep.rho.end());
  return RepData(std::move(ext), rep.module, std::move(mu), std::move(rho), rep.alpha);
}

OOperatorData lift_o_operator(const RepData& rep, const Matrix& T) {
  require(check_o_operator(rep, T), "lift-o-operator");
  RepData ext = extend_representation(rep);
  Matrix lifted(T.rows() + 1, T.cols());
  for (std::size_t a = 0; a < T.rows(); ++a)
    for (std::size_t i = 0; i < T.cols(); ++i) lifted(a + 1, i) = T(a, i);
  require(check_weak_o_operator(ext, lifted), "lift-o-operator");
  return OOperatorData{std::move(ext), std::move(lifted)};
}

AxiomReport check_frobenius_jacobi(const FrobeniusJacobiAlgebra& f) {
  AxiomReport out;
  const auto& a = f.algebra;
  const auto unit = find_unit(a.dot);
  if (!unit) {
    out.expect_zero("unit", {}, Vec{Scalar(1)});
    return out;
  }
  out.merge(check_jacobi_algebra(a.dot, a.bracket), "jacobi");
  out.expect_zero("derivation-is-ad-unit", {}, a.P - ad(a.bracket, *unit));
  out.expect_zero("form-symmetric", {}, f.form.gram - f.form.gram.transpose());
  if (!is_nondegenerate(f.form)) out.expect_zero("form-nondegenerate", {}, Vec{Scalar(1)});
  out.merge(check_invariant_form(a, f.form));
  return out;
}

namespace {

Space pipeline_labels(std::size_t n) {
  std::vector<std::string> labels{"E"};
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("E" + std::to_string(i));
  return Space(std::move(labels));
}

}  // namespace

PipelineResult frobenius_jacobi_pipeline(const RelPrePoissonAlgebra& pp) {
  PipelineResult res;
  res.input = pp;
  const std::size_t n = pp.dim();
  auto record = [&](std::string name, std::string detail) { res.stages.push_back({std::move(name), std::move(detail)}); };

  require(check_rel_pre_poisson(pp), "input");
  record("input", "relative pre-Poisson algebra of dimension " + std::to_string(n));

  auto [sub, rep] = subadjacent(pp);
  require(check_rel_poisson(sub), "subadjacent");
  require(check_representation(rep), "subadjacent");
  const Matrix id = Matrix::identity(n);
  require(check_weak_o_operator(rep, id), "subadjacent");
  res.subadjacent = sub;
  record("subadjacent", "sub-adjacent algebra verified, identity is an O-operator");

  OOperatorData lifted = lift_o_operator(rep, id);
  const RelPoissonAlgebra& ext = lifted.rep.algebra;
  require(check_jacobi_algebra(ext.dot, ext.bracket), "extend-jacobi");
  require(check_jacobi_representation(ext.dot, ext.bracket, lifted.rep.mu, lifted.rep.rho), "extend-jacobi");
  res.extended = ext;
  record("extend-jacobi", "extended algebra of dimension " + std::to_string(ext.dim()) + " is Jacobi");
  record("lift-o-operator", "inclusion is an O-operator of the extended representation");

  const Matrix beta = Scalar(-1) * pp.P;
  const Matrix Q = Scalar(-1) * ext.P;
  RMatrixConstruction rc = o_operator_to_rmatrix(lifted.rep, beta, Q, lifted.T);
  rc.algebra = rc.algebra.relabel(pipeline_labels(rc.algebra.dim() - 1));
  require(check_rpybe(rc.algebra, rc.Q, rc.r), "rpybe");
  record("rpybe", "r is an antisymmetric solution in dimension " + std::to_string(rc.algebra.dim()));

  BialgebraData bia = coboundary_bialgebra(rc.algebra, rc.Q, rc.r);
  require(check_bialgebra(bia), "bialgebra");
  record("bialgebra", "coboundary relative Poisson bialgebra verified");

  const auto unit = find_unit(rc.algebra.dot);
  if (!unit) throw PreconditionError("unit", "the Jacobi algebra has no unit");
  if (!bia.Delta.of(*unit).is_zero()) throw PreconditionError("unit", "Delta(1) is not zero");
  require(check_jacobi_algebra(rc.algebra.dot, rc.algebra.bracket), "unit");
  record("unit", "Delta(1) = 0");

  MatchedPairData mp = bialgebra_to_matched_pair(bia, false);
  require(check_matched_pair(mp), "matched-pair");
  record("matched-pair", "induced matched pair verified");

  RelPoissonAlgebra dbl = bowtie(mp, false);
  require(check_manin_triple(mp.A1, mp.A2, dbl), "manin-triple");
  record("manin-triple", "double of dimension " + std::to_string(dbl.dim()) + " with B_d");

  FrobeniusJacobiAlgebra fj{std::move(dbl), BilinForm(Space(), Matrix())};
  fj.form = BilinForm(fj.algebra.space, canonical_pairing_form(mp.A1.space).gram);
  require(check_frobenius_jacobi(fj), "frobenius");
  record("frobenius", "Frobenius Jacobi algebra verified");

  res.rmatrix = std::move(rc);
  res.bialgebra = std::move(bia);
  res.matched_pair = std::move(mp);
  res.frobenius = std::move(fj);
  return res;
}

}  // namespace rpa
