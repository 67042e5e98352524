#include "rpa/bialgebra.hpp"

#include <stdexcept>
#include <utility>

namespace rpa {

Comultiplication::Comultiplication(Space s) : space(std::move(s)), d(space.dim()) {}

Comultiplication::Comultiplication(Space s, Array3 coeffs) : space(std::move(s)), d(std::move(coeffs)) {
  const std::size_t n = space.dim();
  if (d.dim1() != n || d.dim2() != n || d.dim3() != n) {
    throw std::invalid_argument("comultiplication coefficients do not match the space");
  }
}

Matrix Comultiplication::of(const Vec& x) const {
  const std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (is_zero(x[k])) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) += x[k] * d(i, j, k);
  }
  return m;
}

Matrix Comultiplication::of(std::size_t k) const { return of(basis_vec(dim(), k)); }

Array3 id_tensor(const Comultiplication& D, const Matrix& t) {
  const std::size_t n = D.dim();
  Array3 out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (is_zero(t(a, b))) continue;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(a, i, j) += t(a, b) * D.d(i, j, b);
    }
  return out;
}

Array3 tensor_id(const Comultiplication& D, const Matrix& t) {
  const std::size_t n = D.dim();
  Array3 out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (is_zero(t(a, b))) continue;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j, b) += t(a, b) * D.d(i, j, a);
    }
  return out;
}

AxiomReport check_cocomm_coassoc(const Comultiplication& D) {
  AxiomReport out;
  for (std::size_t k = 0; k < D.dim(); ++k) {
    const Matrix m = D.of(k);
    out.expect_zero("cocommutativity", {k}, m - m.transpose());
    out.expect_zero("coassociativity", {k}, id_tensor(D, m) - tensor_id(D, m));
  }
  return out;
}

AxiomReport check_lie_coalgebra(const Comultiplication& d) {
  AxiomReport out;
  for (std::size_t k = 0; k < d.dim(); ++k) {
    const Matrix m = d.of(k);
    out.expect_zero("coantisymmetry", {k}, m + m.transpose());
    const Array3 t = id_tensor(d, m);
    const Array3 t1 = rotate(t);
    out.expect_zero("co-jacobi", {k}, t + t1 + rotate(t1));
  }
  return out;
}

AxiomReport check_rel_poisson_coalgebra(const Comultiplication& Delta, const Comultiplication& delta,
                                        const Matrix& Q) {
  const std::size_t n = Delta.dim();
  if (delta.dim() != n || Q.rows() != n || Q.cols() != n) throw std::invalid_argument("coalgebra: shape mismatch");
  AxiomReport out;
  out.merge(check_cocomm_coassoc(Delta), "Delta");
  out.merge(check_lie_coalgebra(delta), "delta");
  const Matrix Qt = Q.transpose();
  for (std::size_t k = 0; k < n; ++k) {
    const Matrix D = Delta.of(k);
    const Matrix d = delta.of(k);
    const Vec qk = Q.column(k);
    out.expect_zero("Co1", {k}, Delta.of(qk) - Q * D - D * Qt);
    out.expect_zero("Co2", {k}, delta.of(qk) - Q * d - d * Qt);
    Array3 co3 = id_tensor(Delta, d);
    co3 -= tensor_id(delta, D);
    co3 -= swap12(id_tensor(delta, D));
    co3 -= apply_on(Q, 0, tensor_id(Delta, D));
    out.expect_zero("Co3", {k}, co3);
  }
  return out;
}

BilinearOp comult_to_dual_algebra(const Comultiplication& D) { return BilinearOp(D.space.dual(), D.d); }

Comultiplication dual_algebra_to_comult(const BilinearOp& m) { return Comultiplication(m.space().dual(), m.coeffs()); }

namespace {

void validate(const BialgebraData& b) {
  const std::size_t n = b.algebra.dim();
  if (!(b.Delta.space == b.algebra.space) || !(b.delta.space == b.algebra.space)) {
    throw std::invalid_argument("bialgebra: comultiplications live on another space");
  }
  if (b.Q.rows() != n || b.Q.cols() != n) throw std::invalid_argument("bialgebra: Q has the wrong shape");
}

}  // namespace

AxiomReport check_bialgebra(const BialgebraData& data) {
  validate(data);
  const auto& A = data.algebra;
  const auto& Delta = data.Delta;
  const auto& delta = data.delta;
  const Matrix& P = A.P;
  const Matrix& Q = data.Q;
  const std::size_t n = A.dim();
  const auto L = A.dot.left_all();
  const auto ad = A.bracket.left_all();

  AxiomReport out;
  out.merge(check_rel_poisson(A), "(1)");
  out.merge(check_rel_poisson_coalgebra(Delta, delta, Q), "(2)");

  AxiomReport g3, g4, g5, g6, g7;
  std::vector<Matrix> D, d;
  for (std::size_t k = 0; k < n; ++k) {
    D.push_back(Delta.of(k));
    d.push_back(delta.of(k));
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Vec xy = A.dot.product(x, y);
      const Vec lxy = A.bracket.product(x, y);
      g3.expect_zero("assoc-cocycle", {x, y}, Delta.of(xy) - L[x] * D[y] - D[x] * L[y].transpose());
      g4.expect_zero("lie-cocycle", {x, y},
                     delta.of(lxy) - ad[x] * d[y] - d[y] * ad[x].transpose() + ad[y] * d[x] +
                         d[x] * ad[y].transpose());
      Matrix bi4 = delta.of(xy) - D[x] * ad[y].transpose() - L[x] * d[y] - D[y] * ad[x].transpose() - L[y] * d[x] -
                   Delta.of(xy) * Q.transpose();
      g7.expect_zero("Bi4", {x, y}, bi4);
      Matrix bi5 = Delta.of(lxy) - L[y] * d[x] - D[y] * ad[x].transpose() + d[x] * L[y].transpose() - ad[x] * D[y] +
                   Delta.of(A.dot.apply_left(P.column(x), y));
      g7.expect_zero("Bi5", {x, y}, bi5);
    }
  }

  g5.merge(check_dually_represents(A, Q));
  const Matrix PQ = P + Q;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Vec xy = A.dot.product(x, y);
      for (std::size_t z = 0; z < n; ++z) g5.expect_zero("eqdualadj1", {x, y, z}, PQ * A.dot.apply_left(xy, z));
    }

  for (std::size_t k = 0; k < n; ++k) {
    const Vec pk = P.column(k);
    g6.expect_zero("Bi1", {k}, Delta.of(pk) - P * D[k] + D[k] * Q.transpose());
    g6.expect_zero("Bi2", {k}, delta.of(pk) - P * d[k] + d[k] * Q.transpose());
    g6.expect_zero("Bi3", {k}, tensor_id(Delta, Delta.of(PQ.column(k))));
  }

  out.merge(g3, "(3)");
  out.merge(g4, "(4)");
  out.merge(g5, "(5)");
  out.merge(g6, "(6)");
  out.merge(g7, "(7)");
  return out;
}

RelPoissonAlgebra dual_algebra(const BialgebraData& data) {
  validate(data);
  return RelPoissonAlgebra(comult_to_dual_algebra(data.Delta), comult_to_dual_algebra(data.delta),
                           data.Q.transpose());
}

BialgebraData dualize_bialgebra(const BialgebraData& data, bool verify) {
  if (verify) require(check_bialgebra(data), "dualize");
  RelPoissonAlgebra astar = dual_algebra(data);
  const Space s = astar.space;
  Comultiplication D(s, Scalar(-1) * data.algebra.dot.coeffs());
  Comultiplication d(s, Scalar(-1) * data.algebra.bracket.coeffs());
  return BialgebraData{std::move(astar), std::move(D), std::move(d), data.algebra.P.transpose()};
}

BialgebraData transport_bialgebra(const BialgebraData& data, const Matrix& phi) {
  validate(data);
  const auto psi = inverse(phi);
  if (!psi) throw std::invalid_argument("transport: map is not invertible");
  const std::size_t n = data.algebra.dim();
  const Space& s = data.algebra.space;
  auto move_product = [&](const BilinearOp& m) {
    BilinearOp out(s);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.add(i, j, phi * m.apply(psi->column(i), psi->column(j)));
    return out;
  };
  auto move_comult = [&](const Comultiplication& c) {
    Comultiplication out(s);
    for (std::size_t k = 0; k < n; ++k) {
      const Matrix img = phi * c.of(psi->column(k)) * phi.transpose();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.d(i, j, k) = img(i, j);
    }
    return out;
  };
  RelPoissonAlgebra a(move_product(data.algebra.dot), move_product(data.algebra.bracket),
                      phi * data.algebra.P * *psi);
  return BialgebraData{std::move(a), move_comult(data.Delta), move_comult(data.delta), phi * data.Q * *psi};
}

MatchedPairData bialgebra_to_matched_pair(const BialgebraData& data, bool verify) {
  if (verify) require(check_bialgebra(data), "bialgebra-to-matched-pair");
  return induced_matched_pair(data.algebra, dual_algebra(data));
}

}  // namespace rpa
