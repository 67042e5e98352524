#include "rpa/yang_baxter.hpp"

#include <stdexcept>

namespace rpa {

namespace {

// The three contraction patterns r12*r13, r12*r23, r13*r23 with signs s.
Array3 yb_terms(const Matrix& R, const BilinearOp& op, int s12_13, int s12_23, int s13_23) {
  const std::size_t n = op.dim();
  if (R.rows() != n || R.cols() != n) throw std::invalid_argument("r does not match the algebra");
  Array3 out(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      if (is_zero(R(p, q))) continue;
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t s = 0; s < n; ++s) {
          if (is_zero(R(u, s))) continue;
          const Scalar w = R(p, q) * R(u, s);
          for (std::size_t k = 0; k < n; ++k) {
            if (!is_zero(op(p, u, k))) out(k, q, s) += s12_13 * w * op(p, u, k);
            if (!is_zero(op(q, u, k))) out(p, k, s) += s12_23 * w * op(q, u, k);
            if (!is_zero(op(q, s, k))) out(p, u, k) += s13_23 * w * op(q, s, k);
          }
        }
    }
  return out;
}

void check_square(const RelPoissonAlgebra& a, const Matrix& m, const char* what) {
  if (m.rows() != a.dim() || m.cols() != a.dim()) throw std::invalid_argument(std::string(what) + " has the wrong shape");
}

}  // namespace

Array3 aybe_tensor(const Matrix& r, const BilinearOp& dot) { return yb_terms(r, dot, 1, -1, 1); }

Array3 cybe_tensor(const Matrix& r, const BilinearOp& bracket) { return yb_terms(r, bracket, 1, 1, 1); }

bool is_antisymmetric(const Matrix& r) { return (r + r.transpose()).is_zero(); }

AxiomReport check_rpybe(const RelPoissonAlgebra& a, const Matrix& Q, const Matrix& r) {
  check_square(a, Q, "Q");
  check_square(a, r, "r");
  AxiomReport out;
  out.expect_zero("AYBE", {}, aybe_tensor(r, a.dot));
  out.expect_zero("CYBE", {}, cybe_tensor(r, a.bracket));
  out.expect_zero("PYBE1", {}, a.P * r - r * Q.transpose());
  out.expect_zero("PYBE2", {}, Q * r - r * a.P.transpose());
  return out;
}

AxiomReport check_rpybe_via_maps(const RelPoissonAlgebra& a, const Matrix& Q, const Matrix& r) {
  check_square(a, Q, "Q");
  check_square(a, r, "r");
  if (!is_antisymmetric(r)) throw std::invalid_argument("check_rpybe_via_maps: r is not antisymmetric");
  const std::size_t n = a.dim();
  const Matrix m = r.transpose();
  AxiomReport out;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec ra = m.column(i);
    const Vec ea = basis_vec(n, i);
    const Matrix ad_ra = a.bracket.left(ra).transpose();
    const Matrix l_ra = a.dot.left(ra).transpose();
    for (std::size_t j = 0; j < n; ++j) {
      const Vec rb = m.column(j);
      const Vec eb = basis_vec(n, j);
      const Matrix ad_rb = a.bracket.left(rb).transpose();
      const Matrix l_rb = a.dot.left(rb).transpose();
      // ad*(x) = -ad(x)^T and L*(x) = -L(x)^T on A*.
      out.expect_zero("Q-PYBE1", {i, j}, a.bracket.apply(ra, rb) - m * (ad_rb * ea - ad_ra * eb));
      out.expect_zero("Q-PYBE2", {i, j}, a.dot.apply(ra, rb) - m * (l_ra * eb + l_rb * ea));
    }
  }
  out.expect_zero("Q-PYBE3", {}, a.P * m - m * Q.transpose());
  return out;
}

std::pair<Comultiplication, Comultiplication> coboundary_comults(const RelPoissonAlgebra& a, const Matrix& r) {
  check_square(a, r, "r");
  const std::size_t n = a.dim();
  Comultiplication D(a.space), d(a.space);
  for (std::size_t k = 0; k < n; ++k) {
    const Matrix L = a.dot.left(k);
    const Matrix ad = a.bracket.left(k);
    const Matrix dk = r * L.transpose() - L * r;
    const Matrix lk = ad * r + r * ad.transpose();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        D.d(i, j, k) = dk(i, j);
        d.d(i, j, k) = lk(i, j);
      }
  }
  return {std::move(D), std::move(d)};
}

BialgebraData coboundary_bialgebra(const RelPoissonAlgebra& a, const Matrix& Q, const Matrix& r) {
  auto [D, d] = coboundary_comults(a, r);
  return BialgebraData{a, std::move(D), std::move(d), Q};
}

AxiomReport check_coboundary_conditions(const RelPoissonAlgebra& a, const Matrix& Q, const Matrix& r) {
  check_square(a, Q, "Q");
  check_square(a, r, "r");
  require(check_dually_represents(a, Q), "coboundary-conditions");
  const std::size_t n = a.dim();
  const Matrix& P = a.P;
  const Matrix S = r + r.transpose();
  const Matrix s = r * P.transpose() - Q * r;  // (id (x) P - Q (x) id) r
  const Matrix m = r * Q.transpose() - P * r;  // (id (x) Q - P (x) id) r
  const Array3 Ar = aybe_tensor(r, a.dot);
  const Array3 Cr = cybe_tensor(r, a.bracket);
  const Matrix PQ = P + Q;
  const auto L = a.dot.left_all();
  const auto ad = a.bracket.left_all();

  AxiomReport out;
  for (std::size_t x = 0; x < n; ++x) {
    const Matrix& Lx = L[x];
    const Matrix& adx = ad[x];
    out.expect_zero("AYBE1", {x}, S * Lx.transpose() - Lx * S);
    out.expect_zero("AYBE2", {x}, apply_on(Lx, 2, Ar) - apply_on(Lx, 0, Ar));
    out.expect_zero("CYBE1", {x}, adx * S + S * adx.transpose());
    out.expect_zero("CYBE2", {x}, apply_on(adx, 0, Cr) + apply_on(adx, 1, Cr) + apply_on(adx, 2, Cr));
    out.expect_zero("tr1", {x}, s * Lx.transpose() + Lx * m);
    out.expect_zero("tr2", {x}, s * adx.transpose() - adx * m);

    Array3 tr3 = apply_on(adx, 0, Ar);
    tr3 += apply_on(Q, 0, apply_on(Lx, 2, Ar));
    tr3 += apply_on(Lx, 2, Cr);
    tr3 -= apply_on(Lx, 1, Cr);
    const Matrix Sx = Lx * S - S * Lx.transpose();
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        const Scalar& w = r(p, q);
        if (is_zero(w)) continue;
        const Matrix t3 = ad[p] * Sx;
        const Matrix t4 = (-s) * a.dot.left(a.dot.product(x, p)).transpose();
        const Matrix t5 = s * a.dot.left(a.dot.product(x, q)).transpose();
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            tr3(i, j, q) += w * (t3(i, j) + t4(i, j));
            tr3(i, p, j) += w * t5(i, j);
          }
      }
    out.expect_zero("tr3", {x}, tr3);

    out.expect_zero("tr4", {x}, m * Lx.transpose() - Lx * m);
    out.expect_zero("tr5", {x}, adx * m + m * adx.transpose());
    out.expect_zero("tr6", {x}, apply_on(a.dot.left(PQ.column(x)), 2, Ar));
    for (std::size_t y = 0; y < n; ++y) out.expect_zero("tr7", {x, y}, a.dot.left(a.dot.product(x, y)) * m);
  }
  return out;
}

AxiomReport check_weak_o_operator(const RepData& rep, const Matrix& T) {
  const auto& A = rep.algebra;
  const std::size_t n = A.dim(), m = rep.module_dim();
  if (T.rows() != n || T.cols() != m) throw std::invalid_argument("T must map V to A");
  AxiomReport out;
  for (std::size_t u = 0; u < m; ++u) {
    const Vec tu = T.column(u);
    const Vec eu = basis_vec(m, u);
    for (std::size_t v = 0; v < m; ++v) {
      const Vec tv = T.column(v);
      const Vec ev = basis_vec(m, v);
      out.expect_zero("O1", {u, v}, A.dot.apply(tu, tv) - T * (rep.mu_of(tu) * ev + rep.mu_of(tv) * eu));
      out.expect_zero("O2", {u, v}, A.bracket.apply(tu, tv) - T * (rep.rho_of(tu) * ev - rep.rho_of(tv) * eu));
    }
  }
  out.expect_zero("O3", {}, A.P * T - T * rep.alpha);
  return out;
}

AxiomReport check_o_operator(const RepData& rep, const Matrix& T) {
  AxiomReport out = check_weak_o_operator(rep, T);
  out.merge(check_representation(rep), "representation");
  return out;
}

RMatrixConstruction o_operator_to_rmatrix(const RepData& rep, const Matrix& beta, const Matrix& Q, const Matrix& T) {
  const std::size_t n = rep.algebra.dim(), m = rep.module_dim();
  if (beta.rows() != m || beta.cols() != m) throw std::invalid_argument("beta has the wrong shape");
  check_square(rep.algebra, Q, "Q");
  require(check_compatible_structure(rep), "compatible-structure");
  require(check_dualrep_conditions(rep, beta), "beta-dually-represents");
  require(check_o_operator(rep, T), "o-operator");
  if (!(T * beta == Q * T)) throw PreconditionError("t-beta-equals-q-t", "T beta differs from Q T");
  require(check_dually_represents(rep.algebra, Q), "q-dually-represents");

  RelPoissonAlgebra sd = semidirect_product(dual_rep(rep, beta), true);
  Matrix r(n + m, n + m);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < m; ++i) {
      r(a, n + i) = T(a, i);
      r(n + i, a) = -T(a, i);
    }
  return RMatrixConstruction{std::move(sd), std::move(r), block_diag(Q, rep.alpha.transpose())};
}

AxiomReport check_semidirect_dual_conditions(const RepData& rep, const Matrix& Q, const Matrix& beta) {
  AxiomReport out;
  out.merge(check_representation(rep), "(a)");
  out.merge(check_dualrep_conditions(rep, beta), "(b)");
  out.merge(check_dually_represents(rep.algebra, Q), "(c)");
  AxiomReport d;
  for (std::size_t x = 0; x < rep.algebra.dim(); ++x) {
    const Vec qx = Q.column(x);
    const Matrix c1 = rep.mu_of(qx) - rep.mu[x] * rep.alpha - beta * rep.mu[x];
    const Matrix c2 = rep.rho_of(qx) - rep.rho[x] * rep.alpha - beta * rep.rho[x];
    d.expect_zero("cond1", {x}, c1);
    d.expect_zero("cond2", {x}, c2);
  }
  out.merge(d, "(d)");
  return out;
}

}  // namespace rpa
