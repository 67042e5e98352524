#include "rpa/representation.hpp"

#include <stdexcept>
#include <utility>

namespace rpa {

namespace {

// Records every nonzero column of m as a violation at (indices..., v).
void expect_columns(AxiomReport& rep, std::string_view axiom, std::vector<std::size_t> idx, const Matrix& m) {
  if (m.is_zero()) return;
  for (std::size_t v = 0; v < m.cols(); ++v) {
    auto full = idx;
    full.push_back(v);
    rep.expect_zero(axiom, std::move(full), m.column(v));
  }
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace

RepData::RepData(RelPoissonAlgebra a, Space v, std::vector<Matrix> mu_, std::vector<Matrix> rho_, Matrix alpha_)
    : algebra(std::move(a)), module(std::move(v)), mu(std::move(mu_)), rho(std::move(rho_)), alpha(std::move(alpha_)) {
  const std::size_t n = algebra.dim(), m = module.dim();
  if (mu.size() != n || rho.size() != n) throw std::invalid_argument("one action matrix per algebra basis vector expected");
  for (std::size_t i = 0; i < n; ++i) {
    if (mu[i].rows() != m || mu[i].cols() != m || rho[i].rows() != m || rho[i].cols() != m) {
      throw std::invalid_argument("action matrix has the wrong shape");
    }
  }
  if (alpha.rows() != m || alpha.cols() != m) throw std::invalid_argument("alpha has the wrong shape");
}

Matrix act(const std::vector<Matrix>& ops, const Vec& x, std::size_t module_dim) {
  Matrix r(module_dim, module_dim);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!is_zero(x[i])) r += x[i] * ops[i];
  }
  return r;
}

Matrix RepData::mu_of(const Vec& x) const { return act(mu, x, module_dim()); }
Matrix RepData::rho_of(const Vec& x) const { return act(rho, x, module_dim()); }

AxiomReport check_compatible_structure(const RepData& rep) {
  AxiomReport out;
  const auto& A = rep.algebra;
  const std::size_t n = A.dim();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      expect_columns(out, "mu-hom", {x, y}, rep.mu_of(A.dot.product(x, y)) - rep.mu[x] * rep.mu[y]);
      expect_columns(out, "rho-hom", {x, y}, rep.rho_of(A.bracket.product(x, y)) - commutator(rep.rho[x], rep.rho[y]));
      const Matrix comp = rep.rho[y] * rep.mu[x] - rep.mu[x] * rep.rho[y] + rep.mu_of(A.bracket.product(x, y)) -
                          rep.mu_of(A.dot.apply(basis_vec(n, x), A.P.column(y)));
      expect_columns(out, "compatibility", {x, y}, comp);
    }
  }
  return out;
}

AxiomReport check_representation(const RepData& rep) {
  AxiomReport out = check_compatible_structure(rep);
  const auto& A = rep.algebra;
  const std::size_t n = A.dim();
  const Matrix& al = rep.alpha;
  for (std::size_t x = 0; x < n; ++x) {
    const Vec px = A.P.column(x);
    expect_columns(out, "rep1", {x}, al * rep.mu[x] - rep.mu_of(px) - rep.mu[x] * al);
    expect_columns(out, "rep2", {x}, al * rep.rho[x] - rep.rho_of(px) - rep.rho[x] * al);
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Vec xy = A.dot.product(x, y);
      const Matrix d =
          rep.rho_of(xy) - rep.mu[x] * rep.rho[y] - rep.mu[y] * rep.rho[x] + rep.mu_of(xy) * al;
      expect_columns(out, "rep3", {x, y}, d);
    }
  }
  return out;
}

RepData adjoint_rep(const RelPoissonAlgebra& a) {
  return RepData(a, a.space, a.dot.left_all(), a.bracket.left_all(), a.P);
}

RepData dual_rep(const RepData& rep, const Matrix& beta) {
  std::vector<Matrix> mu, rho;
  for (const auto& m : rep.mu) mu.push_back(m.transpose());
  for (const auto& r : rep.rho) rho.push_back(-r.transpose());
  return RepData(rep.algebra, rep.module.dual(), std::move(mu), std::move(rho), beta.transpose());
}

AxiomReport check_dualrep_conditions(const RepData& rep, const Matrix& beta) {
  AxiomReport out;
  const auto& A = rep.algebra;
  const std::size_t n = A.dim();
  for (std::size_t x = 0; x < n; ++x) {
    const Vec px = A.P.column(x);
    expect_columns(out, "dualrep1", {x}, rep.mu[x] * beta - rep.mu_of(px) - beta * rep.mu[x]);
    expect_columns(out, "dualrep2", {x}, rep.rho[x] * beta - rep.rho_of(px) - beta * rep.rho[x]);
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Vec xy = A.dot.product(x, y);
      const Matrix d = -rep.rho_of(xy) + rep.rho[y] * rep.mu[x] + rep.rho[x] * rep.mu[y] + beta * rep.mu_of(xy);
      expect_columns(out, "dualrep3", {x, y}, d);
    }
  }
  return out;
}

AxiomReport check_alpha_beta_conditions(const RepData& rep, const Matrix& beta) {
  AxiomReport out;
  const auto& A = rep.algebra;
  const std::size_t n = A.dim();
  const Matrix s = rep.alpha + beta;
  for (std::size_t x = 0; x < n; ++x) {
    expect_columns(out, "alpha-beta1", {x}, s * rep.mu[x] - rep.mu[x] * s);
    expect_columns(out, "alpha-beta2", {x}, s * rep.rho[x] - rep.rho[x] * s);
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Matrix m = rep.mu_of(A.dot.product(x, y));
      expect_columns(out, "eqdualrep1", {x, y}, s * m);
      expect_columns(out, "eqdualrep2", {x, y}, m * s);
    }
  }
  return out;
}

namespace {

void dualadj_pairs(AxiomReport& out, const RelPoissonAlgebra& a, const Matrix& Q) {
  const std::size_t n = a.dim();
  for (std::size_t x = 0; x < n; ++x) {
    const Vec ex = basis_vec(n, x);
    const Vec px = a.P.column(x);
    for (std::size_t y = 0; y < n; ++y) {
      const Vec qy = Q.column(y);
      Vec d1 = a.dot.apply(ex, qy) - a.dot.apply_left(px, y) - Q * a.dot.product(x, y);
      out.expect_zero("dualadj1", {x, y}, d1);
      Vec d2 = a.bracket.apply(ex, qy) - a.bracket.apply_left(px, y) - Q * a.bracket.product(x, y);
      out.expect_zero("dualadj2", {x, y}, d2);
    }
  }
}

}  // namespace

AxiomReport check_dually_represents(const RelPoissonAlgebra& a, const Matrix& Q) {
  AxiomReport out;
  dualadj_pairs(out, a, Q);
  const std::size_t n = a.dim();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Vec xy = a.dot.product(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        Vec d = a.bracket.apply(basis_vec(n, x), a.dot.product(y, z));
        d += a.bracket.apply(basis_vec(n, y), a.dot.product(z, x));
        d += a.bracket.apply(basis_vec(n, z), xy);
        d += Q * a.dot.apply_left(xy, z);
        out.expect_zero("dualadj3", {x, y, z}, d);
      }
    }
  }
  return out;
}

AxiomReport check_dually_represents_product_form(const RelPoissonAlgebra& a, const Matrix& Q) {
  AxiomReport out;
  dualadj_pairs(out, a, Q);
  const std::size_t n = a.dim();
  const Matrix s = a.P + Q;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Vec xy = a.dot.product(x, y);
      for (std::size_t z = 0; z < n; ++z) out.expect_zero("eqdualadj1", {x, y, z}, s * a.dot.apply_left(xy, z));
    }
  }
  return out;
}

RelPoissonAlgebra semidirect_product(const RepData& rep, bool verify) {
  if (verify) require(check_representation(rep), "semidirect");
  const auto& A = rep.algebra;
  const std::size_t n = A.dim(), m = rep.module_dim();
  const Space s = direct_sum(A.space, rep.module);
  BilinearOp dot(s), br(s);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        dot.set(i, j, k, A.dot(i, j, k));
        br.set(i, j, k, A.bracket(i, j, k));
      }
    }
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t c = 0; c < m; ++c) {
        // x.v = mu(x)v = v.x ; [x,v] = rho(x)v = -[v,x]
        dot.set(i, n + b, n + c, rep.mu[i](c, b));
        dot.set(n + b, i, n + c, rep.mu[i](c, b));
        br.set(i, n + b, n + c, rep.rho[i](c, b));
        br.set(n + b, i, n + c, -rep.rho[i](c, b));
      }
    }
  }
  return RelPoissonAlgebra(std::move(dot), std::move(br), block_diag(A.P, rep.alpha));
}

bool check_rep_equivalence(const RepData& rep1, const RepData& rep2, const Matrix& phi) {
  if (phi.rows() != rep2.module_dim() || phi.cols() != rep1.module_dim()) return false;
  if (!phi.is_square() || is_zero(determinant(phi))) return false;
  if (rep1.mu.size() != rep2.mu.size()) return false;
  for (std::size_t i = 0; i < rep1.mu.size(); ++i) {
    if (!(phi * rep1.mu[i] == rep2.mu[i] * phi)) return false;
    if (!(phi * rep1.rho[i] == rep2.rho[i] * phi)) return false;
  }
  return phi * rep1.alpha == rep2.alpha * phi;
}

AxiomReport check_jacobi_representation(const BilinearOp& dot, const BilinearOp& bracket,
                                        const std::vector<Matrix>& mu, const std::vector<Matrix>& rho) {
  const auto unit = find_unit(dot);
  if (!unit) throw PreconditionError("jacobi-representation", "no unit");
  const std::size_t n = dot.dim();
  const std::size_t m = mu.empty() ? 0 : mu.front().rows();
  AxiomReport out;
  const Matrix mu1 = act(mu, *unit, m);
  const Matrix rho1 = act(rho, *unit, m);
  expect_columns(out, "unital", {}, mu1 - Matrix::identity(m));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Vec xy = dot.product(x, y);
      expect_columns(out, "mu-hom", {x, y}, act(mu, xy, m) - mu[x] * mu[y]);
      expect_columns(out, "rho-hom", {x, y}, act(rho, bracket.product(x, y), m) - commutator(rho[x], rho[y]));
      expect_columns(out, "jacobi-rep2", {x, y},
                     act(rho, xy, m) - mu[x] * rho[y] - mu[y] * rho[x] + act(mu, xy, m) * rho1);
      const Vec one_y = bracket.apply_left(*unit, y);
      expect_columns(out, "jacobi-rep3", {x, y},
                     rho[y] * mu[x] - mu[x] * rho[y] + act(mu, bracket.product(x, y), m) -
                         act(mu, dot.apply(basis_vec(n, x), one_y), m));
    }
  }
  return out;
}

AxiomReport check_jacobi_dual_identity(const BilinearOp& dot, const std::vector<Matrix>& mu,
                                       const std::vector<Matrix>& rho) {
  const auto unit = find_unit(dot);
  if (!unit) throw PreconditionError("jacobi-representation", "no unit");
  const std::size_t n = dot.dim();
  const std::size_t m = mu.empty() ? 0 : mu.front().rows();
  const Matrix rho1 = act(rho, *unit, m);
  AxiomReport out;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Vec xy = dot.product(x, y);
      expect_columns(out, "jacobi-dual", {x, y},
                     -act(rho, xy, m) + rho[y] * mu[x] + rho[x] * mu[y] - rho1 * act(mu, xy, m));
    }
  }
  return out;
}

}  // namespace rpa
