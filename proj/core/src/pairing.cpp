#include "rpa/pairing.hpp"

#include <stdexcept>
#include <utility>

namespace rpa {

BilinForm::BilinForm(Space s, Matrix g) : space(std::move(s)), gram(std::move(g)) {
  if (gram.rows() != space.dim() || gram.cols() != space.dim()) {
    throw std::invalid_argument("gram matrix does not match the space");
  }
}

Scalar BilinForm::operator()(const Vec& x, const Vec& y) const {
  const Vec gy = gram * y;
  Scalar s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * gy[i];
  return s;
}

AxiomReport check_invariant_form(const RelPoissonAlgebra& a, const BilinForm& b) {
  if (!(a.space == b.space)) throw std::invalid_argument("form and algebra live on different spaces");
  AxiomReport out;
  const std::size_t n = a.dim();
  for (std::size_t x = 0; x < n; ++x) {
    const Vec ex = basis_vec(n, x);
    for (std::size_t y = 0; y < n; ++y) {
      const Vec xy = a.dot.product(x, y);
      const Vec bxy = a.bracket.product(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        const Vec ez = basis_vec(n, z);
        const Scalar d1 = b(xy, ez) - b(ex, a.dot.product(y, z));
        const Scalar d2 = b(bxy, ez) - b(ex, a.bracket.product(y, z));
        out.expect_zero("invariance-dot", {x, y, z}, Vec{d1});
        out.expect_zero("invariance-bracket", {x, y, z}, Vec{d2});
      }
    }
  }
  return out;
}

bool is_nondegenerate(const BilinForm& b) { return !is_zero(determinant(b.gram)); }

bool is_symmetric(const BilinForm& b) { return b.gram == b.gram.transpose(); }

Matrix adjoint_of(const Matrix& P, const BilinForm& b) {
  const auto ginv = inverse(b.gram);
  if (!ginv) throw std::invalid_argument("adjoint_of: degenerate form");
  return *ginv * P.transpose() * b.gram;
}

BilinForm canonical_pairing_form(const Space& a) {
  const std::size_t n = a.dim();
  Matrix g(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, n + i) = 1;
    g(n + i, i) = 1;
  }
  return BilinForm(direct_sum(a, a.dual()), std::move(g));
}

namespace {

void validate(const MatchedPairData& d) {
  const std::size_t n = d.A1.dim(), m = d.A2.dim();
  auto shape_ok = [](const std::vector<Matrix>& ops, std::size_t count, std::size_t size) {
    if (ops.size() != count) return false;
    for (const auto& o : ops)
      if (o.rows() != size || o.cols() != size) return false;
    return true;
  };
  if (!shape_ok(d.mu1, n, m) || !shape_ok(d.rho1, n, m) || !shape_ok(d.mu2, m, n) || !shape_ok(d.rho2, m, n)) {
    throw std::invalid_argument("matched pair actions have the wrong shape");
  }
}

}  // namespace

AxiomReport check_matched_pair(const MatchedPairData& d) {
  validate(d);
  const auto& A1 = d.A1;
  const auto& A2 = d.A2;
  const std::size_t n = A1.dim(), m = A2.dim();
  AxiomReport out;
  out.merge(check_rel_poisson(A1), "A1");
  out.merge(check_rel_poisson(A2), "A2");
  out.merge(check_representation(RepData(A1, A2.space, d.mu1, d.rho1, A2.P)), "A1-on-A2");
  out.merge(check_representation(RepData(A2, A1.space, d.mu2, d.rho2, A1.P)), "A2-on-A1");

  auto mu1 = [&](const Vec& x) { return act(d.mu1, x, m); };
  auto rho1 = [&](const Vec& x) { return act(d.rho1, x, m); };
  auto mu2 = [&](const Vec& a) { return act(d.mu2, a, n); };
  auto rho2 = [&](const Vec& a) { return act(d.rho2, a, n); };
  auto dot1 = [&](const Vec& x, const Vec& y) { return A1.dot.apply(x, y); };
  auto dot2 = [&](const Vec& a, const Vec& b) { return A2.dot.apply(a, b); };
  auto br1 = [&](const Vec& x, const Vec& y) { return A1.bracket.apply(x, y); };
  auto br2 = [&](const Vec& a, const Vec& b) { return A2.bracket.apply(a, b); };

  // Conditions with one A1 element and two A2 elements.
  for (std::size_t i = 0; i < n; ++i) {
    const Vec x = basis_vec(n, i);
    const Matrix m1x = d.mu1[i], r1x = d.rho1[i];
    const Vec px = A1.P.column(i);
    for (std::size_t p = 0; p < m; ++p) {
      const Vec a = basis_vec(m, p);
      for (std::size_t q = 0; q < m; ++q) {
        const Vec b = basis_vec(m, q);
        const Vec ab = A2.dot.product(p, q);
        const Vec lab = A2.bracket.product(p, q);

        Vec asso = m1x * ab - dot2(m1x * a, b) - mu1(mu2(a) * x) * b;
        out.expect_zero("mp-assoc1", {i, p, q}, asso);

        Vec lie = r1x * lab - br2(r1x * a, b) - br2(a, r1x * b) + rho1(rho2(a) * x) * b - rho1(rho2(b) * x) * a;
        out.expect_zero("mp-lie1", {i, p, q}, lie);

        Vec mp2 = r1x * ab + mu1(rho2(b) * x) * a - dot2(a, r1x * b) + mu1(rho2(a) * x) * b - dot2(b, r1x * a) -
                  mu1(px) * ab;
        out.expect_zero("MP2", {p, q, i}, mp2);

        Vec mp4 = rho1(mu2(a) * x) * b + br2(m1x * a, b) - dot2(a, r1x * b) + mu1(rho2(b) * x) * a - m1x * lab +
                  m1x * dot2(a, A2.P.column(q));
        out.expect_zero("MP4", {p, q, i}, mp4);
      }
    }
  }

  // Conditions with two A1 elements and one A2 element.
  for (std::size_t p = 0; p < m; ++p) {
    const Vec a = basis_vec(m, p);
    const Matrix m2a = d.mu2[p], r2a = d.rho2[p];
    const Vec pa = A2.P.column(p);
    for (std::size_t i = 0; i < n; ++i) {
      const Vec x = basis_vec(n, i);
      for (std::size_t j = 0; j < n; ++j) {
        const Vec y = basis_vec(n, j);
        const Vec xy = A1.dot.product(i, j);
        const Vec lxy = A1.bracket.product(i, j);

        Vec asso = m2a * xy - dot1(m2a * x, y) - mu2(mu1(x) * a) * y;
        out.expect_zero("mp-assoc2", {p, i, j}, asso);

        Vec lie = r2a * lxy - br1(r2a * x, y) - br1(x, r2a * y) + rho2(rho1(x) * a) * y - rho2(rho1(y) * a) * x;
        out.expect_zero("mp-lie2", {p, i, j}, lie);

        Vec mp1 = r2a * xy + mu2(rho1(y) * a) * x - dot1(x, r2a * y) + mu2(rho1(x) * a) * y - dot1(y, r2a * x) -
                  mu2(pa) * xy;
        out.expect_zero("MP1", {i, j, p}, mp1);

        Vec mp3 = rho2(mu1(x) * a) * y + br1(m2a * x, y) - dot1(x, r2a * y) + mu2(rho1(y) * a) * x - m2a * lxy +
                  m2a * dot1(x, A1.P.column(j));
        out.expect_zero("MP3", {i, j, p}, mp3);
      }
    }
  }
  return out;
}

RelPoissonAlgebra bowtie(const MatchedPairData& d, bool verify) {
  validate(d);
  if (verify) require(check_matched_pair(d), "bowtie");
  const auto& A1 = d.A1;
  const auto& A2 = d.A2;
  const std::size_t n = A1.dim(), m = A2.dim();
  const Space s = direct_sum(A1.space, A2.space);
  BilinearOp dot(s), br(s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        dot.set(i, j, k, A1.dot(i, j, k));
        br.set(i, j, k, A1.bracket(i, j, k));
      }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        dot.set(n + a, n + b, n + c, A2.dot(a, b, c));
        br.set(n + a, n + b, n + c, A2.bracket(a, b, c));
      }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t b = 0; b < m; ++b) {
      // e_i . f_b = mu2(f_b) e_i + mu1(e_i) f_b
      // [e_i, f_b] = -rho2(f_b) e_i + rho1(e_i) f_b
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& u = d.mu2[b](k, i);
        const Scalar& r = d.rho2[b](k, i);
        dot.set(i, n + b, k, u);
        dot.set(n + b, i, k, u);
        br.set(i, n + b, k, -r);
        br.set(n + b, i, k, r);
      }
      for (std::size_t c = 0; c < m; ++c) {
        const Scalar& u = d.mu1[i](c, b);
        const Scalar& r = d.rho1[i](c, b);
        dot.set(i, n + b, n + c, u);
        dot.set(n + b, i, n + c, u);
        br.set(i, n + b, n + c, r);
        br.set(n + b, i, n + c, -r);
      }
    }
  }
  return RelPoissonAlgebra(std::move(dot), std::move(br), block_diag(A1.P, A2.P));
}

AxiomReport check_manin_triple(const RelPoissonAlgebra& a, const RelPoissonAlgebra& astar,
                               const RelPoissonAlgebra& dbl) {
  const std::size_t n = a.dim();
  if (astar.dim() != n || dbl.dim() != 2 * n) throw std::invalid_argument("manin triple: dimension mismatch");
  AxiomReport out;
  out.merge(check_rel_poisson(dbl), "double");

  // Both halves closed under the products and reproducing the given algebras.
  auto closure = [&](const BilinearOp& big, const BilinearOp& small, std::size_t off, std::string_view name) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Vec d(2 * n);
        for (std::size_t k = 0; k < 2 * n; ++k) {
          const bool inside = k >= off && k < off + n;
          d[k] = big(off + i, off + j, k) - (inside ? small(i, j, k - off) : Scalar(0));
        }
        out.expect_zero(name, {i, j}, d);
      }
    }
  };
  closure(dbl.dot, a.dot, 0, "subalgebra A dot");
  closure(dbl.bracket, a.bracket, 0, "subalgebra A bracket");
  closure(dbl.dot, astar.dot, n, "subalgebra A* dot");
  closure(dbl.bracket, astar.bracket, n, "subalgebra A* bracket");
  out.expect_zero("derivation P + Q*", {}, dbl.P - block_diag(a.P, astar.P));

  const BilinForm bd(dbl.space, canonical_pairing_form(a.space).gram);
  out.merge(check_invariant_form(dbl, bd), "B_d");
  if (!is_nondegenerate(bd)) out.expect_zero("B_d nondegenerate", {}, Vec{Scalar(1)});
  return out;
}

MatchedPairData induced_matched_pair(const RelPoissonAlgebra& a, const RelPoissonAlgebra& astar) {
  if (a.dim() != astar.dim()) throw std::invalid_argument("induced matched pair: dimension mismatch");
  MatchedPairData d{a, astar, {}, {}, {}, {}};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    d.mu1.push_back(a.dot.left(i).transpose());
    d.rho1.push_back(-a.bracket.left(i).transpose());
    d.mu2.push_back(astar.dot.left(i).transpose());
    d.rho2.push_back(-astar.bracket.left(i).transpose());
  }
  return d;
}

}  // namespace rpa
