#include "rpa/algebra.hpp"

#include <stdexcept>
#include <utility>

namespace rpa {

BilinearOp::BilinearOp(Space space) : space_(std::move(space)), c_(space_.dim()) {}

BilinearOp::BilinearOp(Space space, Array3 c) : space_(std::move(space)), c_(std::move(c)) {
  const std::size_t n = space_.dim();
  if (c_.dim1() != n || c_.dim2() != n || c_.dim3() != n) {
    throw std::invalid_argument("structure constants do not match the space dimension");
  }
}

void BilinearOp::add(std::size_t i, std::size_t j, const Vec& v) {
  for (std::size_t k = 0; k < v.size(); ++k) c_(i, j, k) += v[k];
}

Vec BilinearOp::product(std::size_t i, std::size_t j) const {
  Vec v(dim());
  for (std::size_t k = 0; k < dim(); ++k) v[k] = c_(i, j, k);
  return v;
}

Vec BilinearOp::apply_left(const Vec& x, std::size_t j) const {
  const std::size_t n = dim();
  Vec r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t k = 0; k < n; ++k) {
      if (!is_zero(c_(i, j, k))) r[k] += x[i] * c_(i, j, k);
    }
  }
  return r;
}

Vec BilinearOp::apply(const Vec& x, const Vec& y) const {
  const std::size_t n = dim();
  Vec r(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (is_zero(y[j])) continue;
    r += y[j] * apply_left(x, j);
  }
  return r;
}

Matrix BilinearOp::left(const Vec& x) const {
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, apply_left(x, j));
  return m;
}

Matrix BilinearOp::left(std::size_t i) const { return left(basis_vec(dim(), i)); }

std::vector<Matrix> BilinearOp::left_all() const {
  std::vector<Matrix> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(left(i));
  return out;
}

BilinearOp BilinearOp::relabel(const Space& s) const {
  if (s.dim() != dim()) throw std::invalid_argument("relabel: dimension mismatch");
  return BilinearOp(s, c_);
}

BilinearOp operator+(const BilinearOp& a, const BilinearOp& b) {
  if (!(a.space() == b.space())) throw std::invalid_argument("product spaces differ");
  return BilinearOp(a.space(), a.coeffs() + b.coeffs());
}

BilinearOp operator-(const BilinearOp& a, const BilinearOp& b) {
  if (!(a.space() == b.space())) throw std::invalid_argument("product spaces differ");
  return BilinearOp(a.space(), a.coeffs() - b.coeffs());
}

BilinearOp opposite(const BilinearOp& m) {
  Array3 c(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      for (std::size_t k = 0; k < m.dim(); ++k) c(i, j, k) = m(j, i, k);
  return BilinearOp(m.space(), std::move(c));
}

RelPoissonAlgebra::RelPoissonAlgebra(BilinearOp dot_, BilinearOp bracket_, Matrix P_)
    : space(dot_.space()), dot(std::move(dot_)), bracket(std::move(bracket_)), P(std::move(P_)) {
  if (!(bracket.space() == space)) throw std::invalid_argument("dot and bracket live on different spaces");
  if (P.rows() != space.dim() || P.cols() != space.dim()) {
    throw std::invalid_argument("derivation is not an endomorphism of the algebra");
  }
}

RelPoissonAlgebra RelPoissonAlgebra::relabel(const Space& s) const {
  return RelPoissonAlgebra(dot.relabel(s), bracket.relabel(s), P);
}

// ---------------------------------------------------------------- checkers

AxiomReport check_comm_assoc(const BilinearOp& m) {
  AxiomReport rep;
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) rep.expect_zero("commutativity", {i, j}, m.product(i, j) - m.product(j, i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vec ij = m.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        const Vec lhs = m.apply_left(ij, k);
        const Vec rhs = m.apply(basis_vec(n, i), m.product(j, k));
        rep.expect_zero("associativity", {i, j, k}, lhs - rhs);
      }
    }
  }
  return rep;
}

AxiomReport check_lie(const BilinearOp& m) {
  AxiomReport rep;
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) rep.expect_zero("antisymmetry", {i, j}, m.product(i, j) + m.product(j, i));
  for (std::size_t i = 0; i < n; ++i) {
    const Vec ei = basis_vec(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vec ej = basis_vec(n, j);
      for (std::size_t k = 0; k < n; ++k) {
        // [x,[y,z]] + [y,[z,x]] + [z,[x,y]]
        Vec s = m.apply(ei, m.product(j, k));
        s += m.apply(ej, m.product(k, i));
        s += m.apply(basis_vec(n, k), m.product(i, j));
        rep.expect_zero("jacobi", {i, j, k}, s);
      }
    }
  }
  return rep;
}

AxiomReport check_derivation(const BilinearOp& m, const Matrix& P) {
  AxiomReport rep;
  const std::size_t n = m.dim();
  if (P.rows() != n || P.cols() != n) throw std::invalid_argument("derivation has the wrong shape");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec d = P * m.product(i, j);
      d -= m.apply_left(P.column(i), j);
      d -= m.apply(basis_vec(n, i), P.column(j));
      rep.expect_zero("derivation", {i, j}, d);
    }
  }
  return rep;
}

AxiomReport check_relative_leibniz(const BilinearOp& dot, const BilinearOp& bracket, const Matrix& P) {
  AxiomReport rep;
  const std::size_t n = dot.dim();
  for (std::size_t z = 0; z < n; ++z) {
    const Vec ez = basis_vec(n, z);
    const Vec pz = P.column(z);
    for (std::size_t x = 0; x < n; ++x) {
      const Vec zx = bracket.product(z, x);
      for (std::size_t y = 0; y < n; ++y) {
        const Vec xy = dot.product(x, y);
        Vec d = bracket.apply(ez, xy);
        d -= dot.apply_left(zx, y);
        d -= dot.apply(basis_vec(n, x), bracket.product(z, y));
        d -= dot.apply(xy, pz);
        rep.expect_zero("relative-leibniz", {z, x, y}, d);
      }
    }
  }
  return rep;
}

AxiomReport check_rel_poisson(const RelPoissonAlgebra& a) {
  AxiomReport rep;
  rep.merge(check_comm_assoc(a.dot), "dot");
  rep.merge(check_lie(a.bracket), "bracket");
  rep.merge(check_derivation(a.dot, a.P), "dot");
  rep.merge(check_derivation(a.bracket, a.P), "bracket");
  rep.merge(check_relative_leibniz(a.dot, a.bracket, a.P));
  return rep;
}

BilinearOp bracket_from_derivation(const BilinearOp& dot, const Matrix& P) {
  require(check_comm_assoc(dot), "bracket-from-derivation");
  require(check_derivation(dot, P), "bracket-from-derivation");
  const std::size_t n = dot.dim();
  BilinearOp br(dot.space());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      br.add(i, j, dot.apply(basis_vec(n, i), P.column(j)) - dot.apply_left(P.column(i), j));
    }
  }
  return br;
}

std::optional<Vec> find_unit(const BilinearOp& dot) {
  const std::size_t n = dot.dim();
  // Unknown u; equations u.e_j = e_j and e_j.u = e_j, coordinate k.
  Matrix a(2 * n * n, n);
  Vec b(2 * n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t r = j * n + k;
      for (std::size_t i = 0; i < n; ++i) {
        a(r, i) = dot(i, j, k);
        a(n * n + r, i) = dot(j, i, k);
      }
      b[r] = b[n * n + r] = (j == k) ? 1 : 0;
    }
  }
  return solve(a, b);
}

Matrix ad(const BilinearOp& bracket, const Vec& x) { return bracket.left(x); }

AxiomReport check_jacobi_algebra(const BilinearOp& dot, const BilinearOp& bracket) {
  const auto unit = find_unit(dot);
  if (!unit) throw PreconditionError("jacobi-algebra", "no unit");
  return check_rel_poisson(RelPoissonAlgebra(dot, bracket, ad(bracket, *unit)));
}

}  // namespace rpa
