#include "rpa/prepoisson.hpp"

#include <stdexcept>

namespace rpa {

RelPrePoissonAlgebra::RelPrePoissonAlgebra(BilinearOp star_, BilinearOp circ_, Matrix P_)
    : space(star_.space()), star(std::move(star_)), circ(std::move(circ_)), P(std::move(P_)) {
  if (!(circ.space() == space)) throw std::invalid_argument("star and circ live on different spaces");
  if (P.rows() != space.dim() || P.cols() != space.dim()) throw std::invalid_argument("P has the wrong shape");
}

AxiomReport check_zinbiel(const BilinearOp& m) {
  const std::size_t n = m.dim();
  AxiomReport out;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Vec xy = m.product(x, y);
      const Vec yx = m.product(y, x);
      for (std::size_t z = 0; z < n; ++z) {
        const Vec lhs = m.apply(basis_vec(n, x), m.product(y, z));
        out.expect_zero("zinbiel", {x, y, z}, lhs - m.apply_left(yx, z) - m.apply_left(xy, z));
      }
    }
  return out;
}

AxiomReport check_prelie(const BilinearOp& m) {
  const std::size_t n = m.dim();
  AxiomReport out;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Vec ex = basis_vec(n, x), ey = basis_vec(n, y);
      const Vec xy = m.product(x, y);
      const Vec yx = m.product(y, x);
      for (std::size_t z = 0; z < n; ++z) {
        const Vec d = m.apply_left(xy, z) - m.apply(ex, m.product(y, z)) - m.apply_left(yx, z) +
                      m.apply(ey, m.product(x, z));
        out.expect_zero("pre-lie", {x, y, z}, d);
      }
    }
  return out;
}

AxiomReport check_rel_pre_poisson(const RelPrePoissonAlgebra& pp) {
  const std::size_t n = pp.dim();
  const auto& s = pp.star;
  const auto& c = pp.circ;
  AxiomReport out;
  out.merge(check_zinbiel(s), "star");
  out.merge(check_prelie(c), "circ");
  out.merge(check_derivation(s, pp.P), "GPPA1");
  out.merge(check_derivation(c, pp.P), "GPPA2");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Vec ex = basis_vec(n, x), ey = basis_vec(n, y);
      const Vec sym = s.product(x, y) + s.product(y, x);
      const Vec circ_xy = c.product(x, y) - c.product(y, x);
      const Vec py = pp.P.column(y);
      const Vec mixed = s.apply(ex, py) + s.apply(py, ex);
      for (std::size_t z = 0; z < n; ++z) {
        const Vec ez = basis_vec(n, z);
        const Vec g3 = c.apply_left(sym, z) - s.apply(ex, c.product(y, z)) - s.apply(ey, c.product(x, z)) +
                       s.apply(sym, pp.P.column(z));
        out.expect_zero("GPPA3", {x, y, z}, g3);
        const Vec g4 = c.apply(ey, s.product(x, z)) - s.apply(ex, c.product(y, z)) + s.apply(circ_xy, ez) -
                       s.apply(mixed, ez);
        out.expect_zero("GPPA4", {x, y, z}, g4);
      }
    }
  return out;
}

BilinearOp circ_from_derivation(const BilinearOp& star, const Matrix& P) {
  const std::size_t n = star.dim();
  if (P.rows() != n || P.cols() != n) throw std::invalid_argument("P has the wrong shape");
  require(check_zinbiel(star), "circ-from-derivation");
  require(check_derivation(star, P), "circ-from-derivation");
  BilinearOp out(star.space());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      out.add(x, y, star.apply(basis_vec(n, x), P.column(y)) - star.apply(P.column(x), basis_vec(n, y)));
  return out;
}

std::pair<RelPoissonAlgebra, RepData> subadjacent(const RelPrePoissonAlgebra& pp) {
  RelPoissonAlgebra a(pp.star + opposite(pp.star), pp.circ - opposite(pp.circ), pp.P);
  RepData rep(a, pp.space, pp.star.left_all(), pp.circ.left_all(), pp.P);
  return {std::move(a), std::move(rep)};
}

RMatrixConstruction prepoisson_to_rmatrix(const RelPrePoissonAlgebra& pp) {
  require(check_rel_pre_poisson(pp), "prepoisson-to-rmatrix");
  auto [a, rep] = subadjacent(pp);
  const Matrix minus_p = Scalar(-1) * pp.P;
  return o_operator_to_rmatrix(rep, minus_p, minus_p, Matrix::identity(pp.dim()));
}

}  // namespace rpa
