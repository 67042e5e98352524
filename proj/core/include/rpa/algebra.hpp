#pragma once

#include "rpa/linear.hpp"
#include "rpa/report.hpp"

#include <optional>
#include <vector>

namespace rpa {

/// Bilinear product on a based space: e_i * e_j = sum_k c(i,j,k) e_k.
class BilinearOp {
 public:
  BilinearOp() = default;
  explicit BilinearOp(Space space);
  BilinearOp(Space space, Array3 c);

  const Space& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  const Array3& coeffs() const { return c_; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_(i, j, k); }
  void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) { c_(i, j, k) = v; }
  void add(std::size_t i, std::size_t j, const Vec& v);

  Vec product(std::size_t i, std::size_t j) const;
  Vec apply(const Vec& x, const Vec& y) const;
  /// x * e_j
  Vec apply_left(const Vec& x, std::size_t j) const;
  /// Matrix of y -> x * y.
  Matrix left(const Vec& x) const;
  Matrix left(std::size_t i) const;
  /// Left multiplication matrices of all basis vectors.
  std::vector<Matrix> left_all() const;
  /// The same structure constants on a relabelled space of equal dimension.
  BilinearOp relabel(const Space& s) const;

  friend bool operator==(const BilinearOp&, const BilinearOp&) = default;

 private:
  Space space_;
  Array3 c_;
};

BilinearOp operator+(const BilinearOp& a, const BilinearOp& b);
BilinearOp operator-(const BilinearOp& a, const BilinearOp& b);
/// x (*)' y = y * x
BilinearOp opposite(const BilinearOp& m);

/// (A, dot, bracket, P). The axioms are checked by check_rel_poisson, not
/// enforced on construction, so negative instances can be represented.
struct RelPoissonAlgebra {
  Space space;
  BilinearOp dot;
  BilinearOp bracket;
  Matrix P;

  RelPoissonAlgebra() = default;
  RelPoissonAlgebra(BilinearOp dot_, BilinearOp bracket_, Matrix P_);
  std::size_t dim() const { return space.dim(); }
  RelPoissonAlgebra relabel(const Space& s) const;
  friend bool operator==(const RelPoissonAlgebra&, const RelPoissonAlgebra&) = default;
};

AxiomReport check_comm_assoc(const BilinearOp& m);
AxiomReport check_lie(const BilinearOp& m);
AxiomReport check_derivation(const BilinearOp& m, const Matrix& P);
AxiomReport check_relative_leibniz(const BilinearOp& dot, const BilinearOp& bracket, const Matrix& P);
AxiomReport check_rel_poisson(const RelPoissonAlgebra& a);

/// [x,y] = x.P(y) - P(x).y; throws PreconditionError unless dot is
/// commutative associative and P is a derivation of it.
BilinearOp bracket_from_derivation(const BilinearOp& dot, const Matrix& P);

/// Two-sided unit as a coefficient vector, if one exists.
std::optional<Vec> find_unit(const BilinearOp& dot);
/// Matrix of ad(x) = [x, -].
Matrix ad(const BilinearOp& bracket, const Vec& x);
/// Checks the relative Poisson axioms with P = ad(1). Throws
/// PreconditionError("no unit") when dot has no unit.
AxiomReport check_jacobi_algebra(const BilinearOp& dot, const BilinearOp& bracket);

}  // namespace rpa
