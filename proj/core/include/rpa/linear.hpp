#pragma once

#include "rpa/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rpa {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
Vec basis_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Scalar& s, const Vec& a);
Vec& operator+=(Vec& a, const Vec& b);
Vec& operator-=(Vec& a, const Vec& b);
// Concatenation: the coordinates of u followed by those of w.
Vec concat(const Vec& u, const Vec& w);

/// A vector space with a chosen, labelled basis.
class Space {
 public:
  Space() = default;
  explicit Space(std::vector<std::string> labels);

  /// Basis named prefix1, ..., prefixN.
  static Space standard(std::size_t n, std::string_view prefix = "e");

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(std::string_view label) const;

  /// Dual space with the dual basis. A trailing '*' is toggled, so the dual
  /// of the dual carries the original labels.
  Space dual() const;

  friend bool operator==(const Space&, const Space&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Basis of u followed by basis of w. Labels of w that clash with labels of
/// u receive primes until unique.
Space direct_sum(const Space& u, const Space& w);

/// Dense matrix of exact scalars, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<Vec>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  const std::vector<Scalar>& data() const { return a_; }

  Vec column(std::size_t j) const;
  Vec row(std::size_t i) const;
  void set_column(std::size_t j, const Vec& v);
  Matrix transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(const Matrix& a);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vec operator*(const Matrix& a, const Vec& v);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> a_;
};

Matrix block_diag(const Matrix& a, const Matrix& b);
Scalar determinant(const Matrix& m);
std::size_t rank(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
/// One solution of a x = b, or nothing when the system is inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);
/// Basis of the null space of a, as columns.
std::vector<Vec> nullspace(const Matrix& a);

/// Dense rank-3 coefficient array, index order (i, j, k), k fastest.
class Array3 {
 public:
  Array3() = default;
  Array3(std::size_t n1, std::size_t n2, std::size_t n3);
  explicit Array3(std::size_t n) : Array3(n, n, n) {}

  std::size_t dim1() const { return n1_; }
  std::size_t dim2() const { return n2_; }
  std::size_t dim3() const { return n3_; }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return a_[(i * n2_ + j) * n3_ + k];
  }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return a_[(i * n2_ + j) * n3_ + k];
  }
  const std::vector<Scalar>& data() const { return a_; }
  bool is_zero() const;

  Array3& operator+=(const Array3& o);
  Array3& operator-=(const Array3& o);
  friend Array3 operator+(Array3 a, const Array3& b) { return a += b; }
  friend Array3 operator-(Array3 a, const Array3& b) { return a -= b; }
  friend Array3 operator*(const Scalar& s, const Array3& a);
  friend bool operator==(const Array3&, const Array3&) = default;

 private:
  std::size_t n1_ = 0, n2_ = 0, n3_ = 0;
  std::vector<Scalar> a_;
};

// Tensor calculus on coefficient arrays. A Matrix t stands for
// sum t(i,j) e_i (x) e_j and an Array3 for sum t(i,j,k) e_i (x) e_j (x) e_k.

/// (f (x) g) t
Matrix apply2(const Matrix& f, const Matrix& g, const Matrix& t);
/// f applied to factor `slot` (0, 1 or 2) of t.
Array3 apply_on(const Matrix& f, std::size_t slot, const Array3& t);
/// (f (x) g (x) h) t
Array3 apply3(const Matrix& f, const Matrix& g, const Matrix& h, const Array3& t);
/// t (x) v
Array3 outer(const Matrix& t, const Vec& v);
/// x (x) y
Matrix outer(const Vec& x, const Vec& y);
/// (tau (x) id) t: swaps the first two factors.
Array3 swap12(const Array3& t);
/// (id (x) tau) t: swaps the last two factors.
Array3 swap23(const Array3& t);
/// x(a (x) b (x) c) = b (x) c (x) a.
Array3 rotate(const Array3& t);

/// Linear map between based spaces; entries(i, j) is the e_i coordinate of
/// the image of the j-th domain basis vector.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(Space domain, Space codomain, Matrix entries);
  static LinearMap identity(const Space& s);

  const Space& domain() const { return domain_; }
  const Space& codomain() const { return codomain_; }
  const Matrix& matrix() const { return m_; }
  Vec operator()(const Vec& v) const { return m_ * v; }

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  Space domain_;
  Space codomain_;
  Matrix m_;
};

/// Element sum coeffs(i,j) e_i (x) f_j of left (x) right.
struct Tensor2 {
  Space left;
  Space right;
  Matrix coeffs;

  Tensor2() = default;
  Tensor2(Space l, Space r, Matrix c);
  static Tensor2 zero(const Space& l, const Space& r);
  friend bool operator==(const Tensor2&, const Tensor2&) = default;
};

/// Element of a (x) b (x) c with coefficients indexed in that order.
struct Tensor3 {
  Space a;
  Space b;
  Space c;
  Array3 coeffs;

  Tensor3() = default;
  Tensor3(Space sa, Space sb, Space sc, Array3 t);
  friend bool operator==(const Tensor3&, const Tensor3&) = default;
};

Tensor2 tau(const Tensor2& t);
/// Cyclic rotation; all three factor spaces must agree.
Tensor3 xi(const Tensor3& t);
/// Transpose map between dual spaces under <e_i*, e_j> = delta_ij.
LinearMap dual_map(const LinearMap& f);
/// The map a* -> sum_i <a*, a_i> b_i for r = sum_i a_i (x) b_i in A (x) A.
LinearMap tensor2_as_map(const Tensor2& r);

}  // namespace rpa
