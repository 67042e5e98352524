#include "rpa/linear.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace rpa {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec basis_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return is_zero(s); });
}

Vec& operator+=(Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vec& operator-=(Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r = a;
  return r += b;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r = a;
  return r -= b;
}

Vec operator-(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vec operator*(const Scalar& s, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

Vec concat(const Vec& u, const Vec& w) {
  Vec r = u;
  r.insert(r.end(), w.begin(), w.end());
  return r;
}

// ---------------------------------------------------------------- Space

Space::Space(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate basis label '" + l + "'");
  }
}

Space Space::standard(std::size_t n, std::string_view prefix) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::string(prefix) + std::to_string(i));
  return Space(std::move(labels));
}

std::optional<std::size_t> Space::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

Space Space::dual() const {
  std::vector<std::string> out;
  out.reserve(labels_.size());
  for (const auto& l : labels_) {
    if (!l.empty() && l.back() == '*') {
      out.push_back(l.substr(0, l.size() - 1));
    } else {
      out.push_back(l + "*");
    }
  }
  return Space(std::move(out));
}

Space direct_sum(const Space& u, const Space& w) {
  std::vector<std::string> labels = u.labels();
  std::set<std::string> seen(labels.begin(), labels.end());
  for (auto l : w.labels()) {
    while (seen.count(l) != 0) l += "'";
    seen.insert(l);
    labels.push_back(std::move(l));
  }
  return Space(std::move(labels));
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) m.set_column(j, columns[j]);
  return m;
}

Vec Matrix::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void Matrix::set_column(std::size_t j, const Vec& v) {
  if (v.size() != rows_) throw std::invalid_argument("column size mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return rpa::is_zero(s); });
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Matrix operator-(const Matrix& a) {
  Matrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = -a.a_[i];
  return r;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = s * a.a_[i];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!is_zero(b(k, j))) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

Vec operator*(const Matrix& a, const Vec& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  Vec r(a.rows_);
  for (std::size_t k = 0; k < a.cols_; ++k) {
    if (is_zero(v[k])) continue;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      if (!is_zero(a(i, k))) r[i] += a(i, k) * v[k];
    }
  }
  return r;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    const Scalar inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a(p, c))) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(a(i, c))) continue;
      const Scalar f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::size_t rank(const Matrix& m) {
  Matrix a = m;
  return rref(a).size();
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto piv = rref(aug);
  if (piv.size() < n || (n > 0 && piv[n - 1] >= n)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side size mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto piv = rref(aug);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  Vec x(a.cols());
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, a.cols());
  return x;
}

std::vector<Vec> nullspace(const Matrix& a) {
  Matrix m = a;
  const auto piv = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(a.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// ---------------------------------------------------------------- Array3

Array3::Array3(std::size_t n1, std::size_t n2, std::size_t n3)
    : n1_(n1), n2_(n2), n3_(n3), a_(n1 * n2 * n3) {}

bool Array3::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return rpa::is_zero(s); });
}

Array3& Array3::operator+=(const Array3& o) {
  if (n1_ != o.n1_ || n2_ != o.n2_ || n3_ != o.n3_) throw std::invalid_argument("array shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Array3& Array3::operator-=(const Array3& o) {
  if (n1_ != o.n1_ || n2_ != o.n2_ || n3_ != o.n3_) throw std::invalid_argument("array shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Array3 operator*(const Scalar& s, const Array3& a) {
  Array3 r(a.n1_, a.n2_, a.n3_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = s * a.a_[i];
  return r;
}

Matrix apply2(const Matrix& f, const Matrix& g, const Matrix& t) { return f * t * g.transpose(); }

Array3 apply_on(const Matrix& f, std::size_t slot, const Array3& t) {
  const std::size_t d1 = t.dim1(), d2 = t.dim2(), d3 = t.dim3();
  const std::size_t in = slot == 0 ? d1 : slot == 1 ? d2 : d3;
  if (f.cols() != in) throw std::invalid_argument("apply_on: factor dimension mismatch");
  Array3 out(slot == 0 ? f.rows() : d1, slot == 1 ? f.rows() : d2, slot == 2 ? f.rows() : d3);
  for (std::size_t i = 0; i < d1; ++i) {
    for (std::size_t j = 0; j < d2; ++j) {
      for (std::size_t k = 0; k < d3; ++k) {
        const Scalar& c = t(i, j, k);
        if (is_zero(c)) continue;
        for (std::size_t a = 0; a < f.rows(); ++a) {
          const Scalar& fa = f(a, slot == 0 ? i : slot == 1 ? j : k);
          if (is_zero(fa)) continue;
          if (slot == 0) {
            out(a, j, k) += fa * c;
          } else if (slot == 1) {
            out(i, a, k) += fa * c;
          } else {
            out(i, j, a) += fa * c;
          }
        }
      }
    }
  }
  return out;
}

Array3 apply3(const Matrix& f, const Matrix& g, const Matrix& h, const Array3& t) {
  return apply_on(h, 2, apply_on(g, 1, apply_on(f, 0, t)));
}

Array3 outer(const Matrix& t, const Vec& v) {
  Array3 out(t.rows(), t.cols(), v.size());
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t j = 0; j < t.cols(); ++j) {
      if (is_zero(t(i, j))) continue;
      for (std::size_t k = 0; k < v.size(); ++k) out(i, j, k) = t(i, j) * v[k];
    }
  }
  return out;
}

Matrix outer(const Vec& x, const Vec& y) {
  Matrix m(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < y.size(); ++j) m(i, j) = x[i] * y[j];
  }
  return m;
}

Array3 swap12(const Array3& t) {
  Array3 out(t.dim2(), t.dim1(), t.dim3());
  for (std::size_t i = 0; i < t.dim1(); ++i)
    for (std::size_t j = 0; j < t.dim2(); ++j)
      for (std::size_t k = 0; k < t.dim3(); ++k) out(j, i, k) = t(i, j, k);
  return out;
}

Array3 swap23(const Array3& t) {
  Array3 out(t.dim1(), t.dim3(), t.dim2());
  for (std::size_t i = 0; i < t.dim1(); ++i)
    for (std::size_t j = 0; j < t.dim2(); ++j)
      for (std::size_t k = 0; k < t.dim3(); ++k) out(i, k, j) = t(i, j, k);
  return out;
}

Array3 rotate(const Array3& t) {
  Array3 out(t.dim2(), t.dim3(), t.dim1());
  for (std::size_t i = 0; i < t.dim1(); ++i)
    for (std::size_t j = 0; j < t.dim2(); ++j)
      for (std::size_t k = 0; k < t.dim3(); ++k) out(j, k, i) = t(i, j, k);
  return out;
}

// ---------------------------------------------------------------- maps and tensors

LinearMap::LinearMap(Space domain, Space codomain, Matrix entries)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), m_(std::move(entries)) {
  if (m_.rows() != codomain_.dim() || m_.cols() != domain_.dim()) {
    throw std::invalid_argument("linear map entries do not match (codomain, domain) dimensions");
  }
}

LinearMap LinearMap::identity(const Space& s) { return LinearMap(s, s, Matrix::identity(s.dim())); }

Tensor2::Tensor2(Space l, Space r, Matrix c) : left(std::move(l)), right(std::move(r)), coeffs(std::move(c)) {
  if (coeffs.rows() != left.dim() || coeffs.cols() != right.dim()) {
    throw std::invalid_argument("tensor coefficients do not match factor dimensions");
  }
}

Tensor2 Tensor2::zero(const Space& l, const Space& r) { return Tensor2(l, r, Matrix(l.dim(), r.dim())); }

Tensor3::Tensor3(Space sa, Space sb, Space sc, Array3 t)
    : a(std::move(sa)), b(std::move(sb)), c(std::move(sc)), coeffs(std::move(t)) {
  if (coeffs.dim1() != a.dim() || coeffs.dim2() != b.dim() || coeffs.dim3() != c.dim()) {
    throw std::invalid_argument("tensor coefficients do not match factor dimensions");
  }
}

Tensor2 tau(const Tensor2& t) { return Tensor2(t.right, t.left, t.coeffs.transpose()); }

Tensor3 xi(const Tensor3& t) {
  if (!(t.a == t.b && t.b == t.c)) throw std::invalid_argument("xi: factor-space mismatch");
  return Tensor3(t.a, t.a, t.a, rotate(t.coeffs));
}

LinearMap dual_map(const LinearMap& f) {
  return LinearMap(f.codomain().dual(), f.domain().dual(), f.matrix().transpose());
}

LinearMap tensor2_as_map(const Tensor2& r) {
  if (!(r.left == r.right)) throw std::invalid_argument("tensor2_as_map: factor mismatch");
  return LinearMap(r.left.dual(), r.right, r.coeffs.transpose());
}

}  // namespace rpa
