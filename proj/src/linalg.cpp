#include "pgq/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace pgq {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
}

void Matrix::set_row(std::size_t r, const Vec& v) {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::set_row: length mismatch");
  std::copy(v.begin(), v.end(), e_.begin() + r * cols_);
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Matrix::operator*: shape mismatch");
  Matrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix::operator+: shape mismatch");
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix::operator-: shape mismatch");
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - o.e_[i];
  return out;
}

Matrix Matrix::scaled(const Rational& s) const {
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = s * e_[i];
  return out;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: length mismatch");
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& a = (*this)(i, j);
      if (!a.is_zero()) out[i] += a * v[j];
    }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Rational& x) { return x.is_zero(); });
}

void RrefBuilder::reduce(Vec& row) const {
  for (std::size_t c = 0; c < cols_; ++c) {
    if (row[c].is_zero()) continue;
    int r = pivot_row_of_col_[c];
    if (r < 0) continue;
    Rational factor = row[c];
    const Vec& prow = rows_[static_cast<std::size_t>(r)];
    for (std::size_t j = c; j < cols_; ++j)
      if (!prow[j].is_zero()) row[j] -= factor * prow[j];
  }
}

bool RrefBuilder::add_row(Vec row) {
  if (row.size() != cols_) throw std::invalid_argument("RrefBuilder::add_row: length mismatch");
  reduce(row);
  std::size_t pivot = cols_;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!row[c].is_zero()) { pivot = c; break; }
  if (pivot == cols_) return false;

  Rational inv = row[pivot].inverse();
  for (std::size_t j = pivot; j < cols_; ++j)
    if (!row[j].is_zero()) row[j] *= inv;

  // back-substitute the new pivot column out of the existing rows
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rational factor = rows_[i][pivot];
    if (factor.is_zero()) continue;
    for (std::size_t j = pivot; j < cols_; ++j)
      if (!row[j].is_zero()) rows_[i][j] -= factor * row[j];
  }

  pivot_row_of_col_[pivot] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(row));
  pivot_col_.push_back(pivot);
  return true;
}

bool RrefBuilder::reduces_to_zero(Vec v) const {
  if (v.size() != cols_) throw std::invalid_argument("RrefBuilder::reduces_to_zero: length mismatch");
  reduce(v);
  return vec_is_zero(v);
}

Matrix RrefBuilder::rref_matrix() const {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivot_col_[a] < pivot_col_[b]; });
  Matrix m(rows_.size(), cols_);
  for (std::size_t i = 0; i < order.size(); ++i) m.set_row(i, rows_[order[i]]);
  return m;
}

std::vector<Vec> RrefBuilder::kernel_basis() const {
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (pivot_row_of_col_[f] >= 0) continue;
    Vec v(cols_);
    v[f] = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& coeff = rows_[i][f];
      if (!coeff.is_zero()) v[pivot_col_[i]] = -coeff;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix rref(const Matrix& m) {
  RrefBuilder b(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) b.add_row(m.row(r));
  Matrix reduced = b.rref_matrix();
  // pad with zero rows to keep the input shape
  Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < reduced.rows(); ++r) out.set_row(r, reduced.row(r));
  return out;
}

std::size_t rank(const Matrix& m) {
  RrefBuilder b(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) b.add_row(m.row(r));
  return b.rank();
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  std::size_t n = m.cols();
  RrefBuilder builder(n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vec row = m.row(r);
    row.push_back(b[r]);
    builder.add_row(std::move(row));
  }
  Matrix red = builder.rref_matrix();
  Vec x(n);
  for (std::size_t r = 0; r < red.rows(); ++r) {
    std::size_t pivot = n + 1;
    for (std::size_t c = 0; c <= n; ++c)
      if (!red(r, c).is_zero()) { pivot = c; break; }
    if (pivot == n) return std::nullopt;  // row (0 ... 0 | 1): inconsistent
    if (pivot < n) x[pivot] = red(r, n);
  }
  return x;
}

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, {}); }

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    Vec v(ambient_dim);
    v[i] = 1;
    basis.push_back(std::move(v));
  }
  return Subspace(ambient_dim, std::move(basis));
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& generators) {
  RrefBuilder b(ambient_dim);
  for (const Vec& g : generators) {
    if (g.size() != ambient_dim) throw std::invalid_argument("Subspace::span: generator length mismatch");
    b.add_row(g);
  }
  Matrix m = b.rref_matrix();
  std::vector<Vec> basis;
  basis.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) basis.push_back(m.row(r));
  return Subspace(ambient_dim, std::move(basis));
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace::contains: ambient dimension mismatch");
  Vec r = v;
  for (const Vec& b : basis_) {
    std::size_t pivot = 0;
    while (b[pivot].is_zero()) ++pivot;  // basis rows are nonzero by construction
    if (r[pivot].is_zero()) continue;
    Rational factor = r[pivot];
    for (std::size_t j = pivot; j < ambient_; ++j)
      if (!b[j].is_zero()) r[j] -= factor * b[j];
  }
  return vec_is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace::contains: ambient dimension mismatch");
  for (const Vec& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace::intersect: ambient dimension mismatch");
  // x in both spans: x = sum u_i a_i = sum v_j b_j. Kernel of [A^T | -B^T]
  // yields the coefficient pairs (u, v).
  std::size_t ra = dim(), rb = other.dim();
  if (ra == 0 || rb == 0) return Subspace::zero(ambient_);
  Matrix n(ambient_, ra + rb);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t k = 0; k < ambient_; ++k) n(k, i) = basis_[i][k];
  for (std::size_t j = 0; j < rb; ++j)
    for (std::size_t k = 0; k < ambient_; ++k) n(k, ra + j) = -other.basis_[j][k];
  Subspace coeffs = nullspace(n);
  std::vector<Vec> gens;
  for (const Vec& uv : coeffs.basis()) {
    Vec x(ambient_);
    for (std::size_t i = 0; i < ra; ++i)
      if (!uv[i].is_zero()) x = vec_add(x, vec_scale(uv[i], basis_[i]));
    gens.push_back(std::move(x));
  }
  return Subspace::span(ambient_, gens);
}

Subspace nullspace(const Matrix& m) {
  RrefBuilder b(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) b.add_row(m.row(r));
  return Subspace::span(m.cols(), b.kernel_basis());
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_sub: length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec vec_scale(const Rational& s, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

}  // namespace pgq
