#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pgq/rational.hpp"

namespace pgq {

using Vec = std::vector<Rational>;

// Dense row-major rational matrix.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  void set_row(std::size_t r, const Vec& v);

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Rational& s) const;
  Vec apply(const Vec& v) const;

  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> e_;
};

// Incrementally maintained reduced row echelon form of a growing row set.
// Rows are kept normalized (pivot entry 1) and fully back-substituted, so
// rref_matrix() is the unique RREF of everything fed in so far.
class RrefBuilder {
public:
  explicit RrefBuilder(std::size_t cols) : cols_(cols), pivot_row_of_col_(cols, -1) {}

  // Reduces `row` against the current rows; inserts the remainder if nonzero.
  // Returns true when the rank grew.
  bool add_row(Vec row);

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  // True iff v lies in the row space accumulated so far.
  bool reduces_to_zero(Vec v) const;

  Matrix rref_matrix() const;                 // rank x cols, rows ordered by pivot column
  std::vector<Vec> kernel_basis() const;      // basis of {x : R x = 0}, one vector per free column

private:
  void reduce(Vec& row) const;

  std::size_t cols_;
  std::vector<Vec> rows_;                     // unordered; pivot_col_[i] is rows_[i]'s pivot
  std::vector<std::size_t> pivot_col_;
  std::vector<int> pivot_row_of_col_;         // column -> index into rows_, or -1
};

Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// One exact solution of m x = b, free variables set to zero; nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

// A linear subspace of Q^n held as the nonzero rows of a reduced row echelon
// form, so equal subspaces compare equal componentwise.
class Subspace {
public:
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& generators);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

private:
  Subspace(std::size_t ambient, std::vector<Vec> basis) : ambient_(ambient), basis_(std::move(basis)) {}

  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
};

Subspace nullspace(const Matrix& m);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& s, const Vec& v);
bool vec_is_zero(const Vec& v);

}  // namespace pgq
