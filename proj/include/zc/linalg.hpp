#pragma once

#include <optional>
#include <vector>

#include "zc/field.hpp"

namespace zc {

using Vec = std::vector<Rational>;

/// Dense matrix over a base field, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field k, int rows, int cols);
  static Matrix identity(const Field& k, int n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(const Field& k, int rows, const std::vector<Vec>& cols);
  static Matrix from_rows(const Field& k, int cols, const std::vector<Vec>& rows);

  const Field& field() const { return k_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
  const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
  Vec row(int i) const;
  Vec col(int j) const;
  bool is_zero() const;

  Matrix transpose() const;
  Vec apply(const Vec& v) const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  Matrix scaled(const Rational& s) const;
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field k_;
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

struct Rref {
  Matrix reduced;
  std::vector<int> pivots;  // pivot column of each nonzero row
};

Rref rref(Matrix m);
int rank(const Matrix& m);
Rational det(const Matrix& m);
/// Basis of {x : m x = 0}.
std::vector<Vec> nullspace(const Matrix& m);
/// Some x with m x = b, if one exists.
std::optional<Vec> solve(const Matrix& m, const Vec& b);
/// Reduced basis of the span of the given vectors (length n each).
std::vector<Vec> span_basis(const Field& k, int n, const std::vector<Vec>& vecs);
bool in_span(const Field& k, int n, const std::vector<Vec>& basis, const Vec& v);

Vec vec_add(const Field& k, const Vec& a, const Vec& b);
Vec vec_sub(const Field& k, const Vec& a, const Vec& b);
Vec vec_scale(const Field& k, const Vec& a, const Rational& s);
bool vec_is_zero(const Vec& a);

}  // namespace zc
