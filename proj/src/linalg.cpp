#include "zc/linalg.hpp"

#include "zc/error.hpp"

namespace zc {

Matrix::Matrix(Field k, int rows, int cols)
    : k_(k), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols), Rational(0)) {}

Matrix Matrix::identity(const Field& k, int n) {
  Matrix m(k, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const Field& k, int rows, const std::vector<Vec>& cols) {
  Matrix m(k, rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j) {
    ensure(static_cast<int>(cols[static_cast<std::size_t>(j)].size()) == rows, "column length mismatch");
    for (int i = 0; i < rows; ++i) m.at(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  }
  return m;
}

Matrix Matrix::from_rows(const Field& k, int cols, const std::vector<Vec>& rows) {
  Matrix m(k, static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i) {
    ensure(static_cast<int>(rows[static_cast<std::size_t>(i)].size()) == cols, "row length mismatch");
    for (int j = 0; j < cols; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

Vec Matrix::row(int i) const {
  return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

Vec Matrix::col(int j) const {
  Vec v;
  for (int i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(k_, cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

Vec Matrix::apply(const Vec& v) const {
  ensure(static_cast<int>(v.size()) == cols_, "matrix-vector size mismatch");
  Vec r(static_cast<std::size_t>(rows_), Rational(0));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (sgn(at(i, j)) != 0 && sgn(v[static_cast<std::size_t>(j)]) != 0) {
        r[static_cast<std::size_t>(i)] = k_.add(r[static_cast<std::size_t>(i)], k_.mul(at(i, j), v[static_cast<std::size_t>(j)]));
      }
    }
  }
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  ensure(a.cols_ == b.rows_, "matrix product size mismatch");
  const Field& k = a.k_;
  Matrix r(k, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int l = 0; l < a.cols_; ++l) {
      const Rational& x = a.at(i, l);
      if (sgn(x) == 0) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (sgn(b.at(l, j)) != 0) r.at(i, j) = k.add(r.at(i, j), k.mul(x, b.at(l, j)));
      }
    }
  }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  ensure(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum size mismatch");
  Matrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = a.k_.add(a.a_[i], b.a_[i]);
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  ensure(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix difference size mismatch");
  Matrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = a.k_.sub(a.a_[i], b.a_[i]);
  return r;
}

Matrix Matrix::scaled(const Rational& s) const {
  Matrix r = *this;
  for (auto& x : r.a_) x = k_.mul(x, s);
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Rref rref(Matrix m) {
  const Field& k = m.field();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = r;
    while (p < m.rows() && k.is_zero(m.at(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    }
    Rational inv = k.inv(m.at(r, c));
    for (int j = c; j < m.cols(); ++j) m.at(r, j) = k.mul(m.at(r, j), inv);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || k.is_zero(m.at(i, c))) continue;
      Rational f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) {
        if (!k.is_zero(m.at(r, j))) m.at(i, j) = k.sub(m.at(i, j), k.mul(f, m.at(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).pivots.size()); }

Rational det(const Matrix& m) {
  ensure(m.rows() == m.cols(), "determinant of a non-square matrix");
  const Field& k = m.field();
  Matrix a = m;
  Rational d = 1;
  const int n = a.rows();
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && k.is_zero(a.at(p, c))) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(c, j));
      d = k.neg(d);
    }
    d = k.mul(d, a.at(c, c));
    Rational inv = k.inv(a.at(c, c));
    for (int i = c + 1; i < n; ++i) {
      if (k.is_zero(a.at(i, c))) continue;
      Rational f = k.mul(a.at(i, c), inv);
      for (int j = c; j < n; ++j) a.at(i, j) = k.sub(a.at(i, j), k.mul(f, a.at(c, j)));
    }
  }
  return d;
}

std::vector<Vec> nullspace(const Matrix& m) {
  const Field& k = m.field();
  Rref rr = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : rr.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vec v(static_cast<std::size_t>(m.cols()), Rational(0));
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
      v[static_cast<std::size_t>(rr.pivots[r])] = k.neg(rr.reduced.at(static_cast<int>(r), f));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  ensure(static_cast<int>(b.size()) == m.rows(), "right-hand side size mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[static_cast<std::size_t>(i)];
  }
  Rref rr = rref(std::move(aug));
  if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
  Vec x(static_cast<std::size_t>(m.cols()), Rational(0));
  for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
    x[static_cast<std::size_t>(rr.pivots[r])] = rr.reduced.at(static_cast<int>(r), m.cols());
  }
  return x;
}

std::vector<Vec> span_basis(const Field& k, int n, const std::vector<Vec>& vecs) {
  if (vecs.empty()) return {};
  Rref rr = rref(Matrix::from_rows(k, n, vecs));
  std::vector<Vec> out;
  for (std::size_t r = 0; r < rr.pivots.size(); ++r) out.push_back(rr.reduced.row(static_cast<int>(r)));
  return out;
}

bool in_span(const Field& k, int n, const std::vector<Vec>& basis, const Vec& v) {
  if (vec_is_zero(v)) return true;
  if (basis.empty()) return false;
  return solve(Matrix::from_columns(k, n, basis), v).has_value();
}

Vec vec_add(const Field& k, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k.add(a[i], b[i]);
  return r;
}

Vec vec_sub(const Field& k, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k.sub(a[i], b[i]);
  return r;
}

Vec vec_scale(const Field& k, const Vec& a, const Rational& s) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k.mul(a[i], s);
  return r;
}

bool vec_is_zero(const Vec& a) {
  for (const auto& x : a) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

}  // namespace zc
