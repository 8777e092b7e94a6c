#include "braidforge/matrix.hpp"

#include <stdexcept>

namespace bf {

ScalarMat ScalarMat::identity(size_t n) {
  ScalarMat m(n, n);
  for (size_t i = 0; i < n; i++) m.at(i, i) = Scalar(1);
  return m;
}

ScalarMat ScalarMat::flip(size_t n) {
  ScalarMat m(n * n, n * n);
  for (size_t i = 0; i < n; i++)
    for (size_t j = 0; j < n; j++)
      m.at(j * n + i, i * n + j) = Scalar(1);
  return m;
}

ScalarMat ScalarMat::operator*(const ScalarMat &o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("ScalarMat shape mismatch");
  ScalarMat r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; i++)
    for (size_t k = 0; k < cols_; k++) {
      const Scalar &x = at(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; j++) {
        const Scalar &y = o.at(k, j);
        if (y.is_zero()) continue;
        r.at(i, j) += x * y;
      }
    }
  return r;
}

ScalarMat ScalarMat::operator+(const ScalarMat &o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("ScalarMat shape mismatch");
  ScalarMat r(*this);
  for (size_t i = 0; i < a_.size(); i++) r.a_[i] += o.a_[i];
  return r;
}

ScalarMat ScalarMat::operator-(const ScalarMat &o) const {
  return *this + o.scaled(Scalar(-1));
}

ScalarMat ScalarMat::scaled(const Scalar &c) const {
  ScalarMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); i++) r.a_[i] = a_[i] * c;
  return r;
}

ScalarMat ScalarMat::transposed() const {
  ScalarMat r(cols_, rows_);
  for (size_t i = 0; i < rows_; i++)
    for (size_t j = 0; j < cols_; j++) r.at(j, i) = at(i, j);
  return r;
}

ScalarMat ScalarMat::kron(const ScalarMat &o) const {
  ScalarMat r(rows_ * o.rows_, cols_ * o.cols_);
  for (size_t i = 0; i < rows_; i++)
    for (size_t j = 0; j < cols_; j++) {
      if (at(i, j).is_zero()) continue;
      for (size_t k = 0; k < o.rows_; k++)
        for (size_t l = 0; l < o.cols_; l++)
          r.at(i * o.rows_ + k, j * o.cols_ + l) = at(i, j) * o.at(k, l);
    }
  return r;
}

bool ScalarMat::is_zero() const {
  for (auto &x : a_)
    if (!x.is_zero()) return false;
  return true;
}

ScalarMat ScalarMat::powers_scaled(int64_t m) const {
  ScalarMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); i++) r.a_[i] = a_[i].powers_scaled(m);
  return r;
}

ScalarMat ScalarMat::evaluated(const mpq_class &q0) const {
  ScalarMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); i++) r.a_[i] = Scalar(a_[i].eval(q0));
  return r;
}

ScalarMat ScalarMat::solve(const ScalarMat &b) const {
  if (rows_ != cols_ || b.rows_ != rows_)
    throw std::invalid_argument("ScalarMat::solve shape mismatch");
  size_t n = rows_, m = b.cols_;
  ScalarMat a(*this), x(b);
  for (size_t col = 0; col < n; col++) {
    size_t piv = col;
    while (piv < n && a.at(piv, col).is_zero()) piv++;
    if (piv == n) throw std::domain_error("singular matrix");
    if (piv != col) {
      for (size_t j = 0; j < n; j++) std::swap(a.at(piv, j), a.at(col, j));
      for (size_t j = 0; j < m; j++) std::swap(x.at(piv, j), x.at(col, j));
    }
    Scalar inv = a.at(col, col).inv();
    for (size_t j = 0; j < n; j++) a.at(col, j) = a.at(col, j) * inv;
    for (size_t j = 0; j < m; j++) x.at(col, j) = x.at(col, j) * inv;
    for (size_t r = 0; r < n; r++) {
      if (r == col || a.at(r, col).is_zero()) continue;
      Scalar f = a.at(r, col);
      for (size_t j = 0; j < n; j++) a.at(r, j) = a.at(r, j) - f * a.at(col, j);
      for (size_t j = 0; j < m; j++) x.at(r, j) = x.at(r, j) - f * x.at(col, j);
    }
  }
  return x;
}

ScalarMat ScalarMat::inverse() const { return solve(identity(rows_)); }

bool ScalarMat::invertible() const {
  try {
    (void)inverse();
    return true;
  } catch (const std::domain_error &) {
    return false;
  }
}

} // namespace bf
