#pragma once

#include "braidforge/scalar.hpp"

#include <vector>

namespace bf {

// Dense matrix of exact scalars.
class ScalarMat {
public:
  ScalarMat() : rows_(0), cols_(0) {}
  ScalarMat(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static ScalarMat identity(size_t n);
  // flip P on an n*n tensor-square space: P e_i⊗e_j = e_j⊗e_i
  static ScalarMat flip(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Scalar &at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const Scalar &at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  ScalarMat operator*(const ScalarMat &o) const;
  ScalarMat operator+(const ScalarMat &o) const;
  ScalarMat operator-(const ScalarMat &o) const;
  ScalarMat scaled(const Scalar &c) const;
  ScalarMat transposed() const;
  ScalarMat kron(const ScalarMat &o) const;

  bool operator==(const ScalarMat &o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool is_zero() const;

  ScalarMat powers_scaled(int64_t m) const;
  // entrywise substitution q -> q0 (keeps exactness; throws on pole)
  ScalarMat evaluated(const mpq_class &q0) const;

  // exact inverse; throws std::domain_error when singular
  ScalarMat inverse() const;
  bool invertible() const;

  // solve A x = b for several right-hand sides (b as columns)
  ScalarMat solve(const ScalarMat &b) const;

private:
  size_t rows_, cols_;
  std::vector<Scalar> a_;
};

} // namespace bf
