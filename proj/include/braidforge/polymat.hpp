#pragma once

#include "braidforge/matrix.hpp"
#include "braidforge/ncpoly.hpp"
#include "braidforge/presentation.hpp"

namespace bf {

// Matrix with noncommutative polynomial entries; the workhorse for turning
// the displayed matrix equations into componentwise relations.
class PolyMat {
public:
  PolyMat() : rows_(0), cols_(0) {}
  PolyMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static PolyMat identity(size_t n);
  static PolyMat scalar(const ScalarMat &m);
  // n x n matrix of generators laid out row-major
  static PolyMat gens(const std::vector<GenId> &ids, size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  NCPoly &at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const NCPoly &at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  PolyMat operator*(const PolyMat &o) const;
  PolyMat operator+(const PolyMat &o) const;
  PolyMat operator-(const PolyMat &o) const;
  PolyMat scaled(const Scalar &c) const;
  PolyMat scaled(const NCPoly &p) const; // left-multiply entries
  PolyMat kron(const PolyMat &o) const;

  // embed an n x n matrix into slot s (1-based) of an m-fold tensor space
  PolyMat slot(int s, int nslots) const;

  std::vector<NCPoly> entries() const { return a_; }

private:
  size_t rows_, cols_;
  std::vector<NCPoly> a_;
};

// All componentwise relations lhs - rhs = 0.
std::vector<NCPoly> equation_relations(const PolyMat &lhs, const PolyMat &rhs);

// Solve the componentwise system "lhs == rhs" for the matrix T expressing
// each rowWords[k] as sum_m T[k][m] colWords[m]; the left side must be
// supported on row words and the right side on column words.  Throws on an
// unsolvable system.
ScalarMat solve_rewrite(const PolyMat &lhs, const PolyMat &rhs,
                        const std::vector<Word> &row_words,
                        const std::vector<Word> &col_words);

} // namespace bf
