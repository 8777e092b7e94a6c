#include "braidforge/polymat.hpp"

#include <map>
#include <stdexcept>

namespace bf {

PolyMat PolyMat::identity(size_t n) {
  PolyMat m(n, n);
  for (size_t i = 0; i < n; i++) m.at(i, i) = NCPoly::one();
  return m;
}

PolyMat PolyMat::scalar(const ScalarMat &s) {
  PolyMat m(s.rows(), s.cols());
  for (size_t i = 0; i < s.rows(); i++)
    for (size_t j = 0; j < s.cols(); j++)
      if (!s.at(i, j).is_zero()) m.at(i, j) = NCPoly(s.at(i, j));
  return m;
}

PolyMat PolyMat::gens(const std::vector<GenId> &ids, size_t n) {
  if (ids.size() != n * n) throw std::invalid_argument("PolyMat::gens size");
  PolyMat m(n, n);
  for (size_t i = 0; i < n; i++)
    for (size_t j = 0; j < n; j++) m.at(i, j) = NCPoly::gen(ids[i * n + j]);
  return m;
}

PolyMat PolyMat::operator*(const PolyMat &o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("PolyMat shape mismatch");
  PolyMat r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; i++)
    for (size_t k = 0; k < cols_; k++) {
      const NCPoly &x = at(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; j++) {
        const NCPoly &y = o.at(k, j);
        if (y.is_zero()) continue;
        r.at(i, j) += x * y;
      }
    }
  return r;
}

PolyMat PolyMat::operator+(const PolyMat &o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("PolyMat shape mismatch");
  PolyMat r(*this);
  for (size_t i = 0; i < a_.size(); i++) r.a_[i] += o.a_[i];
  return r;
}

PolyMat PolyMat::operator-(const PolyMat &o) const {
  return *this + o.scaled(Scalar(-1));
}

PolyMat PolyMat::scaled(const Scalar &c) const {
  PolyMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); i++) r.a_[i] = a_[i].scaled(c);
  return r;
}

PolyMat PolyMat::scaled(const NCPoly &p) const {
  PolyMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); i++) r.a_[i] = p * a_[i];
  return r;
}

PolyMat PolyMat::kron(const PolyMat &o) const {
  PolyMat r(rows_ * o.rows_, cols_ * o.cols_);
  for (size_t i = 0; i < rows_; i++)
    for (size_t j = 0; j < cols_; j++) {
      if (at(i, j).is_zero()) continue;
      for (size_t k = 0; k < o.rows_; k++)
        for (size_t l = 0; l < o.cols_; l++)
          r.at(i * o.rows_ + k, j * o.cols_ + l) = at(i, j) * o.at(k, l);
    }
  return r;
}

PolyMat PolyMat::slot(int s, int nslots) const {
  if (rows_ != cols_) throw std::invalid_argument("slot embed needs square");
  PolyMat r = s == 1 ? *this : PolyMat::identity(rows_);
  for (int k = 2; k <= nslots; k++)
    r = r.kron(k == s ? *this : PolyMat::identity(rows_));
  return r;
}

std::vector<NCPoly> equation_relations(const PolyMat &lhs, const PolyMat &rhs) {
  PolyMat d = lhs - rhs;
  std::vector<NCPoly> rels;
  for (auto &p : d.entries())
    if (!p.is_zero()) rels.push_back(p);
  return rels;
}

ScalarMat solve_rewrite(const PolyMat &lhs, const PolyMat &rhs,
                        const std::vector<Word> &row_words,
                        const std::vector<Word> &col_words) {
  std::vector<NCPoly> le = lhs.entries(), re = rhs.entries();
  size_t nw = row_words.size();
  if (le.size() != nw)
    throw std::domain_error("solve_rewrite: system is not square (" +
                            std::to_string(le.size()) + " equations, " +
                            std::to_string(nw) + " unknowns)");
  std::map<Word, size_t, DegLex> rowidx, colidx;
  for (size_t k = 0; k < row_words.size(); k++) rowidx[row_words[k]] = k;
  for (size_t k = 0; k < col_words.size(); k++) colidx[col_words[k]] = k;
  ScalarMat c1(nw, nw), c2(nw, col_words.size());
  for (size_t e = 0; e < nw; e++) {
    for (auto &[w, c] : le[e].terms()) {
      auto r = rowidx.find(w);
      if (r == rowidx.end())
        throw std::domain_error("solve_rewrite: unexpected word on the left");
      c1.at(e, r->second) += c;
    }
    for (auto &[w, c] : re[e].terms()) {
      auto cc = colidx.find(w);
      if (cc == colidx.end())
        throw std::domain_error("solve_rewrite: unexpected word on the right");
      c2.at(e, cc->second) += c;
    }
  }
  return c1.solve(c2);
}

} // namespace bf
