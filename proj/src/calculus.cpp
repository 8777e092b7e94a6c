#include "braidforge/calculus.hpp"

#include <functional>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bf {

namespace {

ScalarMat swap21(const ScalarMat &m, size_t n2) {
  ScalarMat s(n2 * n2, n2 * n2);
  for (size_t a = 0; a < n2; a++)
    for (size_t b = 0; b < n2; b++)
      for (size_t c = 0; c < n2; c++)
        for (size_t d = 0; d < n2; d++)
          s.at(a * n2 + b, c * n2 + d) = m.at(b * n2 + a, d * n2 + c);
  return s;
}

} // namespace

DiffOps::DiffOps(DiffVariant variant, const BigRPair &big,
                 const MatrixAlgebra &alg)
    : variant_(variant), n2_(big.n2), alg_(alg) {
  if (alg.u.size() != n2_)
    throw std::invalid_argument("DiffOps: algebra and big pair disagree");
  // barpartial braids through R^-1, partial through R_21
  coeff_ = variant == DiffVariant::barpartial ? big.Rbig.inverse()
                                              : swap21(big.Rbig, n2_);
}

NCPoly DiffOps::apply_word(size_t I, const Word &w) const {
  NCPoly out;
  if (w.empty()) return out;
  size_t J = n2_;
  for (size_t k = 0; k < n2_; k++)
    if (alg_.u[k] == w[0]) J = k;
  if (J == n2_)
    throw std::invalid_argument("DiffOps: word contains a foreign generator");
  Word rest = w.substr(1);
  if (I == J) out.add_term(rest, Scalar(1));
  for (size_t K = 0; K < n2_; K++)
    for (size_t L = 0; L < n2_; L++) {
      const Scalar &c = coeff_.at(I * n2_ + K, L * n2_ + J);
      if (c.is_zero()) continue;
      NCPoly sub = apply_word(L, rest);
      for (auto &[sw, sc] : sub.terms())
        out.add_term(Word(1, alg_.u[K]) + sw, sc * c);
    }
  return out;
}

NCPoly DiffOps::apply(size_t I, const NCPoly &p) const {
  NCPoly out;
  for (auto &[w, c] : p.terms()) out += apply_word(I, w).scaled(c);
  return alg_.pres.normal_form(out);
}

NCPoly DiffOps::apply_lowered(size_t I, const NCPoly &p,
                              const Metric &eta) const {
  NCPoly out;
  for (size_t A = 0; A < n2_; A++) {
    const Scalar &e = eta.lower.at(I, A);
    if (!e.is_zero()) out += apply(A, p).scaled(e);
  }
  return alg_.pres.normal_form(out);
}

ScalarMat braided_integer(int m, DiffVariant variant, const BigRPair &big,
                          const MatrixAlgebra &alg) {
  if (m < 1) throw std::invalid_argument("braided_integer: m >= 1");
  DiffOps ops(variant, big, alg);
  size_t n2 = big.n2;
  size_t cols = 1;
  for (int k = 0; k < m; k++) cols *= n2;
  ScalarMat mat(cols, cols); // rows encode (I, J2..Jm), columns (I1..Im)
  for (size_t col = 0; col < cols; col++) {
    Word w;
    size_t x = col;
    std::vector<size_t> idx(m);
    for (int k = m - 1; k >= 0; k--) { idx[k] = x % n2; x /= n2; }
    for (int k = 0; k < m; k++) w += alg.u[idx[k]];
    for (size_t I = 0; I < n2; I++) {
      // free recursion: coefficients read off free words, no normal form
      NCPoly d = ops.free_apply(I, w);
      for (auto &[dw, dc] : d.terms()) {
        size_t row = I;
        for (GenId g : dw) {
          size_t gi = 0;
          for (size_t k = 0; k < n2; k++)
            if (alg.u[k] == g) gi = k;
          row = row * n2 + gi;
        }
        mat.at(row, col) += dc;
      }
    }
  }
  return mat;
}

bool braided_integer_consistent(int m, DiffVariant variant, const BigRPair &big,
                                const MatrixAlgebra &alg, std::string *why) {
  DiffOps ops(variant, big, alg);
  ScalarMat mat = braided_integer(m, variant, big, alg);
  size_t n2 = big.n2;
  size_t cols = 1;
  for (int k = 0; k < m; k++) cols *= n2;
  for (size_t col = 0; col < cols; col++) {
    Word w;
    size_t x = col;
    std::vector<size_t> idx(m);
    for (int k = m - 1; k >= 0; k--) { idx[k] = x % n2; x /= n2; }
    for (int k = 0; k < m; k++) w += alg.u[idx[k]];
    for (size_t I = 0; I < n2; I++) {
      NCPoly direct = ops.apply(I, NCPoly::word(w));
      NCPoly from_matrix;
      for (size_t row = 0; row < cols; row++) {
        const Scalar &c = mat.at(row, col);
        if (c.is_zero()) continue;
        size_t y = row;
        std::vector<size_t> jdx(m);
        for (int k = m - 1; k >= 0; k--) { jdx[k] = y % n2; y /= n2; }
        if (jdx[0] != I) continue;
        Word jw;
        for (int k = 1; k < m; k++) jw += alg.u[jdx[k]];
        from_matrix.add_term(jw, c);
      }
      if (!alg.pres.is_zero_mod(direct - from_matrix)) {
        if (why)
          *why = "braided integer matrix disagrees with the recursion at m=" +
                 std::to_string(m) + " on " + alg.pres.str(NCPoly::word(w));
        return false;
      }
    }
  }
  return true;
}

std::vector<Word> basis_monomials(const Presentation &pres, int degree) {
  std::vector<Word> words;
  std::function<void(Word &)> rec = [&](Word &w) {
    if ((int)w.size() == degree) {
      words.push_back(w);
      return;
    }
    for (size_t g = 0; g < pres.num_gens(); g++) {
      if (!w.empty() && pres.rule_for(w.back(), (GenId)g)) continue;
      w.push_back((GenId)g);
      rec(w);
      w.pop_back();
    }
  };
  Word w;
  rec(w);
  return words;
}

bool check_operator_relations(DiffVariant variant, const BigRPair &big,
                              const MatrixAlgebra &alg, const Metric *eta,
                              const Scalar *lambda, int maxdeg,
                              std::string *why, Exec mode) {
  DiffOps ops(variant, big, alg);
  size_t n2 = big.n2;
  std::vector<Word> mons;
  for (int d = 0; d <= maxdeg; d++) {
    auto more = basis_monomials(alg.pres, d);
    mons.insert(mons.end(), more.begin(), more.end());
  }
  ScalarMat rinv = big.Rbig.inverse();
  Scalar l2 = lambda ? *lambda * *lambda : Scalar(1);
  bool bar = variant == DiffVariant::barpartial;
  auto run_monomial = [&](const Word &w) -> std::string {
    NCPoly mono = NCPoly::word(w);
    // upper-index vector relations: d^I d^J = R'^{IJ}_{KL} d^L d^K
    for (size_t I = 0; I < n2; I++)
      for (size_t J = 0; J < n2; J++) {
        NCPoly lhs = ops.apply(I, ops.apply(J, mono));
        NCPoly rhs;
        for (size_t K = 0; K < n2; K++)
          for (size_t L = 0; L < n2; L++) {
            const Scalar &rp = big.rprime(I, J, K, L);
            if (rp.is_zero()) continue;
            rhs += ops.apply(L, ops.apply(K, mono)).scaled(rp);
          }
        if (!alg.pres.is_zero_mod(lhs - rhs))
          return "vector relations fail on " + alg.pres.str(mono);
      }
    if (eta && lambda) {
      // lowered covector relations: d_I d_J = d_L d_K R'^{KL}_{IJ}
      for (size_t I = 0; I < n2; I++)
        for (size_t J = 0; J < n2; J++) {
          NCPoly lhs =
              ops.apply_lowered(I, ops.apply_lowered(J, mono, *eta), *eta);
          NCPoly rhs;
          for (size_t K = 0; K < n2; K++)
            for (size_t L = 0; L < n2; L++) {
              const Scalar &rp = big.rprime(K, L, I, J);
              if (rp.is_zero()) continue;
              rhs +=
                  ops.apply_lowered(L, ops.apply_lowered(K, mono, *eta), *eta)
                      .scaled(rp);
            }
          if (!alg.pres.is_zero_mod(lhs - rhs))
            return "lowered covector relations fail on " + alg.pres.str(mono);
        }
      // lowered braided Leibniz:
      //   bar:      d_I(u_J w) - lambda^2  R^{LK}_{IJ}        u_K d_L(w) = eta_{IJ} w
      //   unbarred: d_I(u_J w) - lambda^-2 (R^-1)^{KL}_{JI}   u_K d_L(w) = eta_{IJ} w
      for (size_t I = 0; I < n2; I++)
        for (size_t J = 0; J < n2; J++) {
          NCPoly lhs = ops.apply_lowered(I, NCPoly::gen(alg.u[J]) * mono, *eta);
          NCPoly rhs = mono.scaled(eta->lower.at(I, J));
          for (size_t K = 0; K < n2; K++)
            for (size_t L = 0; L < n2; L++) {
              Scalar c = bar ? l2 * big.Rbig.at(L * n2 + K, I * n2 + J)
                             : rinv.at(K * n2 + L, J * n2 + I) / l2;
              if (c.is_zero()) continue;
              rhs += (NCPoly::gen(alg.u[K]) * ops.apply_lowered(L, mono, *eta))
                         .scaled(c);
            }
          if (!alg.pres.is_zero_mod(lhs - rhs))
            return "lowered Leibniz rule fails on " + alg.pres.str(mono);
        }
    }
    return std::string();
  };
  std::vector<std::string> results(mons.size());
  if (mode == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long i = 0; i < (long)mons.size(); i++)
      results[i] = run_monomial(mons[i]);
  } else {
    for (size_t i = 0; i < mons.size(); i++) results[i] = run_monomial(mons[i]);
  }
  for (auto &r : results)
    if (!r.empty()) {
      if (why) *why = r;
      return false;
    }
  return true;
}

std::vector<NCPoly> lower_index(const std::vector<NCPoly> &upper,
                                const Metric &eta) {
  size_t n = upper.size();
  std::vector<NCPoly> out(n);
  for (size_t I = 0; I < n; I++)
    for (size_t A = 0; A < n; A++) {
      const Scalar &e = eta.lower.at(I, A);
      if (!e.is_zero()) out[I] += upper[A].scaled(e);
    }
  return out;
}

std::vector<NCPoly> raise_index(const std::vector<NCPoly> &lower,
                                const Metric &eta) {
  size_t n = lower.size();
  ScalarMat inv = eta.lower.inverse();
  std::vector<NCPoly> out(n);
  for (size_t A = 0; A < n; A++)
    for (size_t I = 0; I < n; I++) {
      const Scalar &e = inv.at(A, I);
      if (!e.is_zero()) out[A] += lower[I].scaled(e);
    }
  return out;
}

MetricFromDet metric_from_det(const MatrixAlgebra &alg, const NCPoly &det,
                              const BigRPair &big,
                              const ScalarMat *expected_upper) {
  MetricFromDet rep;
  if (det.degree() != 2)
    throw std::invalid_argument("metric_from_det: determinant must be quadratic");
  DiffOps ops(DiffVariant::barpartial, big, alg);
  size_t n2 = big.n2;
  ScalarMat m(n2, n2);
  for (size_t I = 0; I < n2; I++)
    for (size_t J = 0; J < n2; J++) {
      NCPoly v = ops.apply(I, ops.apply(J, det));
      if (v.is_zero()) continue;
      if (v.size() != 1 || !v.terms().begin()->first.empty())
        throw std::domain_error(
            "metric_from_det: double derivative is not constant");
      m.at(I, J) = v.terms().begin()->second;
    }
  // rescale so that the ((0,0),(1,1)) entry is 1
  size_t corner = big.n2 - 1;
  if (m.at(0, corner).is_zero())
    throw std::domain_error("metric_from_det: rescaling entry is zero");
  rep.scale = m.at(0, corner);
  rep.matrix = m.scaled(rep.scale.inv());
  if (expected_upper) {
    rep.matches = rep.matrix == *expected_upper;
    if (!rep.matches) {
      rep.why = "entries differing from the candidate:";
      for (size_t I = 0; I < n2; I++)
        for (size_t J = 0; J < n2; J++)
          if (!(rep.matrix.at(I, J) == expected_upper->at(I, J)))
            rep.why += " (" + std::to_string(I) + "," + std::to_string(J) +
                       "): " + rep.matrix.at(I, J).str() + " vs " +
                       expected_upper->at(I, J).str() + ";";
    }
  }
  return rep;
}

} // namespace bf
