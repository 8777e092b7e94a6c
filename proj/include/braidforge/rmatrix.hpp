#pragma once

#include "braidforge/matrix.hpp"
#include "braidforge/polymat.hpp"

#include <array>
#include <optional>
#include <string>

#include <json.hpp>

namespace bf {

// execution mode for the data-parallel check kernels
enum class Exec { serial, parallel };

// R in M_n ⊗ M_n; entries R^{ij}_{kl} with rows (i,j) and columns (k,l).
class RMatrix {
public:
  RMatrix(size_t n, ScalarMat m); // checks shape and invertibility
  size_t dim() const { return n_; }
  const ScalarMat &mat() const { return m_; }
  const Scalar &entry(size_t i, size_t j, size_t k, size_t l) const {
    return m_.at(i * n_ + j, k * n_ + l);
  }

  RMatrix r21() const;     // R21^{ij}_{kl} = R^{ji}_{lk}
  RMatrix inverse() const; // as an n² x n² matrix
  RMatrix evaluated(const mpq_class &q0) const;
  RMatrix scaled(const Scalar &c) const;

  // the standard Jones-polynomial / SL_q(2) solution
  static RMatrix standard_sl2();
  static RMatrix identity(size_t n);

  static RMatrix from_json(const nlohmann::json &j);
  static RMatrix load(const std::string &path);
  nlohmann::ordered_json to_json() const;

private:
  size_t n_;
  ScalarMat m_;
};

struct QybeReport {
  bool holds = false;
  // failing component (i1,i2,i3),(j1,j2,j3) if any
  std::optional<std::array<size_t, 6>> witness;
};
QybeReport check_qybe(const RMatrix &R, Exec mode = Exec::parallel);

struct HeckeReport {
  bool holds = false;
  std::pair<Scalar, Scalar> eigenvalues; // (q, -q^-1) when it holds
};
// (PR - q)(PR + q^-1) = 0 at formal q; with q0, after substituting q -> q0
HeckeReport check_hecke(const RMatrix &R);
HeckeReport check_hecke_at(const RMatrix &R, const mpq_class &q0);

// Multi-index matrices R', R of the braided covector form, rows (K,L) and
// columns (I,J) flattened as K*n^2+L: relations u_I u_J = u_L u_K R'^{KL}_{IJ},
// additive statistics u'_I u_J = u_L u'_K R^{KL}_{IJ}.
struct BigRPair {
  size_t n = 0, n2 = 0;
  ScalarMat Rprime, Rbig;

  const Scalar &rprime(size_t K, size_t L, size_t I, size_t J) const {
    return Rprime.at(K * n2 + L, I * n2 + J);
  }
  const Scalar &rbig(size_t K, size_t L, size_t I, size_t J) const {
    return Rbig.at(K * n2 + L, I * n2 + J);
  }
  // reinterpret a big matrix as an n^2-dimensional R-matrix (for QYBE checks)
  RMatrix rbig_as_rmatrix() const;
};

enum class MatrixKind { braided_matrix, bar_matrix };

// Solve the linear systems equating coefficients of ordered words in the
// defining relations and the additive statistics.
BigRPair derive_big_pair(const RMatrix &R, MatrixKind kind);

// Cross matrix T of the multiplicative statistics: u'_I u_J = T[(I,J),(L,K)]
// u_L u'_K, from (mult_B) resp. (mult_barA).
ScalarMat mult_statistics_matrix(const RMatrix &R, MatrixKind kind);

struct Metric {
  ScalarMat upper, lower; // lower * upper^T = id
};
Metric make_metric(const ScalarMat &upper);

// quantum metric identities: eta_{IA} Rinv^{A}{}_J{}^K{}_L = lambda^2
// R^A{}_I{}^K{}_L eta_{AJ} and its partner; returns the designated square
// root; throws with a violated component on inconsistency.
Scalar infer_lambda(const BigRPair &big, const Metric &eta);

// numeric pre-check point for exact identities (fails fast, then exact)
inline mpq_class precheck_q0() { return mpq_class(7, 5); }

} // namespace bf
