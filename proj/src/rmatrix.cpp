#include "braidforge/rmatrix.hpp"

#include <fstream>
#include <stdexcept>

namespace bf {

RMatrix::RMatrix(size_t n, ScalarMat m) : n_(n), m_(std::move(m)) {
  if (n_ < 1 || m_.rows() != n_ * n_ || m_.cols() != n_ * n_)
    throw std::invalid_argument("RMatrix: bad shape");
  if (!m_.invertible())
    throw std::invalid_argument("RMatrix: singular matrix rejected");
}

RMatrix RMatrix::r21() const {
  ScalarMat s(n_ * n_, n_ * n_);
  for (size_t i = 0; i < n_; i++)
    for (size_t j = 0; j < n_; j++)
      for (size_t k = 0; k < n_; k++)
        for (size_t l = 0; l < n_; l++)
          s.at(i * n_ + j, k * n_ + l) = entry(j, i, l, k);
  return RMatrix(n_, std::move(s));
}

RMatrix RMatrix::inverse() const { return RMatrix(n_, m_.inverse()); }

RMatrix RMatrix::evaluated(const mpq_class &q0) const {
  return RMatrix(n_, m_.evaluated(q0));
}

RMatrix RMatrix::scaled(const Scalar &c) const {
  return RMatrix(n_, m_.scaled(c));
}

RMatrix RMatrix::standard_sl2() {
  ScalarMat m(4, 4);
  Scalar q = Scalar::q();
  m.at(0, 0) = q;
  m.at(1, 1) = Scalar(1);
  m.at(1, 2) = q - Scalar::q(-1);
  m.at(2, 2) = Scalar(1);
  m.at(3, 3) = q;
  return RMatrix(2, std::move(m));
}

RMatrix RMatrix::identity(size_t n) {
  return RMatrix(n, ScalarMat::identity(n * n));
}

RMatrix RMatrix::from_json(const nlohmann::json &j) {
  size_t n = j.at("n").get<size_t>();
  ScalarMat m(n * n, n * n);
  for (auto &[key, val] : j.at("entries").items()) {
    size_t idx[4];
    size_t pos = 0;
    std::string s = key;
    for (int k = 0; k < 4; k++) {
      size_t comma = s.find(',', pos);
      std::string part =
          k < 3 ? s.substr(pos, comma - pos) : s.substr(pos);
      idx[k] = std::stoul(part);
      pos = comma + 1;
    }
    if (idx[0] >= n || idx[1] >= n || idx[2] >= n || idx[3] >= n)
      throw std::invalid_argument("R-matrix file: index out of range: " + key);
    m.at(idx[0] * n + idx[1], idx[2] * n + idx[3]) =
        Scalar::parse(val.get<std::string>());
  }
  return RMatrix(n, std::move(m));
}

RMatrix RMatrix::load(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open R-matrix file: " + path);
  nlohmann::json j;
  in >> j;
  return from_json(j);
}

nlohmann::ordered_json RMatrix::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n_;
  nlohmann::ordered_json entries;
  for (size_t i = 0; i < n_; i++)
    for (size_t jj = 0; jj < n_; jj++)
      for (size_t k = 0; k < n_; k++)
        for (size_t l = 0; l < n_; l++) {
          const Scalar &e = entry(i, jj, k, l);
          if (!e.is_zero())
            entries[std::to_string(i) + "," + std::to_string(jj) + "," +
                    std::to_string(k) + "," + std::to_string(l)] = e.str();
        }
  j["entries"] = entries;
  return j;
}

// ------------------------------------------------------------------- QYBE

namespace {

// one component of R12 R13 R23 - R23 R13 R12 over arbitrary entry accessors
template <typename E>
bool qybe_component_zero(const E &r, size_t n, size_t i1, size_t i2, size_t i3,
                         size_t j1, size_t j2, size_t j3) {
  using V = decltype(r(0, 0, 0, 0));
  V lhs{}, rhs{};
  for (size_t a = 0; a < n; a++)
    for (size_t b = 0; b < n; b++)
      for (size_t c = 0; c < n; c++) {
        // (R12 R13 R23)^{i1 i2 i3}_{j1 j2 j3}
        lhs += r(i1, i2, a, b) * r(a, i3, j1, c) * r(b, c, j2, j3);
        // (R23 R13 R12)^{i1 i2 i3}_{j1 j2 j3}
        rhs += r(i2, i3, a, b) * r(i1, b, c, j3) * r(c, a, j1, j2);
      }
  return lhs == rhs;
}

} // namespace

QybeReport check_qybe(const RMatrix &R, Exec mode) {
  size_t n = R.dim();
  // probabilistic pre-check at q = 7/5 short-circuits failures
  bool numeric_ok = true;
  std::array<size_t, 6> suspect{};
  {
    ScalarMat num = R.mat().evaluated(precheck_q0());
    auto e = [&](size_t i, size_t j, size_t k, size_t l) -> GaussQ {
      const Scalar &s = num.at(i * n + j, k * n + l);
      return s.is_zero() ? GaussQ() : s.num().coeff(0);
    };
    for (size_t i1 = 0; i1 < n && numeric_ok; i1++)
      for (size_t i2 = 0; i2 < n && numeric_ok; i2++)
        for (size_t i3 = 0; i3 < n && numeric_ok; i3++)
          for (size_t j1 = 0; j1 < n && numeric_ok; j1++)
            for (size_t j2 = 0; j2 < n && numeric_ok; j2++)
              for (size_t j3 = 0; j3 < n; j3++)
                if (!qybe_component_zero(e, n, i1, i2, i3, j1, j2, j3)) {
                  numeric_ok = false;
                  suspect = {i1, i2, i3, j1, j2, j3};
                  break;
                }
  }
  auto exact = [&](size_t i, size_t j, size_t k, size_t l) -> Scalar {
    return R.entry(i, j, k, l);
  };
  if (!numeric_ok) {
    // confirm the witness exactly
    QybeReport rep;
    rep.holds = false;
    rep.witness = suspect;
    if (qybe_component_zero(exact, n, suspect[0], suspect[1], suspect[2],
                            suspect[3], suspect[4], suspect[5]))
      throw std::logic_error("qybe pre-check witness not confirmed");
    return rep;
  }
  size_t total = 1;
  for (int k = 0; k < 6; k++) total *= n;
  std::vector<char> ok(total, 1);
  auto run = [&](size_t t) {
    size_t x = t;
    size_t j3 = x % n; x /= n;
    size_t j2 = x % n; x /= n;
    size_t j1 = x % n; x /= n;
    size_t i3 = x % n; x /= n;
    size_t i2 = x % n; x /= n;
    size_t i1 = x;
    ok[t] = qybe_component_zero(exact, n, i1, i2, i3, j1, j2, j3);
  };
  if (mode == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long t = 0; t < (long)total; t++) run((size_t)t);
  } else {
    for (size_t t = 0; t < total; t++) run(t);
  }
  QybeReport rep;
  rep.holds = true;
  for (size_t t = 0; t < total; t++)
    if (!ok[t]) {
      rep.holds = false;
      size_t x = t;
      std::array<size_t, 6> w{};
      for (int k = 5; k >= 0; k--) { w[k] = x % n; x /= n; }
      rep.witness = w;
      break;
    }
  return rep;
}

HeckeReport check_hecke(const RMatrix &R) {
  size_t n = R.dim();
  ScalarMat pr = ScalarMat::flip(n) * R.mat();
  ScalarMat id = ScalarMat::identity(n * n);
  ScalarMat res =
      (pr - id.scaled(Scalar::q())) * (pr + id.scaled(Scalar::q(-1)));
  HeckeReport rep;
  rep.holds = res.is_zero();
  rep.eigenvalues = {Scalar::q(), -Scalar::q(-1)};
  return rep;
}

HeckeReport check_hecke_at(const RMatrix &R, const mpq_class &q0) {
  size_t n = R.dim();
  ScalarMat pr = ScalarMat::flip(n) * R.mat();
  ScalarMat id = ScalarMat::identity(n * n);
  ScalarMat res =
      (pr - id.scaled(Scalar::q())) * (pr + id.scaled(Scalar::q(-1)));
  HeckeReport rep;
  rep.holds = res.evaluated(q0).is_zero();
  rep.eigenvalues = {Scalar(GaussQ(q0)), -Scalar(GaussQ(mpq_class(1) / q0))};
  return rep;
}

// ------------------------------------------------------- big pair solving

RMatrix BigRPair::rbig_as_rmatrix() const {
  return RMatrix(n2, Rbig);
}

namespace {

struct FreeCovectors {
  Presentation pres;
  std::vector<GenId> u, up; // unprimed, primed, flat multi-index order
  size_t n;

  explicit FreeCovectors(size_t dim) : n(dim) {
    for (size_t i = 0; i < n; i++)
      for (size_t j = 0; j < n; j++)
        u.push_back(pres.add_generator(
            "u[" + std::to_string(i) + ";" + std::to_string(j) + "]", "u",
            {(int)i, (int)j}, 0));
    for (size_t i = 0; i < n; i++)
      for (size_t j = 0; j < n; j++)
        up.push_back(pres.add_generator(
            "u'[" + std::to_string(i) + ";" + std::to_string(j) + "]", "u",
            {(int)i, (int)j}, 1));
  }
};

std::vector<Word> pair_words(const std::vector<GenId> &a,
                             const std::vector<GenId> &b) {
  std::vector<Word> words;
  words.reserve(a.size() * b.size());
  for (GenId x : a)
    for (GenId y : b) {
      Word w;
      w.push_back(x);
      w.push_back(y);
      words.push_back(w);
    }
  return words;
}

// column words (u_L, u_K) indexed by column (K,L): covector convention
std::vector<Word> reversed_pair_words(const std::vector<GenId> &a,
                                      const std::vector<GenId> &b) {
  size_t m = a.size();
  std::vector<Word> words(m * m);
  for (size_t K = 0; K < m; K++)
    for (size_t L = 0; L < m; L++) {
      Word w;
      w.push_back(a[L]);
      w.push_back(b[K]);
      words[K * m + L] = w;
    }
  return words;
}

// rows of the solve are equations indexed (I,J); reorder T so that the
// output matrix has rows (K,L) and columns (I,J)
ScalarMat to_big_matrix(const ScalarMat &t, size_t n2) {
  ScalarMat big(n2 * n2, n2 * n2);
  for (size_t I = 0; I < n2; I++)
    for (size_t J = 0; J < n2; J++)
      for (size_t K = 0; K < n2; K++)
        for (size_t L = 0; L < n2; L++)
          big.at(K * n2 + L, I * n2 + J) = t.at(I * n2 + J, K * n2 + L);
  return big;
}

} // namespace

BigRPair derive_big_pair(const RMatrix &R, MatrixKind kind) {
  if (!check_qybe(R).holds)
    throw std::invalid_argument("derive_big_pair: R fails the QYBE");
  size_t n = R.dim(), n2 = n * n;
  FreeCovectors fc(n);
  PolyMat Rm = PolyMat::scalar(R.mat());
  PolyMat R21 = PolyMat::scalar(R.r21().mat());
  PolyMat Rinv = PolyMat::scalar(R.inverse().mat());
  PolyMat u = PolyMat::gens(fc.u, n), v = PolyMat::gens(fc.up, n);
  PolyMat u1 = u.slot(1, 2), u2 = u.slot(2, 2);
  PolyMat v1 = v.slot(1, 2);

  PolyMat rel_lhs(0, 0), rel_rhs(0, 0), st_lhs(0, 0), st_rhs(0, 0);
  if (kind == MatrixKind::braided_matrix) {
    rel_lhs = R21 * u1 * Rm * u2;
    rel_rhs = u2 * R21 * u1 * Rm;
    st_lhs = Rinv * v1 * Rm * u2;
    st_rhs = u2 * R21 * v1 * Rm;
  } else {
    rel_lhs = R21 * u1 * u2;
    rel_rhs = u2 * u1 * Rm;
    st_lhs = v1 * u2;
    st_rhs = Rm * u2 * v1 * Rm;
  }

  auto rows_rel = pair_words(fc.u, fc.u);
  auto cols_rel = reversed_pair_words(fc.u, fc.u);
  auto rows_st = pair_words(fc.up, fc.u);
  auto cols_st = reversed_pair_words(fc.u, fc.up);

  BigRPair big;
  big.n = n;
  big.n2 = n2;
  try {
    big.Rprime = to_big_matrix(solve_rewrite(rel_lhs, rel_rhs, rows_rel, cols_rel), n2);
    big.Rbig = to_big_matrix(solve_rewrite(st_lhs, st_rhs, rows_st, cols_st), n2);
  } catch (const std::domain_error &e) {
    throw std::domain_error(std::string("derive_big_pair: ") + e.what());
  }
  if (!big.Rprime.invertible() || !big.Rbig.invertible())
    throw std::domain_error("derive_big_pair: derived matrix is singular");
  return big;
}

ScalarMat mult_statistics_matrix(const RMatrix &R, MatrixKind kind) {
  size_t n = R.dim(), n2 = n * n;
  FreeCovectors fc(n);
  PolyMat Rm = PolyMat::scalar(R.mat());
  PolyMat Rinv = PolyMat::scalar(R.inverse().mat());
  PolyMat u = PolyMat::gens(fc.u, n), v = PolyMat::gens(fc.up, n);
  PolyMat u2 = u.slot(2, 2), v1 = v.slot(1, 2);
  PolyMat lhs(0, 0), rhs(0, 0);
  if (kind == MatrixKind::braided_matrix) {
    lhs = Rinv * v1 * Rm * u2;
    rhs = u2 * Rinv * v1 * Rm;
  } else {
    lhs = v1 * u2;
    rhs = u2 * Rinv * v1;
  }
  return to_big_matrix(solve_rewrite(lhs, rhs, pair_words(fc.up, fc.u),
                                     reversed_pair_words(fc.u, fc.up)),
                       n2);
}

// --------------------------------------------------------------- metrics

Metric make_metric(const ScalarMat &upper) {
  return Metric{upper, upper.transposed().inverse()};
}

Scalar infer_lambda(const BigRPair &big, const Metric &eta) {
  size_t n2 = big.n2;
  ScalarMat rinv = big.Rbig.inverse();
  auto rb = [&](size_t A, size_t B, size_t C, size_t D) -> const Scalar & {
    return big.Rbig.at(A * n2 + B, C * n2 + D);
  };
  auto ri = [&](size_t A, size_t B, size_t C, size_t D) -> const Scalar & {
    return rinv.at(A * n2 + B, C * n2 + D);
  };
  std::optional<Scalar> lambda2;
  for (size_t I = 0; I < n2; I++)
    for (size_t J = 0; J < n2; J++)
      for (size_t K = 0; K < n2; K++)
        for (size_t L = 0; L < n2; L++) {
          Scalar lhs(0), rhs(0);
          for (size_t A = 0; A < n2; A++) {
            lhs += eta.lower.at(I, A) * ri(A, K, J, L);
            rhs += rb(A, K, I, L) * eta.lower.at(A, J);
          }
          if (rhs.is_zero()) {
            if (!lhs.is_zero())
              throw std::domain_error(
                  "metric identity inconsistent at component (" +
                  std::to_string(I) + "," + std::to_string(J) + "," +
                  std::to_string(K) + "," + std::to_string(L) + ")");
            continue;
          }
          Scalar cand = lhs / rhs;
          if (!lambda2) lambda2 = cand;
          else if (!(*lambda2 == cand))
            throw std::domain_error("metric identities give inconsistent "
                                    "lambda^2 values");
        }
  if (!lambda2)
    throw std::domain_error("metric identities do not determine lambda");
  // partner identity with lambda^-2
  Scalar l2 = *lambda2;
  for (size_t I = 0; I < n2; I++)
    for (size_t J = 0; J < n2; J++)
      for (size_t K = 0; K < n2; K++)
        for (size_t L = 0; L < n2; L++) {
          Scalar lhs(0), rhs(0);
          for (size_t A = 0; A < n2; A++) {
            lhs += eta.lower.at(K, A) * rb(I, A, J, L);
            rhs += ri(I, A, J, K) * eta.lower.at(A, L);
          }
          if (!(lhs * l2 == rhs))
            throw std::domain_error(
                "second metric identity fails at component (" +
                std::to_string(I) + "," + std::to_string(J) + "," +
                std::to_string(K) + "," + std::to_string(L) + ")");
        }
  auto root = l2.sqrt();
  if (!root)
    throw std::domain_error("lambda^2 = " + l2.str() +
                            " has no designated square root; supply lambda "
                            "in the configuration");
  return *root;
}

} // namespace bf
