#include "braidforge/braided.hpp"

#include <stdexcept>

namespace bf {

namespace {

std::vector<GenId> add_matrix_gens(Presentation &pres, const std::string &fam,
                                   size_t n, int copy, bool abcd,
                                   const std::string &suffix = "") {
  static const char *letters[4] = {"a", "b", "c", "d"};
  std::vector<GenId> ids;
  for (size_t i = 0; i < n; i++)
    for (size_t j = 0; j < n; j++) {
      std::string name;
      if (abcd && n == 2)
        name = std::string(letters[i * 2 + j]) + suffix;
      else
        name = fam + "[" + std::to_string(i) + ";" + std::to_string(j) + "]" +
               suffix;
      ids.push_back(pres.add_generator(name, fam, {(int)i, (int)j}, copy));
    }
  return ids;
}

std::vector<GenId> add_vector_gens(Presentation &pres, const std::string &fam,
                                   size_t n2, int copy,
                                   const std::string &suffix = "") {
  std::vector<GenId> ids;
  for (size_t I = 0; I < n2; I++)
    ids.push_back(pres.add_generator(fam + "[" + std::to_string(I) + "]" + suffix,
                                     fam, {(int)I}, copy));
  return ids;
}

void require_confluent(const Presentation &pres, const std::string &what) {
  auto fails = pres.local_confluence_failures();
  if (!fails.empty()) {
    std::string msg = what + ": local confluence fails on " +
                      pres.str(NCPoly::word(fails[0].word)) + " (" +
                      pres.str(fails[0].left) + " vs " +
                      pres.str(fails[0].right) + ")";
    throw std::domain_error(msg);
  }
}

} // namespace

MatrixAlgebra build_algebra(AlgKind kind, const RMatrix &R,
                            const std::string &family) {
  if (!check_qybe(R).holds)
    throw std::invalid_argument("build_algebra: R fails the QYBE");
  size_t n = R.dim();
  MatrixAlgebra alg;
  alg.n = n;
  alg.kind = kind;
  alg.u = add_matrix_gens(alg.pres, family, n, 0, true);
  PolyMat u = PolyMat::gens(alg.u, n);
  PolyMat u1 = u.slot(1, 2), u2 = u.slot(2, 2);
  PolyMat Rm = PolyMat::scalar(R.mat());
  PolyMat R21 = PolyMat::scalar(R.r21().mat());
  PolyMat lhs(0, 0), rhs(0, 0);
  switch (kind) {
  case AlgKind::frt:
    alg.pres.tag = "A(R)";
    lhs = Rm * u1 * u2;
    rhs = u2 * u1 * Rm;
    break;
  case AlgKind::braided_matrix:
    alg.pres.tag = "B(R)";
    lhs = R21 * u1 * Rm * u2;
    rhs = u2 * R21 * u1 * Rm;
    break;
  case AlgKind::bar_matrix:
    alg.pres.tag = "barA(R)";
    lhs = R21 * u1 * u2;
    rhs = u2 * u1 * Rm;
    break;
  default:
    throw std::invalid_argument("build_algebra: use the covector/vector builders");
  }
  alg.pres.add_relations(equation_relations(lhs, rhs));
  require_confluent(alg.pres, alg.pres.tag);
  for (GenId g : alg.u) alg.pres.grading[g] = 1;
  return alg;
}

MatrixAlgebra build_covector_algebra(const BigRPair &big,
                                     const std::string &family) {
  MatrixAlgebra alg;
  alg.n = big.n2;
  alg.kind = AlgKind::covector;
  alg.pres.tag = "V^(R',R)";
  alg.u = add_vector_gens(alg.pres, family, big.n2, 0);
  std::vector<NCPoly> rels;
  for (size_t I = 0; I < big.n2; I++)
    for (size_t J = 0; J < big.n2; J++) {
      NCPoly rel = NCPoly::word(Word{alg.u[I], alg.u[J]});
      for (size_t K = 0; K < big.n2; K++)
        for (size_t L = 0; L < big.n2; L++)
          rel.add_term(Word{alg.u[L], alg.u[K]}, -big.rprime(K, L, I, J));
      if (!rel.is_zero()) rels.push_back(rel);
    }
  alg.pres.add_relations(rels);
  require_confluent(alg.pres, alg.pres.tag);
  for (GenId g : alg.u) alg.pres.grading[g] = 1;
  return alg;
}

MatrixAlgebra build_vector_algebra(const BigRPair &big,
                                   const std::string &family) {
  MatrixAlgebra alg;
  alg.n = big.n2;
  alg.kind = AlgKind::vector_alg;
  alg.pres.tag = "V(R',R)";
  alg.u = add_vector_gens(alg.pres, family, big.n2, 0);
  std::vector<NCPoly> rels;
  // P^I P^J = R'^{IJ}_{KL} P^L P^K
  for (size_t I = 0; I < big.n2; I++)
    for (size_t J = 0; J < big.n2; J++) {
      NCPoly rel = NCPoly::word(Word{alg.u[I], alg.u[J]});
      for (size_t K = 0; K < big.n2; K++)
        for (size_t L = 0; L < big.n2; L++)
          rel.add_term(Word{alg.u[L], alg.u[K]}, -big.rprime(I, J, K, L));
      if (!rel.is_zero()) rels.push_back(rel);
    }
  alg.pres.add_relations(rels);
  require_confluent(alg.pres, alg.pres.tag);
  for (GenId g : alg.u) alg.pres.grading[g] = -1;
  return alg;
}

TensorSquare build_tensor_square(const MatrixAlgebra &alg, StatKind stats,
                                 const RMatrix &R) {
  TensorSquare sq;
  sq.pres.tag = alg.pres.tag + " square";
  size_t ngens = alg.pres.num_gens();
  sq.map0.resize(ngens);
  sq.map1.resize(ngens);
  for (size_t g = 0; g < ngens; g++) {
    auto &info = alg.pres.gen((GenId)g);
    sq.map0[g] = sq.pres.add_generator(info.name, info.family, info.idx, 0);
  }
  for (size_t g = 0; g < ngens; g++) {
    auto &info = alg.pres.gen((GenId)g);
    sq.map1[g] = sq.pres.add_generator(info.name + "'", info.family, info.idx, 1);
  }
  for (auto &[k, rule] : alg.pres.rules()) {
    NCPoly rel = NCPoly::word(rule.lhs) - rule.rhs;
    sq.pres.add_relation(translate(rel, sq.map0), rule.core);
    sq.pres.add_relation(translate(rel, sq.map1), rule.core);
  }
  // cross statistics
  size_t n = alg.n;
  std::vector<GenId> u0, u1v;
  for (GenId g : alg.u) u0.push_back(sq.map0[g]);
  for (GenId g : alg.u) u1v.push_back(sq.map1[g]);
  PolyMat u = PolyMat::gens(u0, n), v = PolyMat::gens(u1v, n);
  PolyMat a1 = u.slot(1, 2), a2 = u.slot(2, 2);
  PolyMat b1 = v.slot(1, 2);
  PolyMat Rm = PolyMat::scalar(R.mat());
  PolyMat R21 = PolyMat::scalar(R.r21().mat());
  PolyMat Rinv = PolyMat::scalar(R.inverse().mat());
  PolyMat lhs(0, 0), rhs(0, 0);
  switch (stats) {
  case StatKind::mult_B:
    lhs = Rinv * b1 * Rm * a2;
    rhs = a2 * Rinv * b1 * Rm;
    break;
  case StatKind::add_B:
    lhs = Rinv * b1 * Rm * a2;
    rhs = a2 * R21 * b1 * Rm;
    break;
  case StatKind::mult_barA:
    lhs = b1 * a2;
    rhs = a2 * Rinv * b1;
    break;
  case StatKind::add_barA:
    lhs = b1 * a2;
    rhs = Rm * a2 * b1 * Rm;
    break;
  }
  sq.pres.add_relations(equation_relations(lhs, rhs));
  require_confluent(sq.pres, sq.pres.tag);
  return sq;
}

TensorSquare build_commuting_square(const Presentation &base) {
  TensorSquare sq;
  sq.pres.tag = base.tag + " (x) 2";
  size_t ngens = base.num_gens();
  sq.map0.resize(ngens);
  sq.map1.resize(ngens);
  for (size_t g = 0; g < ngens; g++) {
    auto &info = base.gen((GenId)g);
    sq.map0[g] = sq.pres.add_generator(info.name, info.family, info.idx, 0);
  }
  for (size_t g = 0; g < ngens; g++) {
    auto &info = base.gen((GenId)g);
    sq.map1[g] = sq.pres.add_generator(info.name + "'", info.family, info.idx, 1);
  }
  for (auto &[k, rule] : base.rules()) {
    NCPoly rel = NCPoly::word(rule.lhs) - rule.rhs;
    sq.pres.add_relation(translate(rel, sq.map0), rule.core);
    sq.pres.add_relation(translate(rel, sq.map1), rule.core);
  }
  for (size_t g = 0; g < ngens; g++)
    for (size_t h = 0; h < ngens; h++)
      sq.pres.add_relation(NCPoly::word(Word{sq.map1[g], sq.map0[h]}) -
                               NCPoly::word(Word{sq.map0[h], sq.map1[g]}),
                           true);
  return sq;
}

TensorCube build_commuting_cube(const Presentation &base) {
  TensorCube cube;
  cube.pres.tag = base.tag + " (x) 3";
  size_t ngens = base.num_gens();
  cube.map0.resize(ngens);
  cube.map1.resize(ngens);
  cube.map2.resize(ngens);
  const char *suffix[3] = {"", "'", "''"};
  std::vector<GenId> *maps[3] = {&cube.map0, &cube.map1, &cube.map2};
  for (int c = 0; c < 3; c++)
    for (size_t g = 0; g < ngens; g++) {
      auto &info = base.gen((GenId)g);
      (*maps[c])[g] =
          cube.pres.add_generator(info.name + suffix[c], info.family, info.idx, c);
    }
  for (int c = 0; c < 3; c++)
    for (auto &[k, rule] : base.rules()) {
      NCPoly rel = NCPoly::word(rule.lhs) - rule.rhs;
      cube.pres.add_relation(translate(rel, *maps[c]), rule.core);
    }
  for (int c1 = 0; c1 < 3; c1++)
    for (int c2 = c1 + 1; c2 < 3; c2++)
      for (size_t g = 0; g < ngens; g++)
        for (size_t h = 0; h < ngens; h++)
          cube.pres.add_relation(
              NCPoly::word(Word{(*maps[c2])[g], (*maps[c1])[h]}) -
                  NCPoly::word(Word{(*maps[c1])[h], (*maps[c2])[g]}),
              true);
  return cube;
}

CoproductSpec additive_coproduct(const MatrixAlgebra &alg) {
  CoproductSpec spec;
  for (GenId g : alg.u) {
    spec.delta[g] = {{NCPoly::gen(g), NCPoly::one()},
                     {NCPoly::one(), NCPoly::gen(g)}};
    spec.counit[g] = Scalar(0);
    spec.antipode[g] = -NCPoly::gen(g);
  }
  return spec;
}

CoproductSpec multiplicative_coproduct(const MatrixAlgebra &alg) {
  CoproductSpec spec;
  size_t n = alg.n;
  for (size_t i = 0; i < n; i++)
    for (size_t j = 0; j < n; j++) {
      GenId g = alg.u[i * n + j];
      std::vector<std::pair<NCPoly, NCPoly>> terms;
      for (size_t a = 0; a < n; a++)
        terms.push_back(
            {NCPoly::gen(alg.u[i * n + a]), NCPoly::gen(alg.u[a * n + j])});
      spec.delta[g] = terms;
      spec.counit[g] = Scalar(i == j ? 1 : 0);
    }
  spec.counit_algebra_map = alg.kind != AlgKind::bar_matrix;
  return spec;
}

NCPoly delta_on_poly(const NCPoly &p, const CoproductSpec &spec,
                     const TensorSquare &sq) {
  NCPoly out;
  for (auto &[w, c] : p.terms()) {
    NCPoly t(c);
    for (GenId g : w) {
      auto it = spec.delta.find(g);
      if (it == spec.delta.end())
        throw std::invalid_argument("coproduct undefined on a generator");
      NCPoly dg;
      for (auto &[l, r] : it->second)
        dg += translate(l, sq.map0) * translate(r, sq.map1);
      t = t * dg;
    }
    out += t;
  }
  return out;
}

Scalar counit_on_poly(const NCPoly &p, const CoproductSpec &spec) {
  Scalar out(0);
  for (auto &[w, c] : p.terms()) {
    Scalar t = c;
    for (GenId g : w) {
      auto it = spec.counit.find(g);
      if (it == spec.counit.end())
        throw std::invalid_argument("counit undefined on a generator");
      t = t * it->second;
    }
    out += t;
  }
  return out;
}

NCPoly antipode_on_poly(const NCPoly &p, const CoproductSpec &spec) {
  NCPoly out;
  for (auto &[w, c] : p.terms()) {
    NCPoly t(c);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      auto img = spec.antipode.find(*it);
      if (img == spec.antipode.end())
        throw std::invalid_argument("antipode undefined on a generator");
      t = t * img->second;
    }
    out += t;
  }
  return out;
}

bool check_coproduct(const MatrixAlgebra &alg, const CoproductSpec &spec,
                     const TensorSquare &sq, std::string *why) {
  for (auto &[k, rule] : alg.pres.rules()) {
    NCPoly rel = NCPoly::word(rule.lhs) - rule.rhs;
    NCPoly img = sq.pres.normal_form(delta_on_poly(rel, spec, sq));
    if (!img.is_zero()) {
      if (why)
        *why = "Delta not a homomorphism on " + alg.pres.str(rel) +
               ": residue " + sq.pres.str(img);
      return false;
    }
    if (spec.counit_algebra_map && !counit_on_poly(rel, spec).is_zero()) {
      if (why) *why = "counit does not vanish on " + alg.pres.str(rel);
      return false;
    }
  }
  // counit axiom on generators: (eps x id) Delta g = g = (id x eps) Delta g
  for (GenId g : alg.u) {
    auto it = spec.delta.find(g);
    if (it == spec.delta.end()) continue;
    NCPoly left, right;
    for (auto &[l, r] : it->second) {
      left += r.scaled(counit_on_poly(l, spec));
      right += l.scaled(counit_on_poly(r, spec));
    }
    if (!alg.pres.is_zero_mod(left - NCPoly::gen(g)) ||
        !alg.pres.is_zero_mod(right - NCPoly::gen(g))) {
      if (why) *why = "counit axiom fails on " + alg.pres.name(g);
      return false;
    }
  }
  if (!spec.antipode.empty()) {
    for (GenId g : alg.u) {
      auto it = spec.delta.find(g);
      if (it == spec.delta.end() || !spec.antipode.count(g)) continue;
      NCPoly left, right;
      for (auto &[l, r] : it->second) {
        left += antipode_on_poly(l, spec) * r;
        right += l * antipode_on_poly(r, spec);
      }
      NCPoly target(spec.counit.at(g));
      if (!alg.pres.is_zero_mod(left - target) ||
          !alg.pres.is_zero_mod(right - target)) {
        if (why) *why = "antipode identity fails on " + alg.pres.name(g);
        return false;
      }
    }
  }
  return true;
}

StarSpec hermitian_star(const MatrixAlgebra &alg) {
  StarSpec st;
  size_t n = alg.n;
  for (size_t i = 0; i < n; i++)
    for (size_t j = 0; j < n; j++)
      st.images[alg.u[i * n + j]] = NCPoly::gen(alg.u[j * n + i]);
  return st;
}

StarSpec euclidean_star(const MatrixAlgebra &alg) {
  if (alg.n != 2)
    throw std::invalid_argument("euclidean star is the n=2 standard form");
  StarSpec st;
  GenId a = alg.u[0], b = alg.u[1], c = alg.u[2], d = alg.u[3];
  st.images[a] = NCPoly::gen(d);
  st.images[b] = NCPoly::gen(c, -Scalar::q(-1));
  st.images[c] = NCPoly::gen(b, -Scalar::q());
  st.images[d] = NCPoly::gen(a);
  return st;
}

namespace {

NCPoly star_on_poly(const NCPoly &p, const StarSpec &star) {
  NCPoly out;
  for (auto &[w, c] : p.terms()) {
    NCPoly t(c.conj());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      t = t * star.images.at(*it);
    out += t;
  }
  return out;
}

} // namespace

bool check_star(const MatrixAlgebra &alg, const StarSpec &star,
                const CoproductSpec &spec, const TensorSquare &sq,
                std::string *why) {
  // (a) relations map to relations
  for (auto &[k, rule] : alg.pres.rules()) {
    NCPoly rel = NCPoly::word(rule.lhs) - rule.rhs;
    if (!alg.pres.is_zero_mod(star_on_poly(rel, star))) {
      if (why) *why = "star image of " + alg.pres.str(rel) + " is not a relation";
      return false;
    }
  }
  // (b) Delta o * = (* x *) o tau o Delta on generators
  for (GenId g : alg.u) {
    NCPoly lhs = delta_on_poly(star_on_poly(NCPoly::gen(g), star), spec, sq);
    NCPoly rhs;
    for (auto &[l, r] : spec.delta.at(g))
      rhs += translate(star_on_poly(r, star), sq.map0) *
             translate(star_on_poly(l, star), sq.map1);
    if (!sq.pres.is_zero_mod(lhs - rhs)) {
      if (why) *why = "Delta not compatible with star on " + alg.pres.name(g);
      return false;
    }
  }
  // (c) counit: eps(g*) = conj(eps(g))
  for (GenId g : alg.u) {
    Scalar lhs = counit_on_poly(star_on_poly(NCPoly::gen(g), star), spec);
    if (lhs != spec.counit.at(g).conj()) {
      if (why) *why = "counit not star-compatible on " + alg.pres.name(g);
      return false;
    }
  }
  return true;
}

NCPoly braided_det(const MatrixAlgebra &alg, Signature sig, const RMatrix &R,
                   std::string *why) {
  if (alg.n != 2)
    throw std::invalid_argument("braided_det: n=2 standard instance only");
  GenId a = alg.u[0], b = alg.u[1], c = alg.u[2], d = alg.u[3];
  Scalar coeff = sig == Signature::minkowski ? Scalar::q(2) : Scalar::q(1);
  NCPoly det = NCPoly::word(Word{a, d}) - NCPoly::word(Word{c, b}, coeff);
  for (GenId g : alg.u) {
    NCPoly comm = det * NCPoly::gen(g) - NCPoly::gen(g) * det;
    if (!alg.pres.is_zero_mod(comm)) {
      if (why) *why = "determinant fails to be central against " + alg.pres.name(g);
      throw std::domain_error(why ? *why : "determinant not central");
    }
  }
  // group-like and bosonic with respect to the multiplicative statistics
  StatKind mult = alg.kind == AlgKind::braided_matrix ? StatKind::mult_B
                                                      : StatKind::mult_barA;
  TensorSquare sq = build_tensor_square(alg, mult, R);
  CoproductSpec spec = multiplicative_coproduct(alg);
  NCPoly grouplike = delta_on_poly(det, spec, sq) -
                     translate(det, sq.map0) * translate(det, sq.map1);
  if (!sq.pres.is_zero_mod(grouplike)) {
    if (why) *why = "determinant is not group-like";
    throw std::domain_error(why ? *why : "determinant not group-like");
  }
  // The barA multiplicative statistics are not a braiding; its determinant
  // commutes across the square only up to the statistics scale q.
  Scalar scale = sig == Signature::minkowski ? Scalar(1) : Scalar::q();
  NCPoly det0 = translate(det, sq.map0);
  for (GenId g : alg.u) {
    NCPoly gp = NCPoly::gen(sq.map1[g]);
    if (!sq.pres.is_zero_mod(det0 * gp - (gp * det0).scaled(scale))) {
      if (why) *why = "determinant is not bosonic";
      throw std::domain_error(why ? *why : "determinant not bosonic");
    }
  }
  return det;
}

CoordsReport coords_and_length(const MatrixAlgebra &alg, Signature sig) {
  CoordsReport rep;
  if (alg.n != 2) {
    rep.why = "n=2 standard instance only";
    return rep;
  }
  GenId a = alg.u[0], b = alg.u[1], c = alg.u[2], d = alg.u[3];
  Scalar half = Scalar(1) / Scalar(2);
  Scalar q = Scalar::q(), qi = Scalar::q(-1);
  Scalar i2inv = Scalar(1) / (Scalar(2) * Scalar::i());
  NCPoly A = NCPoly::gen(a), B = NCPoly::gen(b), C = NCPoly::gen(c),
         D = NCPoly::gen(d);
  NCPoly det;
  NCPoly expected;
  if (sig == Signature::minkowski) {
    rep.t = (A.scaled(qi) + D.scaled(q)).scaled(half);
    rep.x = (B + C).scaled(half);
    rep.y = (B - C).scaled(i2inv);
    rep.z = (D - A).scaled(half);
    det = A * D - (C * B).scaled(Scalar::q(2));
    Scalar q2p1 = Scalar::q(2) + Scalar(1);
    Scalar c_t2 = Scalar(4) * Scalar::q(2) / (q2p1 * q2p1);
    Scalar c_z2 = Scalar(2) * (Scalar::q(4) + Scalar(1)) * Scalar::q(2) / (q2p1 * q2p1);
    Scalar r = (Scalar::q(2) - Scalar(1)) / q2p1;
    Scalar c_tz = r * r * Scalar(2) * Scalar::q();
    expected = (rep.t * rep.t).scaled(c_t2) - (rep.x * rep.x).scaled(Scalar::q(2)) -
               (rep.y * rep.y).scaled(Scalar::q(2)) - (rep.z * rep.z).scaled(c_z2) +
               (rep.t * rep.z).scaled(c_tz);
  } else {
    rep.t = (A - D).scaled(i2inv);
    rep.x = (C - B.scaled(q)).scaled(half);
    rep.y = (C + B.scaled(q)).scaled(i2inv);
    rep.z = (A + D).scaled(half);
    det = A * D - (C * B).scaled(q);
    Scalar c_tz = (Scalar(1) + Scalar::q(2)) * half;
    expected = (rep.t * rep.t).scaled(c_tz) + rep.x * rep.x + rep.y * rep.y +
               (rep.z * rep.z).scaled(c_tz);
  }
  // the linear change of basis must invert
  std::vector<const NCPoly *> coords = {&rep.t, &rep.x, &rep.y, &rep.z};
  ScalarMat m(4, 4);
  for (size_t r = 0; r < 4; r++)
    for (size_t cidx = 0; cidx < 4; cidx++)
      m.at(r, cidx) = coords[r]->coeff(Word(1, alg.u[cidx]));
  if (!m.invertible()) {
    rep.why = "coordinate change of basis is singular";
    return rep;
  }
  NCPoly diff = alg.pres.normal_form(det - expected);
  if (!diff.is_zero()) {
    rep.why = "length disagrees: residue " + alg.pres.str(diff);
    return rep;
  }
  rep.ok = true;
  return rep;
}

bool check_metric_relation(const Metric &eta, const NCPoly &det,
                           const MatrixAlgebra &alg) {
  size_t n2 = alg.n * alg.n;
  Scalar norm = (Scalar(1) + Scalar::q(-2)).inv();
  NCPoly sum;
  for (size_t I = 0; I < n2; I++)
    for (size_t J = 0; J < n2; J++)
      sum.add_term(Word{alg.u[J], alg.u[I]}, eta.upper.at(I, J) * norm);
  return alg.pres.is_zero_mod(det - sum);
}

} // namespace bf
