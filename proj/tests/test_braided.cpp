#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidforge/braided.hpp"
#include "braidforge/calculus.hpp"

using namespace bf;

static Scalar S(const std::string &s) { return Scalar::parse(s); }
static const RMatrix &rsl2() {
  static RMatrix r = RMatrix::standard_sl2();
  return r;
}

TEST_CASE("relations equal the displayed sets verbatim") {
  auto alg = build_algebra(AlgKind::braided_matrix, rsl2());
  auto &p = alg.pres;
  for (auto rel : {"b a - q^2 a b", "c a - q^-2 a c", "d a - a d",
                   "b c - c b - (1 - q^-2) a (d - a)",
                   "d b - b d - (1 - q^-2) a b", "c d - d c - (1 - q^-2) c a"})
    CHECK(p.is_zero_mod(p.parse(rel)));
  CHECK(p.rules().size() == 6);

  auto bar = build_algebra(AlgKind::bar_matrix, rsl2());
  auto &pb = bar.pres;
  for (auto rel : {"b a - q a b", "c a - q^-1 a c", "d a - a d",
                   "b c - c b - (q - q^-1) a d", "d b - q^-1 b d",
                   "d c - q c d"})
    CHECK(pb.is_zero_mod(pb.parse(rel)));
  CHECK(pb.rules().size() == 6);
}

TEST_CASE("braided matrix with identity R is commutative") {
  auto alg = build_algebra(AlgKind::braided_matrix, RMatrix::identity(2));
  for (auto &[k, rule] : alg.pres.rules()) {
    Word sorted = rule.lhs;
    std::sort(sorted.begin(), sorted.end());
    CHECK(rule.rhs == NCPoly::word(sorted));
  }
}

TEST_CASE("covector form presents the same algebra") {
  auto alg = build_algebra(AlgKind::braided_matrix, rsl2());
  auto cov = build_covector_algebra(
      derive_big_pair(rsl2(), MatrixKind::braided_matrix));
  REQUIRE(cov.pres.num_gens() == 4);
  for (auto &[k, rule] : alg.pres.rules()) {
    NCPoly rel = NCPoly::word(rule.lhs) - rule.rhs; // ids match flat order
    CHECK(cov.pres.is_zero_mod(translate(rel, cov.u)));
  }
  CHECK(cov.pres.rules().size() == alg.pres.rules().size());
}

TEST_CASE("tensor squares reproduce the displayed statistics") {
  auto alg = build_algebra(AlgKind::braided_matrix, rsl2());
  auto add = build_tensor_square(alg, StatKind::add_B, rsl2());
  for (auto rel : {"a' a - q^2 a a'", "a' b - b a'",
                   "a' c - q^2 c a' - (q^2 - 1) a c'", "c' a - a c'",
                   "a' d - d a' - (q^2 - 1) b c' - q^-2 (q^2 - 1)^2 a a'",
                   "b' a - q^2 a b' - (q^2 - 1) b a'", "b' b - q^2 b b'"})
    CHECK(add.pres.is_zero_mod(add.pres.parse(rel)));

  auto mult = build_tensor_square(alg, StatKind::mult_B, rsl2());
  for (auto rel : {"a' a - a a' - (1 - q^2) b c'", "a' b - b a'",
                   "a' c - c a' - (1 - q^2)(d - a) c'",
                   "a' d - d a' - (1 - q^-2) b c'",
                   "b' a - a b' - (1 - q^2) b (d' - a')", "b' b - q^2 b b'"})
    CHECK(mult.pres.is_zero_mod(mult.pres.parse(rel)));

  auto bar = build_algebra(AlgKind::bar_matrix, rsl2());
  auto mbar = build_tensor_square(bar, StatKind::mult_barA, rsl2());
  for (auto rel : {"a' a - q^-1 a a' - (q^-1 - q) b c'", "a' b - b a'",
                   "a' c - q^-1 c a' - (q^-1 - q) d c'", "a' d - d a'",
                   "b' a - q^-1 a b' - (q^-1 - q) b d'", "b' b - b b'",
                   "b' c - q^-1 c b' - (q^-1 - q) d d'"})
    CHECK(mbar.pres.is_zero_mod(mbar.pres.parse(rel)));

  auto abar = build_tensor_square(bar, StatKind::add_barA, rsl2());
  for (auto rel : {"a' a - q^2 a a'", "a' b - q b a'",
                   "a' c - q c a' - (q^2 - 1) a c'",
                   "a' d - d a' - (q - q^-1) b c'",
                   "b' a - q a b' - (q^2 - 1) b a'", "b' b - q^2 b b'",
                   "b' c - c b' - (q - q^-1)(d a' + a d') - (q - q^-1)^2 b c'"})
    CHECK(abar.pres.is_zero_mod(abar.pres.parse(rel)));

  // both copies embed: square dimension profile at degree 2
  CHECK(add.pres.dimension_profile(2) == std::vector<int64_t>{8, 36});
}

TEST_CASE("coproducts are algebra homomorphisms") {
  auto alg = build_algebra(AlgKind::braided_matrix, rsl2());
  auto add_sq = build_tensor_square(alg, StatKind::add_B, rsl2());
  auto mult_sq = build_tensor_square(alg, StatKind::mult_B, rsl2());
  std::string why;
  CHECK(check_coproduct(alg, additive_coproduct(alg), add_sq, &why));
  CHECK(check_coproduct(alg, multiplicative_coproduct(alg), mult_sq, &why));
  // additive coproduct against the multiplicative square fails
  CHECK(!check_coproduct(alg, additive_coproduct(alg), mult_sq, &why));

  auto bar = build_algebra(AlgKind::bar_matrix, rsl2());
  auto badd = build_tensor_square(bar, StatKind::add_barA, rsl2());
  auto bmult = build_tensor_square(bar, StatKind::mult_barA, rsl2());
  CHECK(check_coproduct(bar, additive_coproduct(bar), badd, &why));
  CHECK(check_coproduct(bar, multiplicative_coproduct(bar), bmult, &why));
}

TEST_CASE("matrix product and sum of copies obey the relations") {
  // u'' = u u' in the multiplicative square resp. u'' = u + u' in the
  // additive square satisfies the defining relations
  for (auto kind : {AlgKind::braided_matrix, AlgKind::bar_matrix}) {
    auto alg = build_algebra(kind, rsl2());
    bool braided = kind == AlgKind::braided_matrix;
    auto mult = build_tensor_square(
        alg, braided ? StatKind::mult_B : StatKind::mult_barA, rsl2());
    auto add = build_tensor_square(
        alg, braided ? StatKind::add_B : StatKind::add_barA, rsl2());
    PolyMat Rm = PolyMat::scalar(rsl2().mat());
    PolyMat R21 = PolyMat::scalar(rsl2().r21().mat());
    auto check_relations = [&](const TensorSquare &sq, const PolyMat &upp) {
      PolyMat u1 = upp.slot(1, 2), u2 = upp.slot(2, 2);
      PolyMat lhs(0, 0), rhs(0, 0);
      if (braided) {
        lhs = R21 * u1 * Rm * u2;
        rhs = u2 * R21 * u1 * Rm;
      } else {
        lhs = R21 * u1 * u2;
        rhs = u2 * u1 * Rm;
      }
      for (auto &rel : equation_relations(lhs, rhs))
        if (!sq.pres.is_zero_mod(rel)) return false;
      return true;
    };
    // product copy
    {
      std::vector<GenId> u0, u1v;
      for (GenId g : alg.u) u0.push_back(mult.map0[g]);
      for (GenId g : alg.u) u1v.push_back(mult.map1[g]);
      PolyMat uu = PolyMat::gens(u0, 2) * PolyMat::gens(u1v, 2);
      CHECK(check_relations(mult, uu));
    }
    // sum copy
    {
      std::vector<GenId> u0, u1v;
      for (GenId g : alg.u) u0.push_back(add.map0[g]);
      for (GenId g : alg.u) u1v.push_back(add.map1[g]);
      PolyMat us = PolyMat::gens(u0, 2) + PolyMat::gens(u1v, 2);
      CHECK(check_relations(add, us));
    }
  }
}

TEST_CASE("additive coassociativity on generators") {
  auto alg = build_algebra(AlgKind::braided_matrix, rsl2());
  auto spec = additive_coproduct(alg);
  // Delta extended to a one-term polynomial as an algebra map, returned as
  // coefficient-weighted (left, right) pairs
  auto delta_terms = [&](const NCPoly &p) {
    std::vector<std::pair<NCPoly, NCPoly>> out = {{NCPoly::one(), NCPoly::one()}};
    REQUIRE(p.size() == 1);
    auto &[w, c] = *p.terms().begin();
    for (GenId g : w) {
      std::vector<std::pair<NCPoly, NCPoly>> next;
      for (auto &[l, r] : out)
        for (auto &[dl, dr] : spec.delta.at(g))
          next.push_back({l * dl, r * dr});
      out = next;
    }
    for (auto &[l, r] : out) l = l.scaled(c);
    return out;
  };
  auto canon = [&](std::vector<std::array<NCPoly, 3>> triples) {
    std::multiset<std::string> s;
    for (auto &t : triples)
      s.insert(alg.pres.str(t[0]) + " (x) " + alg.pres.str(t[1]) + " (x) " +
               alg.pres.str(t[2]));
    return s;
  };
  for (GenId g : alg.u) {
    std::vector<std::array<NCPoly, 3>> left, right;
    for (auto &[l, r] : spec.delta.at(g)) {
      for (auto &[l2, r2] : delta_terms(l)) left.push_back({l2, r2, r});
      for (auto &[l2, r2] : delta_terms(r)) right.push_back({l, l2, r2});
    }
    // both sides are literally u x 1 x 1 + 1 x u x 1 + 1 x 1 x u
    CHECK(canon(left) == canon(right));
  }
}

TEST_CASE("braided determinants") {
  auto alg = build_algebra(AlgKind::braided_matrix, rsl2());
  std::string why;
  NCPoly det = braided_det(alg, Signature::minkowski, rsl2(), &why);
  CHECK(det == alg.pres.parse("a d - q^2 c b"));
  auto bar = build_algebra(AlgKind::bar_matrix, rsl2());
  NCPoly edet = braided_det(bar, Signature::euclidean, rsl2(), &why);
  CHECK(edet == bar.pres.parse("a d - q c b"));
  // q = 1 limit is the classical determinant ad - cb
  NCPoly cl = det.mapped([](const Scalar &c) { return Scalar(c.eval(1)); });
  CHECK(cl == alg.pres.parse("a d - c b"));
}

TEST_CASE("coordinates and lengths") {
  auto alg = build_algebra(AlgKind::braided_matrix, rsl2());
  auto rep = coords_and_length(alg, Signature::minkowski);
  CHECK(rep.ok);
  auto bar = build_algebra(AlgKind::bar_matrix, rsl2());
  auto erep = coords_and_length(bar, Signature::euclidean);
  CHECK(erep.ok);
  // q = 1 limits of the Minkowski coefficients: t^2 - x^2 - y^2 - z^2
  CHECK(S("4q^2 (q^2+1)^-2").eval(1) == GaussQ(1));
  CHECK(S("2(q^4+1)q^2 (q^2+1)^-2").eval(1) == GaussQ(1));
  CHECK(S("((q^2-1)/(q^2+1))^2 2q").eval(1) == GaussQ(0));
}

TEST_CASE("stars") {
  auto alg = build_algebra(AlgKind::braided_matrix, rsl2());
  auto add_sq = build_tensor_square(alg, StatKind::add_B, rsl2());
  auto spec = additive_coproduct(alg);
  std::string why;
  CHECK(check_star(alg, hermitian_star(alg), spec, add_sq, &why));
  auto bar = build_algebra(AlgKind::bar_matrix, rsl2());
  auto badd = build_tensor_square(bar, StatKind::add_barA, rsl2());
  CHECK(check_star(bar, euclidean_star(bar), additive_coproduct(bar), badd, &why));
  // the Euclidean star on BM_q(2) is not a star structure there
  CHECK(!check_star(alg, euclidean_star(alg), spec, add_sq, &why));
  // star involution on generators
  for (auto st : {hermitian_star(alg)}) {
    for (GenId g : alg.u) {
      NCPoly img = st.images.at(g);
      NCPoly twice;
      for (auto &[w, c] : img.terms()) {
        NCPoly t(c.conj());
        for (auto it = w.rbegin(); it != w.rend(); ++it) t = t * st.images.at(*it);
        twice += t;
      }
      CHECK(alg.pres.is_zero_mod(twice - NCPoly::gen(g)));
    }
  }
}

TEST_CASE("grading checks") {
  auto alg = build_algebra(AlgKind::braided_matrix, rsl2());
  std::map<GenId, long> grades;
  for (GenId g : alg.u) grades[g] = 1;
  CHECK(alg.pres.grading_homogeneous(grades));
  grades[alg.u[1]] = 2;
  CHECK(!alg.pres.grading_homogeneous(grades));
}

TEST_CASE("metric relation against the determinant") {
  auto alg = build_algebra(AlgKind::braided_matrix, rsl2());
  auto big = derive_big_pair(rsl2(), MatrixKind::braided_matrix);
  std::string why;
  NCPoly det = braided_det(alg, Signature::minkowski, rsl2(), &why);
  auto mfd = metric_from_det(alg, det, big, nullptr);
  Metric eta = make_metric(mfd.matrix);
  CHECK(check_metric_relation(eta, det, alg));
  // flipped-sign eta fails
  ScalarMat bad = mfd.matrix;
  bad.at(1, 2) = -bad.at(1, 2);
  CHECK(!check_metric_relation(make_metric(bad), det, alg));
}
