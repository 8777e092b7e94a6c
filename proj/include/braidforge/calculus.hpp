#pragma once

#include "braidforge/braided.hpp"

namespace bf {

enum class DiffVariant { partial, barpartial };

// Braided partial derivatives acting on normal-ordered polynomials of a
// covector algebra, defined by the commutation relations
//   partial_1 u_2 - u_2 R_21 partial_1 = id
//   barpartial_1 u_2 - u_2 R^-1 barpartial_1 = id
class DiffOps {
public:
  DiffOps(DiffVariant variant, const BigRPair &big, const MatrixAlgebra &alg);

  // upper-index derivative applied to a polynomial (normal-formed result)
  NCPoly apply(size_t I, const NCPoly &p) const;
  // lowered derivative eta_{IA} partial^A
  NCPoly apply_lowered(size_t I, const NCPoly &p, const Metric &eta) const;
  // recursion on a free word without normal forms (braided-integer extraction)
  NCPoly free_apply(size_t I, const Word &w) const { return apply_word(I, w); }

  DiffVariant variant() const { return variant_; }
  size_t dim() const { return n2_; }

private:
  NCPoly apply_word(size_t I, const Word &w) const;

  DiffVariant variant_;
  size_t n2_;
  const MatrixAlgebra &alg_;
  ScalarMat coeff_; // braiding coefficients c[(K,L),(I,J)]
};

// the braided integer matrix [m; .] of rank m: coefficients of
// barpartial^I (u_{I1}...u_{Im}) = u_{J2}...u_{Jm} [m]^{I J2..Jm}_{I1..Im},
// read off on free words
ScalarMat braided_integer(int m, DiffVariant variant, const BigRPair &big,
                          const MatrixAlgebra &alg);

// compare the matrix form against the recursion on all algebra monomials of
// degree m
bool braided_integer_consistent(int m, DiffVariant variant, const BigRPair &big,
                                const MatrixAlgebra &alg,
                                std::string *why = nullptr);

// operator identities on all normal-ordered monomials of degree <= maxdeg:
// vector relations for the derivatives, and the braided Leibniz rules (both
// the upper-index form and the lowered form when a metric is supplied)
bool check_operator_relations(DiffVariant variant, const BigRPair &big,
                              const MatrixAlgebra &alg, const Metric *eta,
                              const Scalar *lambda, int maxdeg = 4,
                              std::string *why = nullptr,
                              Exec mode = Exec::parallel);

// raise / lower an index by the metric; round trips to the identity
std::vector<NCPoly> lower_index(const std::vector<NCPoly> &upper,
                                const Metric &eta);
std::vector<NCPoly> raise_index(const std::vector<NCPoly> &lower,
                                const Metric &eta);

struct MetricFromDet {
  ScalarMat matrix;   // rescaled so that entry ((0,0),(1,1)) is 1
  Scalar scale;       // the removed constant
  bool matches = false;
  std::string why;
};
// extract the quantum metric from a degree-2 determinant by double braided
// differentiation and compare against a candidate
MetricFromDet metric_from_det(const MatrixAlgebra &alg, const NCPoly &det,
                              const BigRPair &big,
                              const ScalarMat *expected_upper);

// all irreducible (normal-ordered) words of the given degree
std::vector<Word> basis_monomials(const Presentation &pres, int degree);

} // namespace bf
