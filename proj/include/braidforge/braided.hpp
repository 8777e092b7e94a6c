#pragma once

#include "braidforge/rmatrix.hpp"

namespace bf {

enum class AlgKind { frt, braided_matrix, bar_matrix, covector, vector_alg };
enum class Signature { minkowski, euclidean };
enum class StatKind { mult_B, add_B, mult_barA, add_barA };

// A quadratic algebra presented on a matrix (or vector) of generators.
struct MatrixAlgebra {
  Presentation pres;
  std::vector<GenId> u; // flat index order: u[i*n+j] resp. u[I]
  size_t n = 0;         // matrix dimension; vector algebras store n^2 here
  AlgKind kind = AlgKind::frt;
};

// frt / braided_matrix / bar_matrix from the defining matrix equations;
// throws on orientation or local-confluence failure.
MatrixAlgebra build_algebra(AlgKind kind, const RMatrix &R,
                            const std::string &family = "u");
// covector algebra u1 u2 = u2 u1 R' resp. vector algebra P1 P2 = R' P2 P1
MatrixAlgebra build_covector_algebra(const BigRPair &big,
                                     const std::string &family = "x");
MatrixAlgebra build_vector_algebra(const BigRPair &big,
                                   const std::string &family = "P");

struct TensorSquare {
  Presentation pres;
  std::vector<GenId> map0, map1; // base generator id -> square generator id
};

// braided square with primed copy and the cited cross statistics
TensorSquare build_tensor_square(const MatrixAlgebra &alg, StatKind stats,
                                 const RMatrix &R);
// ordinary tensor power with commuting copies (for Hopf-algebra checks)
TensorSquare build_commuting_square(const Presentation &base);
struct TensorCube {
  Presentation pres;
  std::vector<GenId> map0, map1, map2;
};
TensorCube build_commuting_cube(const Presentation &base);

// coproduct data over the base presentation: Delta g = sum of left x right
struct CoproductSpec {
  std::map<GenId, std::vector<std::pair<NCPoly, NCPoly>>> delta;
  std::map<GenId, Scalar> counit;
  std::map<GenId, NCPoly> antipode; // optional per generator
  // the barA multiplicative counit satisfies the counit axiom on generators
  // but does not extend as an algebra character over the relations
  bool counit_algebra_map = true;
};

CoproductSpec additive_coproduct(const MatrixAlgebra &alg);
CoproductSpec multiplicative_coproduct(const MatrixAlgebra &alg);

// Delta extended as an algebra map into the square
NCPoly delta_on_poly(const NCPoly &p, const CoproductSpec &spec,
                     const TensorSquare &sq);
Scalar counit_on_poly(const NCPoly &p, const CoproductSpec &spec);
// S as an antihomomorphism from the antipode table
NCPoly antipode_on_poly(const NCPoly &p, const CoproductSpec &spec);

// Delta is an algebra homomorphism on all defining relations, counits vanish
// on relations, and (when supplied) the antipode identities hold on
// generators.
bool check_coproduct(const MatrixAlgebra &alg, const CoproductSpec &spec,
                     const TensorSquare &sq, std::string *why = nullptr);

struct StarSpec {
  std::map<GenId, NCPoly> images;
};
StarSpec hermitian_star(const MatrixAlgebra &alg);      // u^i_j* = u^j_i
StarSpec euclidean_star(const MatrixAlgebra &alg);      // (a,b,c,d)* = (d,-c/q,-qb,a)

// (a) star maps relations to relations, (b) Delta o * = (* x *) o tau o
// Delta on generators, (c) eps o * = conj o eps
bool check_star(const MatrixAlgebra &alg, const StarSpec &star,
                const CoproductSpec &spec, const TensorSquare &sq,
                std::string *why = nullptr);

// ad - q^2 cb resp. ad - q cb; verifies centrality, group-likeness and
// bosonic behaviour in the multiplicative square
NCPoly braided_det(const MatrixAlgebra &alg, Signature sig, const RMatrix &R,
                   std::string *why = nullptr);

struct CoordsReport {
  bool ok = false;
  std::string why;
  NCPoly t, x, y, z;
};
// self-adjoint coordinates, inverse change of basis, and the exact length
CoordsReport coords_and_length(const MatrixAlgebra &alg, Signature sig);

// det = (1+q^-2)^{-1} eta^{IJ} u_J u_I modulo the relations
bool check_metric_relation(const Metric &eta, const NCPoly &det,
                           const MatrixAlgebra &alg);

} // namespace bf
