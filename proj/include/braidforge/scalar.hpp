#pragma once

#include "braidforge/laurent.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace bf {

struct parse_error : std::runtime_error {
  size_t pos;
  parse_error(const std::string &msg, size_t p)
      : std::runtime_error(msg + " at position " + std::to_string(p)), pos(p) {}
};

// Exact rational function in q over the Gaussian rationals, kept canonical:
// num/den are ordinary polynomials with gcd 1, den != 0, and den's
// lowest-degree coefficient is 1.
class Scalar {
public:
  Scalar() : num_(), den_(GaussQ(1)) {}
  Scalar(long n) : num_(GaussQ(n)), den_(GaussQ(1)) {}
  Scalar(const GaussQ &c) : num_(c), den_(GaussQ(1)) {}
  Scalar(const Laurent &num, const Laurent &den);

  static Scalar q(int64_t k = 1) { return Scalar(Laurent::q_power(k), Laurent(GaussQ(1))); }
  static Scalar i() { return Scalar(GaussQ::i()); }

  const Laurent &num() const { return num_; }
  const Laurent &den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  // c * q^k with polynomial denominator 1
  bool is_monomial() const { return num_.is_monomial() && den_.is_one(); }

  Scalar operator-() const;
  Scalar operator+(const Scalar &o) const;
  Scalar operator-(const Scalar &o) const;
  Scalar operator*(const Scalar &o) const;
  Scalar operator/(const Scalar &o) const; // throws on zero divisor
  Scalar inv() const { return Scalar(1) / *this; }
  Scalar &operator+=(const Scalar &o) { *this = *this + o; return *this; }
  Scalar &operator*=(const Scalar &o) { *this = *this * o; return *this; }

  Scalar conj() const; // i -> -i, q fixed (q treated as real)

  bool operator==(const Scalar &o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Scalar &o) const { return !(*this == o); }
  bool operator<(const Scalar &o) const {
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
  }

  // exact substitution; throws std::domain_error on a pole
  GaussQ eval(const mpq_class &q0) const;

  // q -> q^m on both numerator and denominator (m >= 1)
  Scalar powers_scaled(int64_t m) const;

  // exact square root if num and den are perfect squares (leading
  // coefficient of the root chosen with positive real part)
  std::optional<Scalar> sqrt() const;

  std::string str() const;
  static Scalar parse(const std::string &text);

private:
  void normalize();
  Laurent num_, den_;
};

Scalar s_int(long n);

} // namespace bf
