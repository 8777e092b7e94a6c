#pragma once

#include "braidforge/gauss.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace bf {

// Laurent polynomial in one formal variable with Gaussian-rational
// coefficients.  No zero coefficients are ever stored.
class Laurent {
public:
  using Map = std::map<int64_t, GaussQ>;

  Laurent() = default;
  Laurent(const GaussQ &c) { if (!c.is_zero()) coeffs_[0] = c; }
  Laurent(long n) : Laurent(GaussQ(n)) {}
  static Laurent q_power(int64_t k, const GaussQ &c = GaussQ(1)) {
    Laurent p;
    if (!c.is_zero()) p.coeffs_[k] = c;
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
           coeffs_.begin()->second.is_one();
  }
  bool is_monomial() const { return coeffs_.size() == 1; }

  int64_t min_deg() const; // 0 for the zero polynomial
  int64_t max_deg() const;
  const Map &coeffs() const { return coeffs_; }
  GaussQ coeff(int64_t k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? GaussQ() : it->second;
  }
  GaussQ lead_coeff() const;  // coefficient at max_deg
  GaussQ trail_coeff() const; // coefficient at min_deg

  void add_term(int64_t k, const GaussQ &c);

  Laurent operator-() const;
  Laurent operator+(const Laurent &o) const;
  Laurent operator-(const Laurent &o) const;
  Laurent operator*(const Laurent &o) const;
  Laurent &operator+=(const Laurent &o);

  bool operator==(const Laurent &o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Laurent &o) const { return !(*this == o); }
  bool operator<(const Laurent &o) const { return coeffs_ < o.coeffs_; }

  Laurent conj() const;              // i -> -i, variable fixed
  Laurent shifted(int64_t k) const;  // * q^k
  Laurent scaled(const GaussQ &c) const;
  Laurent powers_scaled(int64_t m) const; // q^k -> q^{m k}

  GaussQ eval(const mpq_class &q0) const; // exact substitution, q0 != 0

  // Division for ordinary polynomials (min_deg >= 0, divisor nonzero);
  // throws if the division is not exact.
  Laurent divided_exact(const Laurent &d) const;

  // Monic gcd of two ordinary polynomials.
  static Laurent gcd(Laurent a, Laurent b);

private:
  Map coeffs_;
};

} // namespace bf
