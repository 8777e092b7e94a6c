#include "braidforge/laurent.hpp"

#include <stdexcept>

namespace bf {

int64_t Laurent::min_deg() const {
  return coeffs_.empty() ? 0 : coeffs_.begin()->first;
}

int64_t Laurent::max_deg() const {
  return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

GaussQ Laurent::lead_coeff() const {
  return coeffs_.empty() ? GaussQ() : coeffs_.rbegin()->second;
}

GaussQ Laurent::trail_coeff() const {
  return coeffs_.empty() ? GaussQ() : coeffs_.begin()->second;
}

void Laurent::add_term(int64_t k, const GaussQ &c) {
  if (c.is_zero()) return;
  auto it = coeffs_.find(k);
  if (it == coeffs_.end()) {
    coeffs_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (auto &[k, c] : coeffs_) r.coeffs_.emplace(k, -c);
  return r;
}

Laurent Laurent::operator+(const Laurent &o) const {
  Laurent r(*this);
  r += o;
  return r;
}

Laurent &Laurent::operator+=(const Laurent &o) {
  for (auto &[k, c] : o.coeffs_) add_term(k, c);
  return *this;
}

Laurent Laurent::operator-(const Laurent &o) const {
  Laurent r(*this);
  for (auto &[k, c] : o.coeffs_) r.add_term(k, -c);
  return r;
}

Laurent Laurent::operator*(const Laurent &o) const {
  Laurent r;
  for (auto &[k1, c1] : coeffs_)
    for (auto &[k2, c2] : o.coeffs_)
      r.add_term(k1 + k2, c1 * c2);
  return r;
}

Laurent Laurent::conj() const {
  Laurent r;
  for (auto &[k, c] : coeffs_) r.coeffs_.emplace(k, c.conj());
  return r;
}

Laurent Laurent::shifted(int64_t k) const {
  Laurent r;
  for (auto &[d, c] : coeffs_) r.coeffs_.emplace(d + k, c);
  return r;
}

Laurent Laurent::scaled(const GaussQ &c) const {
  Laurent r;
  if (c.is_zero()) return r;
  for (auto &[k, v] : coeffs_) r.coeffs_.emplace(k, v * c);
  return r;
}

Laurent Laurent::powers_scaled(int64_t m) const {
  Laurent r;
  for (auto &[k, v] : coeffs_) r.coeffs_.emplace(k * m, v);
  return r;
}

GaussQ Laurent::eval(const mpq_class &q0) const {
  if (q0 == 0) {
    if (!coeffs_.empty() && min_deg() < 0)
      throw std::domain_error("Laurent::eval at q=0 with negative powers");
    return coeff(0);
  }
  GaussQ acc;
  for (auto &[k, c] : coeffs_) {
    mpq_class p(1);
    int64_t e = k < 0 ? -k : k;
    mpq_class base = k < 0 ? mpq_class(mpq_class(1) / q0) : q0;
    for (int64_t j = 0; j < e; j++) p *= base;
    acc += c * GaussQ(p);
  }
  return acc;
}

Laurent Laurent::divided_exact(const Laurent &d) const {
  if (d.is_zero()) throw std::domain_error("Laurent division by zero");
  Laurent rem(*this), quot;
  while (!rem.is_zero() && rem.max_deg() >= d.max_deg()) {
    int64_t k = rem.max_deg() - d.max_deg();
    GaussQ c = rem.lead_coeff() / d.lead_coeff();
    quot.add_term(k, c);
    rem = rem - d.shifted(k).scaled(c);
  }
  if (!rem.is_zero()) throw std::domain_error("inexact Laurent division");
  return quot;
}

Laurent Laurent::gcd(Laurent a, Laurent b) {
  while (!b.is_zero()) {
    // remainder of a by b, made monic each round to limit growth
    Laurent r(a);
    while (!r.is_zero() && r.max_deg() >= b.max_deg()) {
      GaussQ c = r.lead_coeff() / b.lead_coeff();
      r = r - b.shifted(r.max_deg() - b.max_deg()).scaled(c);
    }
    a = b;
    b = r.is_zero() ? r : r.scaled(GaussQ(1) / r.lead_coeff());
  }
  if (a.is_zero()) return a;
  return a.scaled(GaussQ(1) / a.lead_coeff());
}

} // namespace bf
