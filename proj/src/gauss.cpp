#include "braidforge/gauss.hpp"

#include <stdexcept>

namespace bf {

GaussQ GaussQ::operator/(const GaussQ &o) const {
  mpq_class n = o.re * o.re + o.im * o.im;
  if (n == 0)
    throw std::domain_error("division by zero Gaussian rational");
  return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
}

static std::string q_str(const mpq_class &x) {
  mpq_class c(x);
  c.canonicalize();
  return c.get_str();
}

std::string GaussQ::str() const {
  if (im == 0) return q_str(re);
  if (re == 0) {
    // "-1i" rather than "-i": a bare minus does not start an atom
    if (im == 1) return "i";
    return q_str(im) + "i";
  }
  std::string imag = im == 1 ? "i" : (im == -1 ? "-i" : q_str(im) + "i");
  // both parts: parenthesize so the printed form stays a single atom chain
  std::string s = "(" + q_str(re);
  if (imag[0] == '-') s += " - " + imag.substr(1);
  else s += " + " + imag;
  return s + ")";
}

} // namespace bf
