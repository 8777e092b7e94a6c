#pragma once

#include <gmpxx.h>
#include <string>

namespace bf {

// Gaussian rational: re + im*i with exact rational parts.
struct GaussQ {
  mpq_class re, im;

  GaussQ() : re(0), im(0) {}
  GaussQ(long n) : re(n), im(0) {}
  GaussQ(const mpq_class &r) : re(r), im(0) { re.canonicalize(); }
  GaussQ(const mpq_class &r, const mpq_class &i) : re(r), im(i) {
    re.canonicalize();
    im.canonicalize();
  }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_one() const { return re == 1 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussQ conj() const { return {re, -im}; }

  GaussQ operator-() const { return {-re, -im}; }
  GaussQ operator+(const GaussQ &o) const { return {re + o.re, im + o.im}; }
  GaussQ operator-(const GaussQ &o) const { return {re - o.re, im - o.im}; }
  GaussQ operator*(const GaussQ &o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussQ operator/(const GaussQ &o) const;

  GaussQ &operator+=(const GaussQ &o) { re += o.re; im += o.im; return *this; }
  GaussQ &operator-=(const GaussQ &o) { re -= o.re; im -= o.im; return *this; }
  GaussQ &operator*=(const GaussQ &o) { *this = *this * o; return *this; }

  bool operator==(const GaussQ &o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussQ &o) const { return !(*this == o); }
  bool operator<(const GaussQ &o) const {
    if (re != o.re) return re < o.re;
    return im < o.im;
  }

  static GaussQ i() { return {mpq_class(0), mpq_class(1)}; }

  // Printed in the scalar grammar: "3/2", "2i", "(1+2i)", ...
  std::string str() const;
};

} // namespace bf
