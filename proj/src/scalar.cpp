#include "braidforge/scalar.hpp"

#include <cctype>

namespace bf {

Scalar::Scalar(const Laurent &num, const Laurent &den) : num_(num), den_(den) {
  normalize();
}

void Scalar::normalize() {
  if (den_.is_zero()) throw std::domain_error("scalar with zero denominator");
  if (num_.is_zero()) {
    den_ = Laurent(GaussQ(1));
    return;
  }
  int64_t s = std::min(num_.min_deg(), den_.min_deg());
  if (s != 0) {
    num_ = num_.shifted(-s);
    den_ = den_.shifted(-s);
  }
  Laurent g = Laurent::gcd(num_, den_);
  if (!g.is_one() && !g.is_zero()) {
    num_ = num_.divided_exact(g);
    den_ = den_.divided_exact(g);
  }
  GaussQ c = den_.trail_coeff();
  if (!c.is_one()) {
    GaussQ ci = GaussQ(1) / c;
    num_ = num_.scaled(ci);
    den_ = den_.scaled(ci);
  }
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::operator+(const Scalar &o) const {
  if (den_ == o.den_) return Scalar(num_ + o.num_, den_);
  return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar &o) const {
  if (den_ == o.den_) return Scalar(num_ - o.num_, den_);
  return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar &o) const {
  return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar &o) const {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::conj() const {
  return Scalar(num_.conj(), den_.conj());
}

GaussQ Scalar::eval(const mpq_class &q0) const {
  GaussQ d = den_.eval(q0);
  if (d.is_zero()) throw std::domain_error("pole at the evaluation point");
  return num_.eval(q0) / d;
}

Scalar Scalar::powers_scaled(int64_t m) const {
  return Scalar(num_.powers_scaled(m), den_.powers_scaled(m));
}

static std::optional<GaussQ> gauss_sqrt(const GaussQ &c) {
  if (!c.is_real() || c.re < 0) return std::nullopt;
  mpz_class n = c.re.get_num(), d = c.re.get_den();
  mpz_class rn, rd;
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return GaussQ(mpq_class(rn, rd));
}

static std::optional<Laurent> poly_sqrt(const Laurent &p) {
  if (p.is_zero()) return Laurent();
  if (p.min_deg() % 2 != 0 || p.max_deg() % 2 != 0) return std::nullopt;
  int64_t lo = p.min_deg() / 2, hi = p.max_deg() / 2;
  auto lead = gauss_sqrt(p.lead_coeff());
  if (!lead) return std::nullopt;
  Laurent r = Laurent::q_power(hi, *lead);
  for (int64_t k = hi - 1; k >= lo; k--) {
    // coefficient of q^{hi+k} in r*r is 2*r_hi*r_k + (known terms)
    GaussQ known;
    for (int64_t x = k + 1; x < hi; x++) known += r.coeff(x) * r.coeff(hi + k - x);
    GaussQ rk = (p.coeff(hi + k) - known) / (GaussQ(2) * *lead);
    r.add_term(k, rk);
  }
  if (r * r != p) return std::nullopt;
  return r;
}

std::optional<Scalar> Scalar::sqrt() const {
  auto n = poly_sqrt(num_), d = poly_sqrt(den_);
  if (!n || !d) return std::nullopt;
  return Scalar(*n, *d);
}

// ---------------------------------------------------------------- printing

static bool gauss_negative(const GaussQ &c) {
  if (c.re != 0) return c.re < 0;
  return c.im < 0;
}

static std::string term_str(const GaussQ &c, int64_t k) {
  std::string qs;
  if (k == 1) qs = "q";
  else if (k != 0) qs = "q^" + std::to_string(k);
  if (qs.empty()) return c.str();
  if (c.is_one()) return qs;
  return c.str() + " " + qs;
}

static std::string laurent_str(const Laurent &p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    auto [k, c] = *it;
    if (first) {
      out = term_str(c, k);
      first = false;
    } else if (gauss_negative(c)) {
      out += " - " + term_str(-c, k);
    } else {
      out += " + " + term_str(c, k);
    }
  }
  return out;
}

std::string Scalar::str() const {
  if (den_.is_one()) return laurent_str(num_);
  return "(" + laurent_str(num_) + ")/(" + laurent_str(den_) + ")";
}

// ----------------------------------------------------------------- parsing
//
// expr   := term (('+'|'-') term)*
// term   := factor ('*'? factor)*
// factor := atom ('^' int)?
// atom   := int | 'q' | 'i' | '(' expr ')' | atom '/' atom
// int    := '-'? digits

namespace {

struct Parser {
  const std::string &s;
  size_t p = 0;

  explicit Parser(const std::string &text) : s(text) {}

  void skip_ws() {
    while (p < s.size() && std::isspace((unsigned char)s[p])) p++;
  }
  char peek() {
    skip_ws();
    return p < s.size() ? s[p] : '\0';
  }
  bool at_int_start() {
    char c = peek();
    if (std::isdigit((unsigned char)c)) return true;
    if (c == '-' && p + 1 < s.size() && std::isdigit((unsigned char)s[p + 1]))
      return true;
    return false;
  }

  Scalar parse_int() {
    skip_ws();
    size_t start = p;
    bool neg = false;
    if (s[p] == '-') { neg = true; p++; }
    std::string digits;
    while (p < s.size() && std::isdigit((unsigned char)s[p])) digits += s[p++];
    if (digits.empty()) throw parse_error("expected integer", start);
    mpz_class v(digits);
    if (neg) v = -v;
    return Scalar(GaussQ(mpq_class(v)));
  }

  int64_t parse_exponent() {
    skip_ws();
    size_t start = p;
    bool neg = false;
    if (p < s.size() && s[p] == '-') { neg = true; p++; }
    std::string digits;
    while (p < s.size() && std::isdigit((unsigned char)s[p])) digits += s[p++];
    if (digits.empty()) throw parse_error("expected integer exponent", start);
    int64_t v = std::stoll(digits);
    return neg ? -v : v;
  }

  Scalar parse_primary() {
    char c = peek();
    if (c == 'q') { p++; return Scalar::q(); }
    if (c == 'i') { p++; return Scalar::i(); }
    if (c == '(') {
      p++;
      Scalar e = parse_expr();
      if (peek() != ')') throw parse_error("expected ')'", p);
      p++;
      return e;
    }
    if (at_int_start()) return parse_int();
    throw parse_error("expected atom", p);
  }

  Scalar parse_atom() {
    Scalar a = parse_primary();
    while (peek() == '/') {
      size_t at = p;
      p++;
      Scalar b = parse_primary();
      if (b.is_zero()) throw parse_error("division by zero", at);
      a = a / b;
    }
    return a;
  }

  Scalar parse_factor() {
    Scalar a = parse_atom();
    if (peek() == '^') {
      size_t at = p;
      p++;
      int64_t e = parse_exponent();
      if (a.is_zero() && e < 0) throw parse_error("zero to a negative power", at);
      Scalar r(1);
      Scalar base = e < 0 ? a.inv() : a;
      for (int64_t k = 0; k < (e < 0 ? -e : e); k++) r = r * base;
      a = r;
    }
    return a;
  }

  bool at_factor_start() {
    char c = peek();
    return c == 'q' || c == 'i' || c == '(' || std::isdigit((unsigned char)c) ||
           c == '*' || (c == '-' && at_int_start());
  }

  Scalar parse_term() {
    Scalar a = parse_factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        p++;
        a = a * parse_factor();
        continue;
      }
      // implicit multiplication; '-' only continues a term when it cannot
      // be a subtraction (i.e. never: subtraction wins)
      if (c == 'q' || c == 'i' || c == '(' || std::isdigit((unsigned char)c)) {
        a = a * parse_factor();
        continue;
      }
      return a;
    }
  }

  Scalar parse_expr() {
    Scalar a = peek() == '-' && !at_int_start() ? Scalar(0) : Scalar(0);
    bool lead_minus = false;
    if (peek() == '-' && !at_int_start()) { lead_minus = true; p++; }
    a = parse_term();
    if (lead_minus) a = -a;
    for (;;) {
      char c = peek();
      if (c == '+') { p++; a = a + parse_term(); }
      else if (c == '-') { p++; a = a - parse_term(); }
      else return a;
    }
  }
};

} // namespace

Scalar Scalar::parse(const std::string &text) {
  Parser parser(text);
  Scalar r = parser.parse_expr();
  parser.skip_ws();
  if (parser.p != text.size())
    throw parse_error("unexpected trailing input", parser.p);
  return r;
}

Scalar s_int(long n) { return Scalar(n); }

} // namespace bf
