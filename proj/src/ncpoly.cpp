#include "braidforge/ncpoly.hpp"

namespace bf {

void NCPoly::add_term(const Word &w, const Scalar &c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly NCPoly::operator-() const {
  NCPoly r;
  for (auto &[w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

NCPoly NCPoly::operator+(const NCPoly &o) const {
  NCPoly r(*this);
  r += o;
  return r;
}

NCPoly &NCPoly::operator+=(const NCPoly &o) {
  for (auto &[w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly NCPoly::operator-(const NCPoly &o) const {
  NCPoly r(*this);
  for (auto &[w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

NCPoly NCPoly::operator*(const NCPoly &o) const {
  NCPoly r;
  for (auto &[w1, c1] : terms_)
    for (auto &[w2, c2] : o.terms_) r.add_term(w1 + w2, c1 * c2);
  return r;
}

NCPoly NCPoly::scaled(const Scalar &c) const {
  NCPoly r;
  if (c.is_zero()) return r;
  for (auto &[w, x] : terms_) r.terms_.emplace(w, x * c);
  return r;
}

NCPoly NCPoly::mapped(const std::function<Scalar(const Scalar &)> &f) const {
  NCPoly r;
  for (auto &[w, c] : terms_) r.add_term(w, f(c));
  return r;
}

NCPoly NCPoly::reversed() const {
  NCPoly r;
  for (auto &[w, c] : terms_) {
    Word rev(w.rbegin(), w.rend());
    r.add_term(rev, c);
  }
  return r;
}

NCPoly NCPoly::substituted(const std::function<const NCPoly &(GenId)> &image) const {
  NCPoly r;
  for (auto &[w, c] : terms_) {
    NCPoly t(c);
    for (GenId g : w) t = t * image(g);
    r += t;
  }
  return r;
}

std::string NCPoly::str(const std::function<std::string(GenId)> &name) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // print large words first: matches how relations are usually displayed
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto &[w, c] = *it;
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-' && cs.find(" + ") == std::string::npos &&
               cs.find(" - ") == std::string::npos;
    std::string mag = neg ? (-c).str() : cs;
    // sums multiplying a word need parentheses
    if (!w.empty() &&
        (mag.find(" + ") != std::string::npos || mag.find(" - ") != std::string::npos))
      mag = "(" + mag + ")";
    std::string body;
    if (w.empty()) body = mag;
    else {
      if (mag != "1") body = mag + " ";
      for (size_t k = 0; k < w.size(); k++)
        body += (k ? " " : "") + name(w[k]);
    }
    if (first) {
      out = neg ? "-" + body : body;
      first = false;
    } else {
      out += neg ? " - " + body : " + " + body;
    }
  }
  return out;
}

} // namespace bf
