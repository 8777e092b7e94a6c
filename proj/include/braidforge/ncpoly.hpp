#pragma once

#include "braidforge/scalar.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace bf {

// A word in presentation-local generator ids; generator order is id order.
using Word = std::u16string;
using GenId = char16_t;

// degree-lexicographic order induced by the generator order
struct DegLex {
  bool operator()(const Word &a, const Word &b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Noncommutative polynomial: word -> nonzero scalar coefficient.
class NCPoly {
public:
  using Map = std::map<Word, Scalar, DegLex>;

  NCPoly() = default;
  explicit NCPoly(const Scalar &c) { add_term(Word(), c); }
  static NCPoly gen(GenId g, const Scalar &c = Scalar(1)) {
    NCPoly p;
    p.add_term(Word(1, g), c);
    return p;
  }
  static NCPoly word(const Word &w, const Scalar &c = Scalar(1)) {
    NCPoly p;
    p.add_term(w, c);
    return p;
  }
  static NCPoly one() { return NCPoly(Scalar(1)); }

  bool is_zero() const { return terms_.empty(); }
  const Map &terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  int degree() const { return terms_.empty() ? -1 : (int)terms_.rbegin()->first.size(); }
  Scalar coeff(const Word &w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
  }
  // largest word in deg-lex order
  const Word &lead_word() const { return terms_.rbegin()->first; }
  const Scalar &lead_coeff() const { return terms_.rbegin()->second; }

  void add_term(const Word &w, const Scalar &c);

  NCPoly operator-() const;
  NCPoly operator+(const NCPoly &o) const;
  NCPoly operator-(const NCPoly &o) const;
  NCPoly operator*(const NCPoly &o) const;
  NCPoly scaled(const Scalar &c) const;
  NCPoly &operator+=(const NCPoly &o);

  bool operator==(const NCPoly &o) const { return terms_ == o.terms_; }
  bool operator!=(const NCPoly &o) const { return !(*this == o); }

  // coefficient-wise map (used for conjugation, q substitution, q -> q^m)
  NCPoly mapped(const std::function<Scalar(const Scalar &)> &f) const;
  // reverse every word (for antihomomorphisms)
  NCPoly reversed() const;
  // apply a generator substitution g -> polynomial
  NCPoly substituted(const std::function<const NCPoly &(GenId)> &image) const;

  std::string str(const std::function<std::string(GenId)> &name) const;

private:
  Map terms_;
};

} // namespace bf
