#include "braidforge/presentation.hpp"

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bf {

static int64_t g_budget = -1;

int64_t step_budget() {
  if (g_budget > 0) return g_budget;
  if (const char *e = std::getenv("BRAIDFORGE_STEP_BUDGET")) {
    long long v = std::atoll(e);
    if (v > 0) return v;
  }
  return 1000000;
}

void set_step_budget(int64_t b) { g_budget = b; }

GenId Presentation::add_generator(const std::string &name,
                                  const std::string &family,
                                  std::vector<int> idx, int copy) {
  if (by_name_.count(name))
    throw std::invalid_argument("duplicate generator name: " + name);
  if (gens_.size() >= 0xffff) throw std::length_error("too many generators");
  GenId id = (GenId)gens_.size();
  gens_.push_back({name, family, std::move(idx), copy});
  by_name_.emplace(name, id);
  return id;
}

GenId Presentation::find(const std::string &name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end())
    throw std::invalid_argument("unknown generator: " + name);
  return it->second;
}

std::optional<GenId> Presentation::try_find(const std::string &name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::vector<GenId> Presentation::family(const std::string &fam, int copy) const {
  std::vector<GenId> out;
  for (size_t g = 0; g < gens_.size(); g++)
    if (gens_[g].family == fam && gens_[g].copy == copy) out.push_back((GenId)g);
  return out;
}

const Rule *Presentation::rule_for(GenId a, GenId b) const {
  auto it = rules_.find(key(a, b));
  return it == rules_.end() ? nullptr : &it->second;
}

void Presentation::add_relation(const NCPoly &rel, bool core) {
  if (rel.is_zero())
    throw std::invalid_argument("unorientable relation: trivially zero");
  NCPoly r = normal_form(rel);
  if (r.is_zero()) return; // redundant
  const Word &lead = r.lead_word();
  if (lead.size() != 2)
    throw std::invalid_argument(
        "unorientable relation: leading word \"" + str(NCPoly::word(lead)) +
        "\" is not quadratic in " + str(rel));
  NCPoly rhs = (r - NCPoly::word(lead, r.lead_coeff())).scaled(
      Scalar(-1) / r.lead_coeff());
  bool homogeneous = true;
  for (auto &[w, c] : rhs.terms())
    if (w.size() != 2) homogeneous = false;
  rules_[key(lead[0], lead[1])] = Rule{lead, rhs, core && homogeneous};
}

void Presentation::add_relations(const std::vector<NCPoly> &rels, bool core) {
  for (auto &r : rels) add_relation(r, core);
  interreduce();
}

void Presentation::interreduce() {
  for (auto &[k, rule] : rules_) rule.rhs = normal_form(rule.rhs);
}

NCPoly Presentation::normal_form(const NCPoly &p) const {
  NCPoly done;
  NCPoly work(p);
  int64_t budget = step_budget();
  while (!work.is_zero()) {
    auto it = std::prev(work.terms().end());
    Word w = it->first;
    Scalar c = it->second;
    work.add_term(w, -c);
    const Rule *rule = nullptr;
    size_t pos = 0;
    for (size_t i = 0; i + 1 < w.size(); i++) {
      rule = rule_for(w[i], w[i + 1]);
      if (rule) { pos = i; break; }
    }
    if (!rule) {
      done.add_term(w, c);
      continue;
    }
    if (--budget < 0)
      throw std::runtime_error("normal_form exceeded the step budget "
                               "(non-terminating rule set?)");
    Word prefix = w.substr(0, pos), suffix = w.substr(pos + 2);
    for (auto &[rw, rc] : rule->rhs.terms())
      work.add_term(prefix + rw + suffix, c * rc);
  }
  return done;
}

std::vector<OverlapFailure>
Presentation::local_confluence_failures(bool parallel) const {
  // critical words xyz where xy and yz are both core rule lhs
  std::vector<std::pair<const Rule *, const Rule *>> pairs;
  for (auto &[k1, r1] : rules_) {
    if (!r1.core) continue;
    for (auto &[k2, r2] : rules_) {
      if (!r2.core) continue;
      if (r1.lhs[1] == r2.lhs[0]) pairs.emplace_back(&r1, &r2);
    }
  }
  std::vector<OverlapFailure> fails;
#ifdef _OPENMP
  if (parallel) {
    std::vector<std::vector<OverlapFailure>> local(omp_get_max_threads());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < (long)pairs.size(); i++) {
      auto [r1, r2] = pairs[i];
      Word w = r1->lhs + Word(1, r2->lhs[1]);
      NCPoly left = normal_form(r1->rhs * NCPoly::gen(r2->lhs[1]));
      NCPoly right = normal_form(NCPoly::gen(r1->lhs[0]) * r2->rhs);
      if (left != right)
        local[omp_get_thread_num()].push_back({w, left, right});
    }
    for (auto &v : local) fails.insert(fails.end(), v.begin(), v.end());
    std::sort(fails.begin(), fails.end(),
              [](const OverlapFailure &a, const OverlapFailure &b) {
                return DegLex()(a.word, b.word);
              });
    return fails;
  }
#endif
  (void)parallel;
  for (auto [r1, r2] : pairs) {
    Word w = r1->lhs + Word(1, r2->lhs[1]);
    NCPoly left = normal_form(r1->rhs * NCPoly::gen(r2->lhs[1]));
    NCPoly right = normal_form(NCPoly::gen(r1->lhs[0]) * r2->rhs);
    if (left != right) fails.push_back({w, left, right});
  }
  return fails;
}

std::vector<int64_t> Presentation::dimension_profile(int maxdeg) const {
  size_t n = gens_.size();
  std::vector<int64_t> counts;
  // paths in the graph of allowed adjacent pairs
  std::vector<int64_t> v(n, 1);
  for (int d = 1; d <= maxdeg; d++) {
    int64_t total = 0;
    for (auto x : v) total += x;
    counts.push_back(total);
    if (d == maxdeg) break;
    std::vector<int64_t> next(n, 0);
    for (size_t g = 0; g < n; g++) {
      if (v[g] == 0) continue;
      for (size_t h = 0; h < n; h++) {
        if (rule_for((GenId)h, (GenId)g)) continue;
        next[h] += v[g];
      }
    }
    v = next;
  }
  return counts;
}

NCPoly Presentation::apply_star(const NCPoly &p) const {
  NCPoly out;
  for (auto &[w, c] : p.terms()) {
    NCPoly t(c.conj());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      auto img = star.find(*it);
      if (img == star.end())
        throw std::invalid_argument("star undefined on generator " + name(*it));
      t = t * img->second;
    }
    out += t;
  }
  return out;
}

bool Presentation::grading_homogeneous(const std::map<GenId, long> &grades,
                                       std::string *why) const {
  auto grade = [&](const Word &w) {
    long s = 0;
    for (GenId g : w) s += grades.at(g);
    return s;
  };
  for (auto &[k, rule] : rules_) {
    long lg = grade(rule.lhs);
    for (auto &[w, c] : rule.rhs.terms()) {
      if (grade(w) != lg) {
        if (why)
          *why = "rule " + str(NCPoly::word(rule.lhs)) + " -> " + str(rule.rhs) +
                 " is not grade-homogeneous";
        return false;
      }
    }
  }
  return true;
}

Presentation Presentation::specialized(const mpq_class &q0) const {
  Presentation out;
  out.tag = tag + "@q=" + mpq_class(q0).get_str();
  for (auto &g : gens_) out.add_generator(g.name, g.family, g.idx, g.copy);
  for (auto &[k, rule] : rules_) {
    NCPoly rel = NCPoly::word(rule.lhs) - rule.rhs;
    out.add_relation(rel.mapped([&](const Scalar &c) {
      return Scalar(c.eval(q0));
    }), rule.core);
  }
  out.interreduce();
  out.grading = grading;
  return out;
}

NCPoly translate(const NCPoly &p, const std::vector<GenId> &map) {
  NCPoly out;
  for (auto &[w, c] : p.terms()) {
    Word t;
    t.reserve(w.size());
    for (GenId g : w) t.push_back(map.at(g));
    out.add_term(t, c);
  }
  return out;
}

// ---------------------------------------------------------------- parsing

namespace {

struct PolyParser {
  const Presentation &pres;
  const std::string &s;
  size_t p = 0;

  PolyParser(const Presentation &pr, const std::string &text)
      : pres(pr), s(text) {}

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
    return c == '-' && p + 1 < s.size() && std::isdigit((unsigned char)s[p + 1]);
  }

  // identifier: letters/digits, an optional bracket group "[...]", and
  // optional trailing primes (tensor-copy decoration)
  std::optional<std::string> try_ident() {
    skip_ws();
    size_t q = p;
    if (q >= s.size() || !std::isalpha((unsigned char)s[q])) return std::nullopt;
    std::string id;
    while (q < s.size() && std::isalnum((unsigned char)s[q])) id += s[q++];
    if (q < s.size() && s[q] == '[') {
      while (q < s.size() && s[q] != ']') id += s[q++];
      if (q >= s.size()) throw parse_error("unterminated '['", p);
      id += s[q++];
    }
    while (q < s.size() && s[q] == '\'') id += s[q++];
    return id;
  }

  NCPoly parse_primary() {
    char c = peek();
    if (c == '(') {
      p++;
      NCPoly e = parse_expr();
      if (peek() != ')') throw parse_error("expected ')'", p);
      p++;
      return e;
    }
    if (at_int_start()) {
      size_t start = p;
      bool neg = s[p] == '-';
      if (neg) p++;
      std::string digits;
      while (p < s.size() && std::isdigit((unsigned char)s[p])) digits += s[p++];
      if (digits.empty()) throw parse_error("expected integer", start);
      mpz_class v(digits);
      if (neg) v = -v;
      return NCPoly(Scalar(GaussQ(mpq_class(v))));
    }
    auto id = try_ident();
    if (id) {
      skip_ws();
      if (*id == "q" && !pres.try_find("q")) { p += 1; return NCPoly(Scalar::q()); }
      if (*id == "i" && !pres.try_find("i")) { p += 1; return NCPoly(Scalar::i()); }
      auto g = pres.try_find(*id);
      if (!g) throw parse_error("unknown symbol '" + *id + "'", p);
      p += id->size();
      return NCPoly::gen(*g);
    }
    throw parse_error("expected atom", p);
  }

  static Scalar as_scalar(const NCPoly &x, size_t at) {
    if (x.is_zero()) return Scalar(0);
    if (x.size() == 1 && x.terms().begin()->first.empty())
      return x.terms().begin()->second;
    throw parse_error("expected a scalar-valued expression", at);
  }

  NCPoly parse_atom() {
    NCPoly a = parse_primary();
    while (peek() == '/') {
      size_t at = p;
      p++;
      Scalar d = as_scalar(parse_primary(), at);
      if (d.is_zero()) throw parse_error("division by zero", at);
      a = a.scaled(d.inv());
    }
    return a;
  }

  NCPoly parse_factor() {
    NCPoly a = parse_atom();
    if (peek() == '^') {
      size_t at = p;
      p++;
      skip_ws();
      bool neg = p < s.size() && s[p] == '-';
      if (neg) p++;
      std::string digits;
      while (p < s.size() && std::isdigit((unsigned char)s[p])) digits += s[p++];
      if (digits.empty()) throw parse_error("expected integer exponent", at);
      int64_t e = std::stoll(digits);
      if (neg) {
        Scalar c = as_scalar(a, at);
        if (c.is_zero()) throw parse_error("zero to a negative power", at);
        Scalar ci = c.inv(), r(1);
        for (int64_t k = 0; k < e; k++) r = r * ci;
        return NCPoly(r);
      }
      NCPoly r = NCPoly::one();
      for (int64_t k = 0; k < e; k++) r = r * a;
      a = r;
    }
    return a;
  }

  NCPoly parse_term() {
    NCPoly a = parse_factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        p++;
        a = a * parse_factor();
        continue;
      }
      if (c == '(' || std::isalnum((unsigned char)c)) {
        a = a * parse_factor();
        continue;
      }
      return a;
    }
  }

  NCPoly parse_expr() {
    bool lead_minus = false;
    if (peek() == '-' && !at_int_start()) { lead_minus = true; p++; }
    NCPoly a = parse_term();
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

NCPoly Presentation::parse(const std::string &text) const {
  PolyParser parser(*this, text);
  NCPoly r = parser.parse_expr();
  parser.skip_ws();
  if (parser.p != text.size())
    throw parse_error("unexpected trailing input", parser.p);
  return r;
}

std::string Presentation::str(const NCPoly &p) const {
  return p.str([this](GenId g) { return name(g); });
}

nlohmann::ordered_json Presentation::to_json() const {
  nlohmann::ordered_json j;
  j["tag"] = tag;
  j["generators"] = nlohmann::ordered_json::array();
  for (auto &g : gens_) j["generators"].push_back(g.name);
  j["rules"] = nlohmann::ordered_json::array();
  for (auto &[k, rule] : rules_) {
    nlohmann::ordered_json r;
    r["lhs"] = {name(rule.lhs[0]), name(rule.lhs[1])};
    r["rhs"] = str(rule.rhs);
    r["core"] = rule.core;
    j["rules"].push_back(r);
  }
  if (!grading.empty()) {
    nlohmann::ordered_json g;
    for (auto &[id, d] : grading) g[name(id)] = d;
    j["grading"] = g;
  }
  if (!star.empty()) {
    nlohmann::ordered_json st;
    for (auto &[id, img] : star) st[name(id)] = str(img);
    j["star"] = st;
  }
  return j;
}

} // namespace bf
