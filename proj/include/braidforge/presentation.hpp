#pragma once

#include "braidforge/ncpoly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

namespace bf {

struct GenInfo {
  std::string name;   // unique printable token, e.g. "a", "P[2]", "Slm[0;1]"
  std::string family; // e.g. "u", "P", "Slm"
  std::vector<int> idx;
  int copy = 0; // tensor-power copy
};

struct Rule {
  Word lhs;    // two letters
  NCPoly rhs;  // strictly smaller words in deg-lex
  bool core;   // homogeneous quadratic core (subject to the confluence gate)
};

struct OverlapFailure {
  Word word; // the length-3 critical word
  NCPoly left, right;
};

// number of rewrite steps allowed per normal_form call;
// BRAIDFORGE_STEP_BUDGET overrides the default of 1e6
int64_t step_budget();
void set_step_budget(int64_t);

class Presentation {
public:
  std::string tag;

  GenId add_generator(const std::string &name, const std::string &family,
                      std::vector<int> idx = {}, int copy = 0);
  size_t num_gens() const { return gens_.size(); }
  const GenInfo &gen(GenId g) const { return gens_.at(g); }
  std::string name(GenId g) const { return gens_.at(g).name; }
  GenId find(const std::string &name) const; // throws on unknown name
  std::optional<GenId> try_find(const std::string &name) const;
  // all generators of a family (in id order), restricted to one copy
  std::vector<GenId> family(const std::string &fam, int copy = 0) const;

  // Orients one relation (= 0) into a rewrite rule after reduction by the
  // current system.  Relations reducing to zero are dropped unless they were
  // trivially zero to begin with (reported as unorientable).
  void add_relation(const NCPoly &rel, bool core = true);
  void add_relations(const std::vector<NCPoly> &rels, bool core = true);
  const std::map<uint32_t, Rule> &rules() const { return rules_; }
  const Rule *rule_for(GenId a, GenId b) const;
  // re-reduce every right-hand side against the full system
  void interreduce();

  NCPoly normal_form(const NCPoly &p) const;
  bool is_zero_mod(const NCPoly &p) const { return normal_form(p).is_zero(); }

  std::vector<OverlapFailure> local_confluence_failures(bool parallel = true) const;
  // irreducible-word counts per degree 1..maxdeg over the homogeneous core
  std::vector<int64_t> dimension_profile(int maxdeg) const;

  std::map<GenId, long> grading;
  std::map<GenId, NCPoly> star; // images of generators under *
  NCPoly apply_star(const NCPoly &p) const;
  bool grading_homogeneous(const std::map<GenId, long> &grades,
                           std::string *why = nullptr) const;

  // substitute q -> q0 in every rule coefficient and re-orient
  Presentation specialized(const mpq_class &q0) const;

  NCPoly parse(const std::string &text) const;
  std::string str(const NCPoly &p) const;
  nlohmann::ordered_json to_json() const;

private:
  std::vector<GenInfo> gens_;
  std::map<std::string, GenId> by_name_;
  std::map<uint32_t, Rule> rules_;

  static uint32_t key(GenId a, GenId b) {
    return (uint32_t(a) << 16) | uint32_t(b);
  }
};

// image of a polynomial under a generator id translation
NCPoly translate(const NCPoly &p, const std::vector<GenId> &map);

} // namespace bf
