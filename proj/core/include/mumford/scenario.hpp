#pragma once

#include <map>
#include <string>
#include <vector>

#include "mumford/moduli.hpp"

namespace mumford {

// Key/value description of a computation: `key = value` lines, '#' comments.
// Keys: genus, deck, coeff, action, extension, cover, family, n, budget,
// letter_order.  See docs/formats.md for the value grammars.
class Scenario {
public:
  static Scenario parse_file(const std::string& path);
  static Scenario parse_string(const std::string& text);

  bool has(const std::string& key) const { return kv_.count(key) > 0; }
  const std::string& raw(const std::string& key) const; // throws ParseError when absent

  int genus() const;                          // default 1
  int64_t budget_tuples(int64_t fallback) const;
  int family_n() const;                       // key "n"
  char family() const;                        // 'B' or 'D'
  std::vector<int> letter_order() const;      // empty when unset

  FiniteGroup deck(const Budget& budget = {}) const;
  FinAbGroup coeff() const;
  GAction action(const Budget& budget = {}) const;
  Extension extension(const H2& h2, const Budget& budget = {}) const;
  SurfaceRep cover_rep(const FiniteGroup& w, int genus, const Budget& budget = {}) const;

private:
  std::map<std::string, std::string> kv_;
};

} // namespace mumford
