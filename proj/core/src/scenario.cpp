#include "mumford/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace mumford {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int64_t parse_int(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    int64_t v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer for " + what + ", got '" + s + "'");
  }
}

// "(1 2)(3 4 5)" or "()" -> cycles of 1-based points.
std::vector<std::vector<int>> parse_cycles(const std::string& s, int& max_point) {
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  std::string text = trim(s);
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw ParseError("expected '(' in cycle list '" + s + "'");
    size_t close = text.find(')', i);
    if (close == std::string::npos) throw ParseError("unbalanced cycle in '" + s + "'");
    std::vector<int> cyc;
    for (const auto& tok : tokens(text.substr(i + 1, close - i - 1))) {
      int64_t p = parse_int(tok, "cycle point");
      if (p < 1) throw ParseError("cycle points are 1-based");
      max_point = std::max<int>(max_point, static_cast<int>(p));
      cyc.push_back(static_cast<int>(p));
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    i = close + 1;
  }
  return cycles;
}

FiniteGroup parse_group(const std::string& value, const Budget& budget) {
  auto toks = tokens(value);
  if (toks.empty()) throw ParseError("empty group description");
  const std::string& kind = toks[0];
  auto arg = [&](size_t i) -> int64_t {
    if (i >= toks.size()) throw ParseError("group '" + kind + "' needs a size argument");
    return parse_int(toks[i], "group size");
  };
  if (kind == "cyclic") return FiniteGroup::cyclic(arg(1));
  if (kind == "symmetric") return FiniteGroup::symmetric(static_cast<int>(arg(1)));
  if (kind == "dihedral") return FiniteGroup::dihedral(static_cast<int>(arg(1)));
  if (kind == "weyl_b") return weyl_b_extension(static_cast<int>(arg(1))).group();
  if (kind == "weyl_d") return weyl_d_extension(static_cast<int>(arg(1))).group();
  if (kind == "perm") {
    std::string rest = trim(value.substr(4));
    int max_point = 1;
    std::vector<std::vector<std::vector<int>>> gen_cycles;
    for (const auto& part : split(rest, ';')) gen_cycles.push_back(parse_cycles(part, max_point));
    std::vector<Permutation> gens;
    for (const auto& cycles : gen_cycles) gens.push_back(Permutation::from_cycles(max_point, cycles));
    if (gens.empty()) throw ParseError("perm group needs at least one generator");
    return FiniteGroup::from_permutations(gens, budget);
  }
  if (kind == "table") {
    std::string rest = trim(value.substr(5));
    std::vector<std::vector<int>> table;
    for (const auto& part : split(rest, ';')) {
      std::vector<int> row;
      for (const auto& tok : tokens(part)) row.push_back(static_cast<int>(parse_int(tok, "table entry")));
      if (!row.empty()) table.push_back(std::move(row));
    }
    return FiniteGroup::from_table(table);
  }
  throw ParseError("unknown group kind '" + kind + "'");
}

} // namespace

Scenario Scenario::parse_string(const std::string& text) {
  Scenario sc;
  int lineno = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ParseError("line " + std::to_string(lineno) + ": empty key or value");
    if (!sc.kv_.emplace(key, value).second)
      throw ParseError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
  }
  return sc;
}

Scenario Scenario::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_string(buf.str());
}

const std::string& Scenario::raw(const std::string& key) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) throw ParseError("scenario is missing required key '" + key + "'");
  return it->second;
}

int Scenario::genus() const {
  if (!has("genus")) return 1;
  int64_t g = parse_int(raw("genus"), "genus");
  if (g < 0 || g > 8) throw ParseError("genus out of range");
  return static_cast<int>(g);
}

int64_t Scenario::budget_tuples(int64_t fallback) const {
  if (!has("budget")) return fallback;
  int64_t b = parse_int(raw("budget"), "budget");
  if (b < 1) throw ParseError("budget must be positive");
  return b;
}

int Scenario::family_n() const {
  int64_t n = parse_int(raw("n"), "n");
  if (n < 2 || n > 16) throw ParseError("family parameter n out of range");
  return static_cast<int>(n);
}

char Scenario::family() const {
  std::string f = raw("family");
  if (f == "B" || f == "b" || f == "C" || f == "c") return 'B';
  if (f == "D" || f == "d") return 'D';
  throw ParseError("family must be one of B, C, D");
}

std::vector<int> Scenario::letter_order() const {
  std::vector<int> out;
  if (!has("letter_order")) return out;
  for (const auto& tok : tokens(raw("letter_order")))
    out.push_back(static_cast<int>(parse_int(tok, "letter_order")));
  return out;
}

FiniteGroup Scenario::deck(const Budget& budget) const {
  try {
    return parse_group(raw("deck"), budget);
  } catch (const ValidationError& err) {
    throw ParseError(std::string("deck: ") + err.what());
  }
}

FinAbGroup Scenario::coeff() const {
  auto toks = tokens(raw("coeff"));
  if (toks.empty()) throw ParseError("empty coefficient description");
  try {
    if (toks[0] == "cyclic" && toks.size() == 2)
      return FinAbGroup::cyclic(parse_int(toks[1], "coefficient order"));
    if (toks[0] == "abelian") {
      std::vector<int64_t> orders;
      for (size_t i = 1; i < toks.size(); ++i) orders.push_back(parse_int(toks[i], "coefficient order"));
      if (orders.empty()) throw ParseError("abelian needs at least one order");
      return FinAbGroup(orders);
    }
  } catch (const ValidationError& err) {
    throw ParseError(std::string("coeff: ") + err.what());
  }
  throw ParseError("coefficient must be 'cyclic n' or 'abelian d1 d2 ...'");
}

GAction Scenario::action(const Budget& budget) const {
  FiniteGroup w = deck(budget);
  FinAbGroup t = coeff();
  std::string value = has("action") ? raw("action") : "trivial";
  auto toks = tokens(value);
  try {
    if (value == "trivial") return GAction::trivial(w, t);
    if (value == "inversion") return GAction::inversion(w, t);
    if (value == "swap") return GAction::coordinate_swap(w, t);
    if (value == "permute") return GAction::coordinate_permutation(w, t);
    if (value == "permute_even") return GAction::even_ones(w, t);
    if (!toks.empty() && toks[0] == "matrices") {
      // One [row-major d*d block] per group element, in element-index order.
      std::vector<IntMatrix> mats;
      int d = t.rank();
      for (const auto& part : split(value.substr(9), '[')) {
        std::string body = trim(part);
        if (body.empty()) continue;
        size_t close = body.find(']');
        if (close == std::string::npos) throw ParseError("unbalanced ']' in matrices");
        auto nums = tokens(body.substr(0, close));
        if (static_cast<int>(nums.size()) != d * d)
          throw ParseError("each matrix needs rank^2 entries");
        IntMatrix m(d, d);
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j)
            m.at(i, j) = parse_int(nums[static_cast<size_t>(i * d + j)], "matrix entry");
        mats.push_back(std::move(m));
      }
      return GAction(w, t, mats);
    }
  } catch (const ValidationError& err) {
    throw ParseError(std::string("action: ") + err.what());
  }
  throw ParseError("unknown action '" + value + "'");
}

Extension Scenario::extension(const H2& h2, const Budget& budget) const {
  std::string value = has("extension") ? raw("extension") : "split";
  auto toks = tokens(value);
  try {
    if (value == "split") return Extension::split(h2.action(), budget);
    if (!toks.empty() && toks[0] == "class") {
      std::vector<int64_t> coords;
      for (size_t i = 1; i < toks.size(); ++i) coords.push_back(parse_int(toks[i], "class coordinate"));
      if (static_cast<int>(coords.size()) != h2.group().rank())
        throw ParseError("class needs " + std::to_string(h2.group().rank()) + " coordinates");
      return Extension::from_cocycle(h2.action(), h2.representative(h2.group().reduce(coords)), budget);
    }
  } catch (const ValidationError& err) {
    throw ParseError(std::string("extension: ") + err.what());
  }
  throw ParseError("extension must be 'split' or 'class c1 c2 ...'");
}

SurfaceRep Scenario::cover_rep(const FiniteGroup& w, int genus, const Budget& budget) const {
  std::string value = raw("cover");
  auto toks = tokens(value);
  if (toks.empty()) throw ParseError("empty cover description");
  if (toks[0] == "index" && toks.size() == 2) {
    int64_t k = parse_int(toks[1], "cover index");
    auto homs = surjective_homs(genus, w, budget);
    if (k < 0 || k >= static_cast<int64_t>(homs.size()))
      throw ParseError("cover index " + std::to_string(k) + " out of range; " +
                       std::to_string(homs.size()) + " surjections exist");
    return homs[static_cast<size_t>(k)];
  }
  SurfaceRep rep{genus, {}};
  if (toks[0] == "elements") {
    for (size_t i = 1; i < toks.size(); ++i) {
      int64_t idx = parse_int(toks[i], "element index");
      if (idx < 0 || idx >= w.order()) throw ParseError("element index out of range");
      rep.images.push_back(static_cast<int>(idx));
    }
  } else if (toks[0] == "images") {
    for (const auto& part : split(trim(value.substr(6)), ';')) {
      std::string label = trim(part);
      int idx = w.element_by_label(label);
      if (idx < 0) throw ParseError("no group element labelled '" + label + "'");
      rep.images.push_back(idx);
    }
  } else {
    throw ParseError("cover must be 'index k', 'elements i1 ...' or 'images l1; l2; ...'");
  }
  if (static_cast<int>(rep.images.size()) != 2 * genus)
    throw ParseError("cover needs exactly 2*genus images");
  return rep;
}

} // namespace mumford
