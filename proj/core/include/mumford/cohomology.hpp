#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mumford/group.hpp"

namespace mumford {

// Bar-resolution cochain W^degree -> T, stored densely; index for degree 2 is
// w1*|W| + w2.
struct Cochain {
  int degree = 0;
  FinAbGroup t;
  int group_order = 0;
  std::vector<std::vector<int64_t>> values;

  const std::vector<int64_t>& at() const { return values[0]; }                      // degree 0
  const std::vector<int64_t>& at(int w) const { return values[static_cast<size_t>(w)]; } // degree 1
  const std::vector<int64_t>& at(int w1, int w2) const {
    return values[static_cast<size_t>(w1) * group_order + w2];
  }
  std::vector<int64_t>& slot(size_t flat) { return values[flat]; }

  bool operator==(const Cochain& o) const = default;
};

Cochain zero_cochain(const GAction& action, int degree);
Cochain add_cochains(const Cochain& a, const Cochain& b);
Cochain sub_cochains(const Cochain& a, const Cochain& b);

// Differential with the conventions
//   (d theta)(w1,w2)    = sigma(w1) theta(w2) - theta(w1 w2) + theta(w1)
//   (d f)(w1,w2,w3)     = sigma(w1) f(w2,w3) - f(w1 w2,w3) + f(w1,w2 w3) - f(w1,w2)
// and (d t)(w) = sigma(w) t - t in degree 0.
Cochain coboundary(const GAction& action, const Cochain& c);

bool is_normalized2(const Cochain& f, int identity);
bool is_cocycle2(const GAction& action, const Cochain& f); // normalized + identity on all triples

// (f', theta) with f' normalized, cohomologous to f via f' = f - d theta.
std::pair<Cochain, Cochain> normalize_cocycle(const GAction& action, const Cochain& f);

// H^2(W, T; sigma) over normalized 2-cochains: Z^2 as the solution group of
// the cocycle conditions, B^2 as the coboundary image, classes as the lattice
// quotient.
class H2 {
public:
  explicit H2(GAction action, const Budget& budget = {});

  const GAction& action() const { return action_; }
  const FinAbGroup& group() const { return quotient_.group(); }
  int64_t order() const { return quotient_.order(); }
  int64_t z2_order() const { return z2_.order(); }
  int64_t b2_order() const { return b2_order_; }

  std::vector<int64_t> project(const Cochain& f) const; // f must be a cocycle
  Cochain representative(const std::vector<int64_t>& cls) const;
  bool cohomologous(const Cochain& f, const Cochain& g) const;
  // theta with f - g = d theta, when the classes agree.
  std::optional<Cochain> cohomologous_witness(const Cochain& f, const Cochain& g) const;

  const ProductSubgroup& z2() const { return z2_; }
  // Pack/unpack between normalized cochains and the free-pair coordinate
  // vector (pairs with both entries != e, flat index ascending).
  std::vector<int64_t> pack(const Cochain& f) const;
  Cochain unpack(const std::vector<int64_t>& v) const;

private:
  GAction action_;
  std::vector<int> pair_pos_;  // flat w1*|W|+w2 -> free-pair position or -1
  std::vector<int> pair_list_; // free-pair position -> flat index
  ProductSubgroup z2_;
  ProductQuotient quotient_; // of Z^2 combination coordinates by B^2
  int64_t b2_order_ = 1;
};

// Crossed homomorphisms W -> T (twisted by sigma): Z^1, principal ones B^1,
// and the quotient count |H^1|.
struct GroupH1 {
  ProductSubgroup z1; // inside T^(|W|-1), positions = elements != e ascending
  ProductSubgroup b1;
  int64_t order() const { return z1.order() / b1.order(); }
};

GroupH1 group_h1(const GAction& action);

} // namespace mumford
