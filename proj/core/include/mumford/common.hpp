#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mumford {

// Error hierarchy.  All exact-arithmetic failures are loud: silent wraparound
// is never acceptable in the integer linear algebra underneath everything.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class OverflowError : public Error {
public:
  using Error::Error;
};

class BudgetError : public Error {
public:
  using Error::Error;
};

class ValidationError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in add");
  return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 overflow in sub");
  return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in mul");
  return r;
}

inline int64_t checked_neg(int64_t a) { return checked_sub(0, a); }

// Representative of a mod m in [0, m); m >= 1.
inline int64_t floor_mod(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// a^e with overflow detection; e >= 0.
inline int64_t checked_pow(int64_t a, int64_t e) {
  int64_t r = 1;
  for (int64_t i = 0; i < e; ++i) r = checked_mul(r, a);
  return r;
}

// Resource limits for enumeration-heavy operations.
struct Budget {
  int64_t max_tuples = 100'000'000;     // candidate tuples in hom enumeration
  int64_t max_enumeration = 4'194'304;  // elements listed from a finite group
  int64_t closure_bound = 10'000;       // permutation closure size
  int64_t max_table_order = 4'096;      // dense multiplication table side
  int64_t max_system_cells = 4'000'000; // rows*cols of an assembled linear system
};

} // namespace mumford
