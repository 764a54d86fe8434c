#pragma once

#include "shiftedq/rational.hpp"

#include <map>
#include <vector>

namespace shiftedq {

// Sparse polynomial in a fixed number of variables z_1..z_nvars.  Terms map
// exponent vectors (length nvars) to coefficients; zero coefficients are
// never stored, and the std::map keeps iteration deterministic.
struct MultiPoly {
  int nvars = 0;
  std::map<std::vector<int>, Rat> terms;

  static MultiPoly zero(int nvars);
  static MultiPoly constant(int nvars, const Rat& r);
  static MultiPoly variable(int nvars, int i);  // z_(i+1), 0-based index

  bool is_zero() const;
  bool operator==(const MultiPoly&) const = default;
};

MultiPoly add(const MultiPoly& a, const MultiPoly& b);
MultiPoly sub(const MultiPoly& a, const MultiPoly& b);
// degree_cap >= 0 drops product terms of larger total degree (safe for
// truncated series work since exponents are nonnegative).
MultiPoly mul(const MultiPoly& a, const MultiPoly& b, int degree_cap = -1);
MultiPoly scale(const MultiPoly& a, const Rat& r);

long total_degree(const std::vector<int>& expo);
bool is_homogeneous(const MultiPoly& a, long degree);
Rat eval(const MultiPoly& a, const std::vector<Rat>& point);

}  // namespace shiftedq
