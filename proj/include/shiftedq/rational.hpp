#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace shiftedq {

// All arithmetic in this library is exact.  Integers and rationals are
// arbitrary precision; rationals are kept in lowest terms with positive
// denominator by the backend.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// 2^e for e >= 0.
inline Int int_pow2(long e) {
  if (e < 0) throw std::invalid_argument("int_pow2: negative exponent");
  Int r = 1;
  r <<= static_cast<unsigned>(e);
  return r;
}

// base^e for integer e (negative e inverts; base must be nonzero then).
inline Rat rat_pow(const Rat& base, long e) {
  bool invert = e < 0;
  if (invert && base == 0)
    throw std::invalid_argument("rat_pow: zero base with negative exponent");
  unsigned long k = invert ? static_cast<unsigned long>(-(e + 1)) + 1
                           : static_cast<unsigned long>(e);
  Rat acc = 1, sq = base;
  while (k) {
    if (k & 1) acc *= sq;
    sq *= sq;
    k >>= 1;
  }
  return invert ? Rat(1) / acc : acc;
}

// True when the reduced denominator is a power of two (including 1).
inline bool denominator_is_power_of_two(const Rat& r) {
  Int d = denominator(r);
  return d > 0 && (d & (d - 1)) == 0;
}

// Canonical text form: "0", "-7", "3/2", ...
inline std::string rat_to_string(const Rat& r) { return r.str(); }

}  // namespace shiftedq
