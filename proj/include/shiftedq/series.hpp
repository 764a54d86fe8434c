#pragma once

#include "shiftedq/rational.hpp"

#include <string>
#include <vector>

namespace shiftedq {

// Truncated formal power series in one variable t with exact rational
// coefficients.  trunc is exclusive: coefficients of t^0 .. t^(trunc-1) are
// stored, everything beyond is unknown.  Binary operations require equal
// truncation; use truncate() to coerce explicitly.
struct Series {
  int trunc = 0;
  std::vector<Rat> c;

  Series() = default;
  explicit Series(int trunc_);
  static Series one(int trunc_);
  static Series monomial(int deg, const Rat& coeff, int trunc_);

  const Rat& coeff(int d) const;  // throws std::out_of_range for d >= trunc
  bool is_zero() const;
  bool operator==(const Series&) const = default;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);
Series scale(const Series& a, const Rat& r);
Series shift(const Series& a, int k);  // multiply by t^k
Series truncate(const Series& a, int trunc);
Series inv_one_minus(int k, int trunc);  // 1/(1 - t^k), k >= 1

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator*(const Series& a, const Series& b);

std::string to_string(const Series& a, const std::string& var = "t");

// Dense exact polynomials (coefficient of t^i at index i, no truncation).
// Normal form drops trailing zeros; the zero polynomial is the empty vector.
using Poly = std::vector<Rat>;

Poly poly_normalize(Poly p);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rat& r);
int poly_degree(const Poly& a);  // -1 for zero
Rat poly_eval(const Poly& a, const Rat& x);
// Exact division: throws std::domain_error when the remainder is nonzero.
Poly poly_divide_exact(const Poly& num, const Poly& den);
Series poly_to_series(const Poly& a, int trunc);
std::string to_string(const Poly& a, const std::string& var);

// Polynomial in s of degree <= sdeg whose coefficients are Series in t.
struct BiSeries {
  int sdeg = 0;
  int trunc = 0;
  std::vector<Series> rows;  // rows[q] = coefficient of s^q

  BiSeries() = default;
  BiSeries(int sdeg_, int trunc_);

  const Rat& coeff(int tdeg, int spow) const;
  bool operator==(const BiSeries&) const = default;
};

BiSeries add(const BiSeries& a, const BiSeries& b);
// s-degrees beyond sdeg are dropped (both operands must agree on sdeg/trunc).
BiSeries mul(const BiSeries& a, const BiSeries& b);
BiSeries scale(const BiSeries& a, const Rat& r);
BiSeries from_series(const Series& a, int sdeg);
// Collapse t -> s^2: the coefficient of s^d is the sum of coeff(p, q) over
// 2p + q = d.
Series substitute_t_equals_s_squared(const BiSeries& a, int strunc);
std::string to_string(const BiSeries& a);

// [u^n] of a product of u-polynomials whose u-coefficients are Series in t.
// factors[f][i] is the coefficient of u^i in factor f (missing entries are
// zero).  All Series must share the same truncation.
Series extract_u_coeff(const std::vector<std::vector<Series>>& factors, int n,
                       int trunc);

}  // namespace shiftedq
