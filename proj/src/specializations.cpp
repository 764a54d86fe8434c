#include "shiftedq/specializations.hpp"

#include "shiftedq/multipoly.hpp"
#include "shiftedq/qfunctions.hpp"
#include "shiftedq/tableaux.hpp"

#include <stdexcept>

namespace shiftedq {

Series Q_principal_hook(const StrictPartition& shape, int trunc) {
  Series out = Series::monomial(static_cast<int>(n_stat(shape.parts)), 1,
                                trunc);
  for (Cell c : shifted_cells(shape)) {
    Series factor = Series::one(trunc);
    if (content(c) < trunc) factor.c[content(c)] += 1;  // 1 + t^content
    out = mul(out, factor);
    out = mul(out, inv_one_minus(shifted_hook(shape, c), trunc));
  }
  return out;
}

Series Q_principal_pochhammer(const StrictPartition& shape, int trunc) {
  Series out = Series::one(trunc);
  for (int part : shape.parts) {
    // (-1; t)_part = prod_{a=0..part-1} (1 + t^a); the a = 0 factor is 2.
    for (int a = 0; a < part; ++a) {
      Series f = Series::one(trunc);
      if (a < trunc) f.c[a] += 1;
      out = mul(out, f);
    }
    // 1 / (t; t)_part = prod_{a=1..part} 1/(1 - t^a).
    for (int a = 1; a <= part; ++a) out = mul(out, inv_one_minus(a, trunc));
  }
  const int l = shape.length();
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) {
      const int li = shape.parts[i], lj = shape.parts[j];
      Series numer(trunc);  // t^lj - t^li
      if (lj < trunc) numer.c[lj] += 1;
      if (li < trunc) numer.c[li] -= 1;
      out = mul(out, numer);
      out = mul(out, inv_one_minus(li + lj, trunc));
    }
  return out;
}

Series Q_principal_tableau(const StrictPartition& shape, int trunc) {
  if (trunc < 1)
    throw std::invalid_argument("Q_principal_tableau: trunc must be >= 1");
  const int n = shape.size();
  const long budget = static_cast<long>(trunc) - 1 + n;
  Series marked_sum(trunc), colored_sum(trunc);
  for_each_marked_budget(shape, budget, [&](const ShiftedTableau& t) {
    long d = degree(t) - n;
    if (d < trunc) marked_sum.c[d] += 1;
  });
  for_each_colored_budget(shape, budget, [&](const ShiftedTableau& t) {
    long d = degree(t) - n;
    if (d < trunc) colored_sum.c[d] += 1;
  });
  if (!(marked_sum == colored_sum))
    throw std::logic_error(
        "Q_principal_tableau: marked and colored sums disagree for shape (" +
        format_parts(shape.parts) + ")");
  return marked_sum;
}

bool shifted_hook_factorization_check(const StrictPartition& shape,
                                      int trunc) {
  Series lhs = Series::one(trunc);
  for (Cell c : shifted_cells(shape))
    lhs = mul(lhs, inv_one_minus(shifted_hook(shape, c), trunc));

  Series rhs = Series::one(trunc);
  for (int part : shape.parts)
    for (int a = 1; a <= part; ++a) rhs = mul(rhs, inv_one_minus(a, trunc));
  const int l = shape.length();
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) {
      const int li = shape.parts[i], lj = shape.parts[j];
      Series numer = Series::one(trunc);  // 1 - t^(li - lj)
      if (li - lj < trunc) numer.c[li - lj] -= 1;
      rhs = mul(rhs, numer);
      rhs = mul(rhs, inv_one_minus(li + lj, trunc));
    }
  return lhs == rhs;
}

bool numer_restatement_check(const StrictPartition& shape) {
  Poly lhs = {Rat(1)};
  for (Cell c : shifted_cells(shape)) {
    Poly f(static_cast<size_t>(std::max(c.row, c.col)), Rat(0));
    f[c.row - 1] += 1;
    f[c.col - 1] += 1;  // t^(row-1) + t^(col-1)
    lhs = poly_mul(lhs, f);
  }
  Poly rhs(static_cast<size_t>(n_stat(shape.parts)) + 1, Rat(0));
  rhs.back() = 1;  // t^n(shape)
  for (Cell c : shifted_cells(shape)) {
    Poly f(static_cast<size_t>(content(c)) + 1, Rat(0));
    f[0] = 1;
    f[content(c)] += 1;  // 1 + t^content
    rhs = poly_mul(rhs, f);
  }
  return poly_normalize(lhs) == rhs;
}

BiSeries Q_bigraded(const StrictPartition& shape, int trunc) {
  if (trunc < 1)
    throw std::invalid_argument("Q_bigraded: trunc must be >= 1");
  const int n = shape.size();
  BiSeries out(n, trunc);
  // Letter v is given the value t^((v-1)/2), carrying a factor of s when v
  // is even; the t-cost of a tableau then bounds its plain degree, so the
  // degree-budget enumeration covers everything below the truncation.
  const long budget = 2L * (trunc - 1) + 2L * n;
  for_each_marked_budget(shape, budget, [&](const ShiftedTableau& t) {
    long p = 0, q = 0;
    for (const MarkedLetter& x : t.entries) {
      p += (x.value - 1) / 2;
      q += (x.value % 2 == 0) ? 1 : 0;
    }
    if (p < trunc) out.rows[q].c[p] += 1;
  });
  return out;
}

Poly Q_one_s(const StrictPartition& shape) {
  const int l = shape.length();
  Poly closed;
  if (l == 0) {
    closed = {Rat(1)};
  } else if (l <= 2) {
    const int k = shape.parts[0];
    const int low = l == 2 ? shape.parts[1] : 0;
    Poly geo(static_cast<size_t>(k), Rat(0));  // s^low + ... + s^(k-1)
    for (int a = low; a < k; ++a) geo[a] = 1;
    closed = poly_scale(poly_mul({Rat(1), Rat(1)}, geo), Rat(int_pow2(l)));
  }  // three or more rows: identically zero

  // Direct check: evaluate the two-variable weight generating function at
  // (1, s).
  Poly direct;
  for (const auto& [e, c] : Q_tableau(shape, 2).terms) {
    size_t deg = static_cast<size_t>(e[1]);
    if (direct.size() <= deg) direct.resize(deg + 1, Rat(0));
    direct[deg] += c;
  }
  direct = poly_normalize(direct);
  if (!(direct == closed))
    throw std::logic_error("Q_one_s: closed form disagrees with the "
                           "two-variable evaluation for shape (" +
                           format_parts(shape.parts) + ")");
  return closed;
}

Int Q_ones(const StrictPartition& shape, int max_letter) {
  Int count = static_cast<long>(enumerate_marked(shape, max_letter).size());
  std::vector<Rat> ones(static_cast<size_t>(max_letter), Rat(1));
  Rat via_eval = eval(Q_tableau(shape, max_letter), ones);
  if (via_eval != Rat(count))
    throw std::logic_error("Q_ones: enumeration and evaluation disagree");
  return count;
}

}  // namespace shiftedq
