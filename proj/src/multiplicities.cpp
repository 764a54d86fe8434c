#include "shiftedq/multiplicities.hpp"

#include "shiftedq/specializations.hpp"
#include "shiftedq/tableaux.hpp"

#include <stdexcept>

namespace shiftedq {

namespace {

// 2^-((l + delta)/2); the exponent is an integer since l + delta is even.
Rat norm_factor(const StrictPartition& shape) {
  const int e = (shape.length() + delta(shape)) / 2;
  return Rat(1, int_pow2(e));
}

}  // namespace

Series graded_mult_sym(const StrictPartition& shape, int trunc) {
  return scale(Q_principal_hook(shape, trunc), norm_factor(shape));
}

Poly graded_mult_coinv(const StrictPartition& shape) {
  const int n = shape.size();
  Poly num(static_cast<size_t>(n_stat(shape.parts)) + 1, Rat(0));
  num.back() = 1;
  for (Cell c : shifted_cells(shape)) {
    Poly f(static_cast<size_t>(content(c)) + 1, Rat(0));
    f[0] = 1;
    f[content(c)] += 1;
    num = poly_mul(num, f);
  }
  for (int k = 1; k <= n; ++k) {
    Poly f(static_cast<size_t>(k) + 1, Rat(0));
    f[0] = 1;
    f[k] = -1;
    num = poly_mul(num, f);
  }
  Poly den = {Rat(1)};
  for (Cell c : shifted_cells(shape)) {
    const int h = shifted_hook(shape, c);
    Poly f(static_cast<size_t>(h) + 1, Rat(0));
    f[0] = 1;
    f[h] = -1;
    den = poly_mul(den, f);
  }
  Poly out = poly_scale(poly_divide_exact(num, den), norm_factor(shape));
  for (size_t i = 0; i < out.size(); ++i) {
    if (denominator(out[i]) != 1)
      throw std::logic_error("graded_mult_coinv: non-integral coefficient " +
                             rat_to_string(out[i]) + " at degree " +
                             std::to_string(i));
    if (out[i] < 0)
      throw std::logic_error("graded_mult_coinv: negative coefficient at "
                             "degree " +
                             std::to_string(i));
  }
  return out;
}

BiSeries bigraded_mult(const StrictPartition& shape, int trunc) {
  return scale(Q_bigraded(shape, trunc), norm_factor(shape));
}

Poly wedge_mult(const StrictPartition& shape) {
  return poly_scale(Q_one_s(shape), norm_factor(shape));
}

bool spin_halved(const StrictPartition& shape) {
  return shape.size() % 2 == 1 && shape.length() % 2 == 0;
}

Rat spin_factor(const StrictPartition& shape) {
  return spin_halved(shape) ? Rat(1, 2) : Rat(1);
}

Int g_hook(const StrictPartition& shape) {
  return count_standard_hook(shape);
}

Int dim_D(const StrictPartition& shape) {
  const int n = shape.size();
  const int e = n - (shape.length() - delta(shape)) / 2;
  return int_pow2(e) * g_hook(shape);
}

}  // namespace shiftedq
