#pragma once

#include "shiftedq/partitions.hpp"
#include "shiftedq/series.hpp"

namespace shiftedq {

// Three independent routes to the principal specialization
// Q_lambda(1, t, t^2, ...) as a series in t.

// Hook-content product: t^n(lambda) prod (1 + t^content) / prod (1 - t^h*),
// over the cells of the shifted diagram.
Series Q_principal_hook(const StrictPartition& shape, int trunc);

// q-Pochhammer product:
//   prod_i (-1; t)_{lambda_i} / (t; t)_{lambda_i}
//   * prod_{i<j} (t^lambda_j - t^lambda_i) / (1 - t^{lambda_i + lambda_j}).
Series Q_principal_pochhammer(const StrictPartition& shape, int trunc);

// Tableau sum: t^{-|lambda|} * sum over marked tableaux of t^degree,
// enumerated under a degree budget.  Internally also sums over colored
// tableaux and insists both sums agree (std::logic_error otherwise).
Series Q_principal_tableau(const StrictPartition& shape, int trunc);

// prod 1/(1 - t^h*)  ==  1/prod_i (t; t)_{lambda_i}
//                        * prod_{i<j} (1 - t^{lambda_i - lambda_j})
//                                   / (1 - t^{lambda_i + lambda_j}).
bool shifted_hook_factorization_check(const StrictPartition& shape, int trunc);

// prod over shifted cells of (t^{row-1} + t^{col-1})  ==
//   t^n(lambda) * prod (1 + t^content), as exact polynomials.
bool numer_restatement_check(const StrictPartition& shape);

// Two-alphabet specialization Q_lambda(1, t, t^2, ...; s, st, st^2, ...):
// a polynomial in s of degree <= |lambda| with t-series coefficients.
BiSeries Q_bigraded(const StrictPartition& shape, int trunc);

// Q_lambda(1, s) as an exact polynomial: 0 unless the shape has at most two
// rows, in which case (k = lambda_1, l = lambda_2 or 0)
//   2^length (1 + s)(s^l + s^(l+1) + ... + s^(k-1)).
// The closed form is checked against the direct two-variable evaluation.
Poly Q_one_s(const StrictPartition& shape);

// Q_lambda(1^max_letter): tableau count, cross-checked against the evaluated
// weight generating function.
Int Q_ones(const StrictPartition& shape, int max_letter);

}  // namespace shiftedq
