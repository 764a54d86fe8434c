#pragma once

#include "shiftedq/partitions.hpp"
#include "shiftedq/series.hpp"

namespace shiftedq {

// Classical (unshifted) analogues over ordinary Young diagrams.

// Principal specialization of the Schur function via the hook product:
// t^n(lambda) / prod (1 - t^hook).
Series kirillov_series(const Partition& shape, int trunc);

// The same series as a sum over semistandard tableaux of t^(sum(entry - 1)),
// enumerated under a degree budget.
Series schur_principal(const Partition& shape, int trunc);

// Two-parameter refinement:
//   prod over cells (t^{row-1} + s t^{col-1}) / prod (1 - t^hook),
// a polynomial in s of degree <= |lambda| with t-series coefficients.
BiSeries kirillov_pak(const Partition& shape, int trunc);

// (1 + s)(1 + st) ... (1 + st^{n-1}) / ((1 - t) ... (1 - t^n)).
BiSeries solomon_series(int n, int trunc);

}  // namespace shiftedq
