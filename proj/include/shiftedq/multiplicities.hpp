#pragma once

#include "shiftedq/partitions.hpp"
#include "shiftedq/series.hpp"

namespace shiftedq {

// Graded and bigraded multiplicities of the simple spin module labelled by a
// strict partition of n inside the exterior-algebra twist of the polynomial
// ring on n letters.  With l = length and d = parity of l, the normalizing
// factor is 2^-((l + d)/2) (the exponent is always an integer).

// Multiplicity series in the full polynomial ring (symmetric algebra).
Series graded_mult_sym(const StrictPartition& shape, int trunc);

// Multiplicity polynomial in the coinvariant algebra:
// graded_mult_sym * prod_{k=1..n} (1 - t^k), computed by exact polynomial
// division.  Coefficients are checked to be nonnegative integers
// (std::logic_error otherwise).
Poly graded_mult_coinv(const StrictPartition& shape);

// Bigraded multiplicity (extra exterior alphabet, s tracks that grading).
BiSeries bigraded_mult(const StrictPartition& shape, int trunc);

// Multiplicity polynomial in the exterior algebra alone (s-polynomial).
Poly wedge_mult(const StrictPartition& shape);

// The two spin representations of the double cover split the multiplicity in
// half exactly when n is odd and the length is even.
bool spin_halved(const StrictPartition& shape);
Rat spin_factor(const StrictPartition& shape);  // 1 or 1/2

// Number of standard shifted tableaux (hook quotient).
Int g_hook(const StrictPartition& shape);

// Dimension of the simple module: 2^(n - (l - d)/2) * g.
Int dim_D(const StrictPartition& shape);

}  // namespace shiftedq
