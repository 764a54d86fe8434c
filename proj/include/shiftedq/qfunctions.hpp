#pragma once

#include "shiftedq/multipoly.hpp"
#include "shiftedq/partitions.hpp"

#include <map>
#include <vector>

namespace shiftedq {

// Strict-weak order "a comes before b when a > b lexicographically"; maps
// keyed this way iterate largest partition first (reverse-lexicographic).
struct LexGreaterVec {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    return lex_greater(a, b);
  }
};

// Symmetric polynomial recorded by its monomial coefficients: partition
// mu -> coefficient of z^mu (equivalently of the monomial basis element).
using MonomialExpansion = std::map<std::vector<int>, Rat, LexGreaterVec>;

// q_r in nvars variables: [u^r] prod_i (1 + z_i u) / (1 - z_i u).
MultiPoly q_r(int r, int nvars);
// Product q_{nu_1} q_{nu_2} ... (zero parts contribute the factor 1).
MultiPoly q_nu(const Composition& nu, int nvars);

// The Q-polynomial as the weight generating function of marked tableaux.
MultiPoly Q_tableau(const StrictPartition& shape, int nvars);

// The symmetrization formula evaluated at pairwise distinct sample points
// (size >= length of the shape):
//   2^l * sum over injections sigma of
//     prod_i z_sigma(i)^lambda_i * prod_{i, y not yet used}
//       (z_sigma(i) + z_y) / (z_sigma(i) - z_y).
Rat Q_symmetrized(const StrictPartition& shape, const std::vector<Rat>& points);

// Collapse a symmetric MultiPoly to monomial coordinates; throws
// std::domain_error when the input is not symmetric.
MonomialExpansion monomial_expand(const MultiPoly& p);

// Expansion in the Q basis, reverse-lexicographically sorted.
struct QExpansion {
  int degree = 0;
  std::map<std::vector<int>, Rat, LexGreaterVec> terms;  // strict partitions
  bool operator==(const QExpansion&) const = default;
};

// Triangular elimination against the Q_mu (mu strict of size n, largest
// first).  Each pivot (leading monomial z^mu with coefficient 2^length) is
// verified, not assumed.  Residual terms left at the end raise
// std::domain_error.  Requires nvars >= n so every monomial is visible.
QExpansion expand_in_Q_basis(const MonomialExpansion& f, int n, int nvars);

// Cauchy-type identity in ny + nz variables, compared exactly through total
// bidegree (n, n):
//   prod_{i,j} (1 + y_i z_j) / (1 - y_i z_j)
//     = sum over strict lambda of 2^(-length) Q_lambda(y) Q_lambda(z).
bool cauchy_check(int n, int ny, int nz);

// Characteristic of the degree-j slice of the symmetric-algebra module:
// the Q-expansion of sum of q_nu over canonical compositions nu of n with
// n(nu) = j.
QExpansion ch_sym_degree(int n, int j);

// Bidegree (p, q) slice with an exterior factor: the sum of q_alpha q_beta
// over alpha of n - q, beta of q with n(alpha) + n(beta) = p.
QExpansion ch_bigraded_degree(int n, int p, int q);

}  // namespace shiftedq
