#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "shiftedq/qfunctions.hpp"
#include "shiftedq/tableaux.hpp"

#include <stdexcept>
#include <vector>

using namespace shiftedq;

TEST_CASE("one-row generating functions") {
  CHECK(q_r(0, 3) == MultiPoly::constant(3, Rat(1)));

  // q_1 = 2(z1 + z2)
  const MultiPoly q1 = q_r(1, 2);
  CHECK(q1.terms.size() == 2);
  CHECK(q1.terms.at({1, 0}) == Rat(2));
  CHECK(q1.terms.at({0, 1}) == Rat(2));

  // q_2 in one variable: (1 + zu)/(1 - zu) = 1 + 2zu + 2z^2u^2 + ...
  const MultiPoly q2 = q_r(2, 1);
  CHECK(q2.terms.at({2}) == Rat(2));
  CHECK(q2.terms.size() == 1);

  // more variables than the degree needs
  const MultiPoly q1w = q_r(1, 4);
  CHECK(q1w.terms.size() == 4);
}

TEST_CASE("euler relation") {
  // sum_{r=0}^{m} (-1)^r q_r q_{m-r} = 0 for m >= 1 (odd m is trivial,
  // even m is the real content).
  const int nvars = 3;
  for (int m = 1; m <= 5; ++m) {
    MultiPoly acc = MultiPoly::zero(nvars);
    for (int r = 0; r <= m; ++r) {
      const MultiPoly prod = mul(q_r(r, nvars), q_r(m - r, nvars));
      acc = r % 2 ? sub(acc, prod) : add(acc, prod);
    }
    CHECK(acc.is_zero());
  }
}

TEST_CASE("products of one-row functions") {
  const MultiPoly p = q_nu(Composition({2, 1}), 3);
  const MonomialExpansion m = monomial_expand(p);
  MonomialExpansion want;
  want[{3}] = Rat(4);
  want[{2, 1}] = Rat(12);
  want[{1, 1, 1}] = Rat(24);
  CHECK(m == want);

  // zero parts are unit factors
  CHECK(q_nu(Composition({2, 0, 1}), 3) == q_nu(Composition({2, 1}), 3));
  CHECK(q_nu(Composition(), 2) == MultiPoly::constant(2, Rat(1)));
}

TEST_CASE("Q as a tableau generating function") {
  const MultiPoly q21_2 = Q_tableau(StrictPartition({2, 1}), 2);
  MonomialExpansion want2;
  want2[{2, 1}] = Rat(4);
  CHECK(monomial_expand(q21_2) == want2);

  const MultiPoly q21_3 = Q_tableau(StrictPartition({2, 1}), 3);
  MonomialExpansion want3;
  want3[{2, 1}] = Rat(4);
  want3[{1, 1, 1}] = Rat(8);
  CHECK(monomial_expand(q21_3) == want3);

  CHECK(Q_tableau(StrictPartition(), 2) == MultiPoly::constant(2, Rat(1)));

  // coefficient of z^lambda is 2^length
  for (int n = 1; n <= 6; ++n)
    for (const StrictPartition& s : enumerate_strict(n)) {
      const MonomialExpansion m = monomial_expand(Q_tableau(s, n));
      CHECK(m.at(s.parts) == Rat(int_pow2(s.length())));
      // every monomial partition is dominated in the lex order
      for (const auto& [mu, c] : m) CHECK(!lex_greater(mu, s.parts));
    }
}

TEST_CASE("symmetrization formula matches the tableau sum") {
  const std::vector<Rat> pts2 = {Rat(1), Rat(2)};
  CHECK(Q_symmetrized(StrictPartition({1}), pts2) == Rat(6));

  const std::vector<Rat> pts3 = {Rat(1), Rat(2), Rat(3)};
  for (int n = 1; n <= 5; ++n)
    for (const StrictPartition& s : enumerate_strict(n)) {
      if (s.length() > 3) continue;
      CHECK(Q_symmetrized(s, pts3) == eval(Q_tableau(s, 3), pts3));
    }

  CHECK_THROWS_AS(Q_symmetrized(StrictPartition({1}), {Rat(2), Rat(2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Q_symmetrized(StrictPartition({2, 1}), {Rat(1)}),
                  std::invalid_argument);
}

TEST_CASE("monomial collapse rejects asymmetric input") {
  MultiPoly p = MultiPoly::variable(2, 0);  // z1 alone
  CHECK_THROWS_AS(monomial_expand(p), std::domain_error);
  // symmetric but with mismatched orbit coefficients
  p = add(p, scale(MultiPoly::variable(2, 1), Rat(2)));  // z1 + 2 z2
  CHECK_THROWS_AS(monomial_expand(p), std::domain_error);
}

TEST_CASE("expansion in the Q basis") {
  const int n = 3, nvars = 3;
  const QExpansion e =
      expand_in_Q_basis(monomial_expand(q_nu(Composition({2, 1}), nvars)), n,
                        nvars);
  CHECK(e.degree == 3);
  REQUIRE(e.terms.size() == 2);
  CHECK(e.terms.at({3}) == Rat(2));
  CHECK(e.terms.at({2, 1}) == Rat(1));

  const QExpansion single =
      expand_in_Q_basis(monomial_expand(q_nu(Composition({3}), nvars)), n,
                        nvars);
  REQUIRE(single.terms.size() == 1);
  CHECK(single.terms.at({3}) == Rat(1));

  // Q_lambda itself expands as a unit vector
  const QExpansion self = expand_in_Q_basis(
      monomial_expand(Q_tableau(StrictPartition({2, 1}), nvars)), n, nvars);
  REQUIRE(self.terms.size() == 1);
  CHECK(self.terms.at({2, 1}) == Rat(1));

  // m_(1,1) is not in the span of degree-2 Q functions
  MonomialExpansion outside;
  outside[{1, 1}] = Rat(1);
  CHECK_THROWS_AS(expand_in_Q_basis(outside, 2, 2), std::domain_error);

  // inhomogeneous input is rejected up front
  MonomialExpansion mixed;
  mixed[{2}] = Rat(1);
  mixed[{1}] = Rat(1);
  CHECK_THROWS_AS(expand_in_Q_basis(mixed, 2, 2), std::invalid_argument);
}

TEST_CASE("graded characteristic sums") {
  // n = 2: compositions nu of 2 with n(nu) = j are (2 - j zeros ...); each j
  // admits exactly j + 1 of them once interior zeros are allowed, and every
  // q_nu expands with Q_(2)-coefficient 1.
  for (int j = 0; j <= 4; ++j) {
    const QExpansion e = ch_sym_degree(2, j);
    CHECK(e.terms.at({2}) == Rat(j + 1));
  }
  // n = 1: single cell in both factors
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 1; ++q) {
      const QExpansion e = ch_bigraded_degree(1, p, q);
      CHECK(e.terms.at({1}) == Rat(1));
    }
  CHECK_THROWS_AS(ch_sym_degree(0, 0), std::invalid_argument);
}

TEST_CASE("cauchy identity on two variables per alphabet") {
  CHECK(cauchy_check(2, 2, 2));
  CHECK(cauchy_check(3, 2, 2));
}
