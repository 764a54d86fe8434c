#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "shiftedq/partitions.hpp"
#include "shiftedq/specializations.hpp"
#include "shiftedq/tableaux.hpp"

#include <vector>

using namespace shiftedq;

namespace {

Series series_from(const std::vector<int>& coeffs) {
  Series s(static_cast<int>(coeffs.size()));
  for (size_t i = 0; i < coeffs.size(); ++i) s.c[i] = Rat(coeffs[i]);
  return s;
}

Poly poly_from(const std::vector<int>& coeffs) {
  Poly p;
  for (int c : coeffs) p.push_back(Rat(c));
  return poly_normalize(p);
}

}  // namespace

TEST_CASE("principal specialization, pinned values") {
  CHECK(Q_principal_hook(StrictPartition({2, 1}), 6) ==
        series_from({0, 4, 8, 12, 20, 28}));
  CHECK(Q_principal_hook(StrictPartition({1}), 5) ==
        series_from({2, 2, 2, 2, 2}));
  CHECK(Q_principal_hook(StrictPartition(), 4) == Series::one(4));
}

TEST_CASE("three independent routes agree") {
  for (int n = 0; n <= 6; ++n)
    for (const StrictPartition& s : enumerate_strict(n)) {
      const Series hook = Q_principal_hook(s, 12);
      CHECK(hook == Q_principal_pochhammer(s, 12));
      CHECK(hook == Q_principal_tableau(s, 12));
    }
}

TEST_CASE("hook denominator factorization and numerator restatement") {
  for (int n = 0; n <= 10; ++n)
    for (const StrictPartition& s : enumerate_strict(n)) {
      CHECK(shifted_hook_factorization_check(s, 16));
      CHECK(numer_restatement_check(s));
    }
}

TEST_CASE("lowest term is 2^length at t^n(lambda)") {
  for (int n = 0; n <= 7; ++n)
    for (const StrictPartition& s : enumerate_strict(n)) {
      const int lead = static_cast<int>(n_stat(s.parts));
      const Series q = Q_principal_hook(s, lead + 2);
      for (int d = 0; d < lead; ++d) CHECK(q.coeff(d) == Rat(0));
      CHECK(q.coeff(lead) == Rat(int_pow2(s.length())));
    }
}

TEST_CASE("two-alphabet specialization, pinned values") {
  const BiSeries b = Q_bigraded(StrictPartition({1}), 5);
  CHECK(b.sdeg == 1);
  CHECK(b.rows[0] == series_from({2, 2, 2, 2, 2}));
  CHECK(b.rows[1] == series_from({2, 2, 2, 2, 2}));

  const BiSeries e = Q_bigraded(StrictPartition(), 3);
  CHECK(e.sdeg == 0);
  CHECK(e.rows[0] == Series::one(3));
}

TEST_CASE("s^0 slice of the two-alphabet version is the principal one") {
  for (int n = 0; n <= 5; ++n)
    for (const StrictPartition& s : enumerate_strict(n)) {
      const BiSeries b = Q_bigraded(s, 8);
      CHECK(b.rows[0] == Q_principal_hook(s, 8));
    }
}

TEST_CASE("t^0 slice of the two-alphabet version is Q(1, s)") {
  for (int n = 0; n <= 6; ++n)
    for (const StrictPartition& s : enumerate_strict(n)) {
      const BiSeries b = Q_bigraded(s, 2);
      const Poly p = Q_one_s(s);
      for (int q = 0; q <= b.sdeg; ++q) {
        const Rat want =
            q < static_cast<int>(p.size()) ? p[q] : Rat(0);
        CHECK(b.coeff(0, q) == want);
      }
    }
}

TEST_CASE("two-alphabet version against a blocked-alphabet oracle") {
  // Q is symmetric in the union of the two alphabets, so evaluating with all
  // x-letters below all y-letters must give the same answer as the
  // interleaved order used internally.  Letters v <= M carry t^(v-1); letters
  // v > M carry s t^(v-M-1).
  const int trunc = 5;
  for (const StrictPartition& shape :
       {StrictPartition({2, 1}), StrictPartition({3})}) {
    const int n = shape.size();
    const int M = trunc + n;
    BiSeries acc(n, trunc);
    for (const ShiftedTableau& t : enumerate_marked(shape, M + trunc)) {
      long tdeg = 0;
      int sdeg = 0;
      for (const MarkedLetter& x : t.entries) {
        if (x.value <= M) {
          tdeg += x.value - 1;
        } else {
          ++sdeg;
          tdeg += x.value - M - 1;
        }
      }
      if (tdeg < trunc) acc.rows[sdeg].c[tdeg] += 1;
    }
    CHECK(acc == Q_bigraded(shape, trunc));
  }
}

TEST_CASE("substituting t = s^2 interleaves back into the principal series") {
  const int trunc = 6;
  for (const StrictPartition& shape :
       {StrictPartition({2, 1}), StrictPartition({3, 1}),
        StrictPartition({2})}) {
    const int strunc = 2 * trunc - 1;
    const Series sub =
        substitute_t_equals_s_squared(Q_bigraded(shape, trunc), strunc);
    CHECK(sub == Q_principal_hook(shape, strunc));
  }
}

TEST_CASE("Q at (1, s)") {
  CHECK(Q_one_s(StrictPartition()) == poly_from({1}));
  CHECK(Q_one_s(StrictPartition({1})) == poly_from({2, 2}));
  CHECK(Q_one_s(StrictPartition({2})) == poly_from({2, 4, 2}));
  CHECK(Q_one_s(StrictPartition({2, 1})) == poly_from({0, 4, 4}));
  CHECK(Q_one_s(StrictPartition({5, 2})) == poly_from({0, 0, 4, 8, 8, 4}));
  CHECK(Q_one_s(StrictPartition({3, 2, 1})) == Poly{});
  CHECK(Q_one_s(StrictPartition({4, 3, 1})) == Poly{});
  // one-row family: 2 (1 + s) (1 + s + ... + s^(n-1))
  for (int n = 1; n <= 6; ++n) {
    Poly geo(static_cast<size_t>(n), Rat(1));
    CHECK(Q_one_s(StrictPartition({n})) ==
          poly_mul(poly_from({2, 2}), geo));
  }
}

TEST_CASE("all-ones counts") {
  CHECK(Q_ones(StrictPartition({1}), 1) == 2);
  CHECK(Q_ones(StrictPartition({2}), 2) == 8);
  CHECK(Q_ones(StrictPartition({2, 1}), 2) == 8);
  CHECK(Q_ones(StrictPartition(), 3) == 1);
  CHECK(Q_ones(StrictPartition({2, 1}), 3) ==
        static_cast<long>(enumerate_marked(StrictPartition({2, 1}), 3).size()));
}
