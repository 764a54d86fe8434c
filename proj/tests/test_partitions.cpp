#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "shiftedq/partitions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

using namespace shiftedq;

TEST_CASE("constructors validate their invariants") {
  CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
  CHECK_THROWS_AS(StrictPartition({2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(StrictPartition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Composition({1, -1}), std::invalid_argument);
  CHECK(Partition({3, 3, 1}).size() == 7);
  CHECK(StrictPartition({4, 2, 1}).length() == 3);
  CHECK(StrictPartition({4, 2, 1}).as_partition() == Partition({4, 2, 1}));
  CHECK(Composition({1, 0, 2}).size() == 3);
  CHECK(Partition().size() == 0);
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition({4, 2, 1})) == Partition({3, 2, 1, 1}));
  CHECK(conjugate(Partition({3, 3})) == Partition({2, 2, 2}));
  CHECK(conjugate(Partition()) == Partition());
  for (int n = 0; n <= 8; ++n)
    for (const Partition& p : enumerate_partitions(n))
      CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("frobenius coordinates") {
  const Frobenius f = frobenius(Partition({4, 2, 1}));
  CHECK(f.arm == std::vector<int>{3, 0});
  CHECK(f.leg == std::vector<int>{2, 0});
  CHECK(from_frobenius(f) == Partition({4, 2, 1}));
  for (int n = 0; n <= 8; ++n)
    for (const Partition& p : enumerate_partitions(n))
      CHECK(from_frobenius(frobenius(p)) == p);
}

TEST_CASE("doubled shape") {
  CHECK(double_partition(StrictPartition({1})) == Partition({2}));
  CHECK(double_partition(StrictPartition({2, 1})) == Partition({3, 3}));
  CHECK(double_partition(StrictPartition({4, 2, 1})) ==
        Partition({5, 4, 4, 1}));
  CHECK(double_partition(StrictPartition()) == Partition());
  for (int n = 0; n <= 10; ++n)
    for (const StrictPartition& s : enumerate_strict(n)) {
      const Partition d = double_partition(s);
      CHECK(d.size() == 2 * s.size());
      // Frobenius coordinates of the double are (l_i | l_i - 1).
      const Frobenius f = frobenius(d);
      CHECK(f.arm == s.parts);
      std::vector<int> legs = s.parts;
      for (int& v : legs) --v;
      CHECK(f.leg == legs);
    }
}

TEST_CASE("cell lists and membership") {
  const Partition p({3, 1});
  CHECK(young_cells(p) ==
        std::vector<Cell>{{1, 1}, {1, 2}, {1, 3}, {2, 1}});
  CHECK(in_young(p, Cell{1, 3}));
  CHECK(!in_young(p, Cell{2, 2}));
  CHECK(!in_young(p, Cell{0, 1}));

  const StrictPartition s({3, 1});
  CHECK(shifted_cells(s) ==
        std::vector<Cell>{{1, 1}, {1, 2}, {1, 3}, {2, 2}});
  CHECK(in_shifted(s, Cell{2, 2}));
  CHECK(!in_shifted(s, Cell{2, 1}));
  CHECK(!in_shifted(s, Cell{2, 3}));
}

TEST_CASE("ordinary hooks") {
  const Partition p({4, 2, 1});
  const std::vector<std::vector<int>> want = {{6, 4, 2, 1}, {3, 1}, {1}};
  for (Cell c : young_cells(p))
    CHECK(hook(p, c) == want[c.row - 1][c.col - 1]);
  CHECK_THROWS_AS(hook(p, Cell{2, 3}), std::invalid_argument);
}

TEST_CASE("shifted hooks match the doubled-shape definition") {
  const StrictPartition s({4, 2, 1});
  const std::vector<std::vector<int>> want = {{6, 5, 4, 1}, {3, 2}, {1}};
  for (Cell c : shifted_cells(s))
    CHECK(shifted_hook(s, c) == want[c.row - 1][c.col - c.row]);
  CHECK(shifted_hook(s, Cell{1, 1}) == 6);
  CHECK(shifted_hook(s, Cell{1, 2}) == 5);
  CHECK(shifted_hook(s, Cell{1, 3}) == 4);
  CHECK(shifted_hook(s, Cell{1, 4}) == 1);
  CHECK(shifted_hook(s, Cell{2, 2}) == 3);
  CHECK(shifted_hook(s, Cell{2, 3}) == 2);
  CHECK(shifted_hook(s, Cell{3, 3}) == 1);
}

TEST_CASE("shifted hooks row multiset rule") {
  // Independent characterization: the hooks in row i form the multiset
  // {1..l_i} plus {l_i + l_j : j > i} minus {l_i - l_j : j > i}.
  for (int n = 0; n <= 10; ++n)
    for (const StrictPartition& s : enumerate_strict(n)) {
      for (int i = 0; i < s.length(); ++i) {
        std::multiset<int> got;
        for (Cell c : shifted_cells(s))
          if (c.row == i + 1) got.insert(shifted_hook(s, c));
        std::multiset<int> want;
        for (int v = 1; v <= s.parts[i]; ++v) want.insert(v);
        for (int j = i + 1; j < s.length(); ++j)
          want.insert(s.parts[i] + s.parts[j]);
        for (int j = i + 1; j < s.length(); ++j) {
          auto it = want.find(s.parts[i] - s.parts[j]);
          REQUIRE(it != want.end());
          want.erase(it);
        }
        CHECK(got == want);
      }
    }
}

TEST_CASE("content and statistics") {
  CHECK(content(Cell{2, 5}) == 3);
  CHECK(content(Cell{3, 1}) == -2);
  CHECK(n_stat({4, 2, 1}) == 4);
  CHECK(n_stat({}) == 0);
  CHECK(n_stat({5}) == 0);
  CHECK(delta(StrictPartition({4, 2, 1})) == 1);
  CHECK(delta(StrictPartition({4, 2})) == 0);
  CHECK(delta(StrictPartition()) == 0);
}

TEST_CASE("strict partition enumeration") {
  const std::vector<int> counts = {1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15};
  for (int n = 0; n < static_cast<int>(counts.size()); ++n)
    CHECK(static_cast<int>(enumerate_strict(n).size()) == counts[n]);
  CHECK(enumerate_strict(0) == std::vector<StrictPartition>{StrictPartition()});
  CHECK(enumerate_strict(4) ==
        std::vector<StrictPartition>{StrictPartition({4}),
                                     StrictPartition({3, 1})});
  CHECK(enumerate_strict(6) ==
        std::vector<StrictPartition>{
            StrictPartition({6}), StrictPartition({5, 1}),
            StrictPartition({4, 2}), StrictPartition({3, 2, 1})});
  for (const StrictPartition& s : enumerate_strict(9)) CHECK(s.size() == 9);
}

TEST_CASE("partition enumeration") {
  const std::vector<int> counts = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n < static_cast<int>(counts.size()); ++n)
    CHECK(static_cast<int>(enumerate_partitions(n).size()) == counts[n]);
  CHECK(enumerate_partitions(4) ==
        std::vector<Partition>{Partition({4}), Partition({3, 1}),
                               Partition({2, 2}), Partition({2, 1, 1}),
                               Partition({1, 1, 1, 1})});
  // reverse-lexicographic: each shape beats its successor
  const auto list = enumerate_partitions(7);
  for (size_t i = 0; i + 1 < list.size(); ++i)
    CHECK(lex_greater(list[i].parts, list[i + 1].parts));
}

TEST_CASE("composition enumeration") {
  const auto list = enumerate_compositions(3, 3);
  const std::vector<Composition> want = {
      Composition({3}),       Composition({0, 3}),    Composition({1, 2}),
      Composition({2, 1}),    Composition({0, 0, 3}), Composition({0, 1, 2}),
      Composition({0, 2, 1}), Composition({1, 0, 2}), Composition({1, 1, 1}),
      Composition({2, 0, 1})};
  CHECK(list == want);
  CHECK(enumerate_compositions(0, 5) ==
        std::vector<Composition>{Composition()});
  // count is C(n + L - 1, L - 1) once padded to exactly L slots
  CHECK(enumerate_compositions(4, 3).size() == 15);
  CHECK(enumerate_compositions(2, 4).size() == 10);
  for (const Composition& c : enumerate_compositions(5, 4)) {
    CHECK(c.size() == 5);
    if (!c.parts.empty()) CHECK(c.parts.back() > 0);
  }
}

TEST_CASE("lexicographic order and formatting") {
  CHECK(lex_greater({2, 1}, {1, 1, 1}));
  CHECK(lex_greater({1, 1, 1}, {1, 1}));
  CHECK(!lex_greater({1, 1}, {1, 1}));
  CHECK(lex_greater({3}, {2, 9}));
  CHECK(!lex_greater({}, {1}));
  CHECK(format_parts({4, 2, 1}) == "4,2,1");
  CHECK(format_parts({}) == "0");
  CHECK(format_parts({7}) == "7");
}
