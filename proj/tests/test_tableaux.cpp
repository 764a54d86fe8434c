#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "shiftedq/io.hpp"
#include "shiftedq/tableaux.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

using namespace shiftedq;

namespace {

// Canonical key for set comparisons.
std::vector<int> keys_of(const ShiftedTableau& t) {
  std::vector<int> k;
  for (const MarkedLetter& x : t.entries) k.push_back(x.key());
  return k;
}

std::set<std::vector<int>> key_set(const std::vector<ShiftedTableau>& list) {
  std::set<std::vector<int>> out;
  for (const ShiftedTableau& t : list) out.insert(keys_of(t));
  return out;
}

// Every filling of the shape by letters of value <= max_letter, kept when the
// validator accepts it: an oracle that shares nothing with the enumerator.
std::set<std::vector<int>> filter_all_fillings(const StrictPartition& shape,
                                               int max_letter, bool colored) {
  std::vector<MarkedLetter> alphabet;
  for (int v = 1; v <= max_letter; ++v) {
    alphabet.push_back({v, true});
    alphabet.push_back({v, false});
  }
  const int n = shape.size();
  std::set<std::vector<int>> out;
  std::vector<int> pick(static_cast<size_t>(n), 0);
  while (true) {
    ShiftedTableau t{shape, {}};
    for (int i = 0; i < n; ++i) t.entries.push_back(alphabet[pick[i]]);
    const Validation v = colored ? validate_colored(t) : validate_marked(t);
    if (v.ok) out.insert(keys_of(t));
    int i = 0;
    while (i < n && pick[i] + 1 == static_cast<int>(alphabet.size()))
      pick[i++] = 0;
    if (i == n) break;
    ++pick[i];
  }
  return out;
}

}  // namespace

TEST_CASE("letter order and keys") {
  const MarkedLetter m1{1, true}, u1{1, false}, m2{2, true}, u2{2, false};
  CHECK(m1.key() == 1);
  CHECK(u1.key() == 2);
  CHECK(m2.key() == 3);
  CHECK(u2.key() == 4);
  CHECK(m1 < u1);
  CHECK(u1 < m2);
  CHECK(m2 < u2);
  CHECK(u1 <= u1);
  CHECK(to_string(m2) == "2'");
  CHECK(to_string(u2) == "2");
}

TEST_CASE("cell access") {
  const ShiftedTableau t = parse_tableau_text("1' 1\n2\n");
  CHECK(t.shape == StrictPartition({2, 1}));
  CHECK(t.at(1, 1) == MarkedLetter{1, true});
  CHECK(t.at(1, 2) == MarkedLetter{1, false});
  CHECK(t.at(2, 2) == MarkedLetter{2, false});
  CHECK_THROWS_AS(t.at(2, 1), std::out_of_range);
  CHECK_THROWS_AS(t.at(1, 3), std::out_of_range);
  CHECK(t.max_value() == 2);
  CHECK(ShiftedTableau{}.max_value() == 0);
}

TEST_CASE("marked validation") {
  const ShiftedTableau good =
      parse_tableau_text("1' 1 2' 2 2\n2' 2 3' 3\n3' 3\n");
  CHECK(validate_marked(good).ok);

  const Validation row_dec = validate_marked(parse_tableau_text("2 1\n"));
  CHECK(!row_dec.ok);
  CHECK(row_dec.reason.substr(0, 2) == "M1");

  const Validation col_dec =
      validate_marked(parse_tableau_text("1 1\n1\n"));
  // column 2 holds unmarked 1 twice: equal is fine for M1 but violates M2
  CHECK(!col_dec.ok);
  CHECK(col_dec.reason.substr(0, 2) == "M2");

  const Validation marked_rep = validate_marked(parse_tableau_text("1' 1'\n"));
  CHECK(!marked_rep.ok);
  CHECK(marked_rep.reason.substr(0, 2) == "M3");

  const Validation col_order =
      validate_marked(parse_tableau_text("1 2\n1\n"));
  CHECK(!col_order.ok);
  CHECK(col_order.reason.substr(0, 2) == "M1");

  // shape/entry mismatch
  ShiftedTableau bad{StrictPartition({2}), {MarkedLetter{1, false}}};
  CHECK_THROWS_AS(validate_marked(bad), std::invalid_argument);
}

TEST_CASE("colored validation and bar values") {
  const ShiftedTableau image =
      parse_tableau_text("1' 2' 3' 1 2\n2' 2 2 3\n3' 3\n");
  CHECK(validate_colored(image).ok);
  CHECK(bar_values(image) ==
        std::vector<int>{0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0});
  CHECK(bar_value(MarkedLetter{3, true}, Cell{1, 2}) == 1);
  CHECK(bar_value(MarkedLetter{3, false}, Cell{2, 4}) == 1);

  const Validation neg = validate_colored(parse_tableau_text("1 1'\n"));
  CHECK(!neg.ok);
  CHECK(neg.reason.find("negative") != std::string::npos);

  const Validation dec = validate_colored(parse_tableau_text("2 1\n"));
  CHECK(!dec.ok);
  CHECK(dec.reason.find("row") != std::string::npos);

  // marked tableaux are generally not colored and vice versa
  const ShiftedTableau marked =
      parse_tableau_text("1' 1 2' 2 2\n2' 2 3' 3\n3' 3\n");
  CHECK(!validate_colored(marked).ok);
  CHECK(!validate_marked(image).ok);
}

TEST_CASE("weight and degree") {
  const ShiftedTableau t =
      parse_tableau_text("1' 1 2' 2 2\n2' 2 3' 3\n3' 3\n");
  CHECK(weight(t) == Composition({2, 5, 4}));
  CHECK(weight(t, 5) == Composition({2, 5, 4, 0, 0}));
  CHECK(degree(t) == 2 * 1 + 5 * 2 + 4 * 3);
  CHECK(weight(ShiftedTableau{}) == Composition());
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_marked(StrictPartition({2, 1}), 2).size() == 8);
  CHECK(enumerate_colored(StrictPartition({2, 1}), 2).size() == 8);
  CHECK(enumerate_marked(StrictPartition({1}), 3).size() == 6);
  CHECK(enumerate_colored(StrictPartition({1}), 3).size() == 6);
  CHECK(enumerate_marked(StrictPartition({2, 1}), 1).empty());
  CHECK(enumerate_marked(StrictPartition(), 3).size() == 1);

  // weight distribution for (2,1) with letters up to 2
  std::map<std::vector<int>, int> dist;
  for (const ShiftedTableau& t : enumerate_marked(StrictPartition({2, 1}), 2))
    ++dist[weight(t, 2).parts];
  CHECK(dist == std::map<std::vector<int>, int>{{{2, 1}, 4}, {{1, 2}, 4}});

  std::map<std::vector<int>, int> cdist;
  for (const ShiftedTableau& t : enumerate_colored(StrictPartition({2, 1}), 2))
    ++cdist[weight(t, 2).parts];
  CHECK(cdist == dist);
}

TEST_CASE("enumerators agree with the validator filter") {
  const std::vector<std::pair<StrictPartition, int>> cases = {
      {StrictPartition({2, 1}), 3},
      {StrictPartition({3, 1}), 2},
      {StrictPartition({2}), 4}};
  for (const auto& [shape, m] : cases) {
    CHECK(key_set(enumerate_marked(shape, m)) ==
          filter_all_fillings(shape, m, false));
    CHECK(key_set(enumerate_colored(shape, m)) ==
          filter_all_fillings(shape, m, true));
  }
}

TEST_CASE("budget enumeration") {
  const StrictPartition shape({2, 1});
  const long budget = 7;
  // Any entry value is at most the total degree, so letters up to `budget`
  // see every tableau the budget enumeration may emit.
  std::set<std::vector<int>> filtered;
  for (const ShiftedTableau& t :
       enumerate_marked(shape, static_cast<int>(budget)))
    if (degree(t) <= budget) filtered.insert(keys_of(t));
  const auto budgeted = enumerate_marked_budget(shape, budget);
  CHECK(key_set(budgeted) == filtered);
  for (const ShiftedTableau& t : budgeted) CHECK(degree(t) <= budget);

  std::set<std::vector<int>> cfiltered;
  for (const ShiftedTableau& t :
       enumerate_colored(shape, static_cast<int>(budget)))
    if (degree(t) <= budget) cfiltered.insert(keys_of(t));
  CHECK(key_set(enumerate_colored_budget(shape, budget)) == cfiltered);
}

TEST_CASE("streaming matches materialized") {
  const StrictPartition shape({3, 1});
  std::vector<ShiftedTableau> streamed;
  for_each_marked_budget(shape, 9,
                         [&](const ShiftedTableau& t) { streamed.push_back(t); });
  CHECK(streamed == enumerate_marked_budget(shape, 9));

  streamed.clear();
  for_each_colored_budget(shape, 9,
                          [&](const ShiftedTableau& t) { streamed.push_back(t); });
  CHECK(streamed == enumerate_colored_budget(shape, 9));
}

TEST_CASE("reverse plane tableaux") {
  const StrictPartition shape({2, 1});
  const auto list = enumerate_rpt(shape, 3);
  CHECK(list.size() == 7);
  std::map<long, int> by_total;
  for (const ShiftedRPT& t : list) {
    CHECK(validate_rpt(t).ok);
    ++by_total[rpt_total(t)];
  }
  CHECK(by_total == std::map<long, int>{{0, 1}, {1, 1}, {2, 2}, {3, 3}});

  CHECK(!validate_rpt(ShiftedRPT{shape, {1, 0, 0}}).ok);
  CHECK(!validate_rpt(ShiftedRPT{shape, {0, -1, 0}}).ok);
  CHECK(validate_rpt(ShiftedRPT{shape, {0, 1, 1}}).ok);
  CHECK_THROWS_AS(validate_rpt(ShiftedRPT{shape, {0, 0}}),
                  std::invalid_argument);
}

TEST_CASE("standard tableau counts") {
  CHECK(count_standard_hook(StrictPartition({2, 1})) == 1);
  CHECK(count_standard_hook(StrictPartition({3, 1})) == 2);
  CHECK(count_standard_hook(StrictPartition({4, 2, 1})) == 7);
  CHECK(count_standard_hook(StrictPartition()) == 1);
  for (int n = 0; n <= 8; ++n)
    for (const StrictPartition& s : enumerate_strict(n))
      CHECK(count_standard_brute(s) == count_standard_hook(s));
}
