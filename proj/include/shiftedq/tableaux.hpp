#pragma once

#include "shiftedq/partitions.hpp"
#include "shiftedq/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace shiftedq {

// A letter of the marked alphabet 1' < 1 < 2' < 2 < 3' < ...  The key
// linearizes that order.
struct MarkedLetter {
  int value = 1;
  bool marked = false;

  int key() const { return 2 * value - (marked ? 1 : 0); }
  bool operator==(const MarkedLetter&) const = default;
};
inline bool operator<(const MarkedLetter& a, const MarkedLetter& b) {
  return a.key() < b.key();
}
inline bool operator<=(const MarkedLetter& a, const MarkedLetter& b) {
  return a.key() <= b.key();
}
std::string to_string(const MarkedLetter& x);  // "3'" or "3"

// A filling of a shifted diagram by marked letters, stored row-major over
// shifted_cells(shape).  The same structure serves both tableau families
// (marked / colored); the two validators below give them their meaning.
struct ShiftedTableau {
  StrictPartition shape;
  std::vector<MarkedLetter> entries;

  int cells() const { return static_cast<int>(entries.size()); }
  // 1-based coordinates; throws std::out_of_range outside the diagram.
  const MarkedLetter& at(int row, int col) const;
  MarkedLetter& at(int row, int col);
  int max_value() const;  // 0 for the empty filling
  bool operator==(const ShiftedTableau&) const = default;
};

struct Validation {
  bool ok = true;
  std::string reason;  // names the violated rule and a witness cell
};

// Marked (semistandard) rules:
//   M1  rows and columns weakly increase;
//   M2  each unmarked letter appears at most once per column;
//   M3  each marked letter appears at most once per row.
Validation validate_marked(const ShiftedTableau& t);

// Colored rule: the bar statistic (value - col for marked entries,
// value - row for unmarked ones) is nonnegative and weakly increases along
// rows and columns.
Validation validate_colored(const ShiftedTableau& t);

int bar_value(const MarkedLetter& x, Cell c);
std::vector<int> bar_values(const ShiftedTableau& t);  // row-major

// weight()[k-1] = number of entries of value k, padded to at least min_len.
Composition weight(const ShiftedTableau& t, int min_len = 0);
// Sum of k over entries of value k.
long degree(const ShiftedTableau& t);

// Backtracking enumerations in row-major order, letters tried in alphabet
// order; output order is therefore deterministic.
std::vector<ShiftedTableau> enumerate_marked(const StrictPartition& shape,
                                             int max_letter);
std::vector<ShiftedTableau> enumerate_colored(const StrictPartition& shape,
                                              int max_letter);
// Variants bounded by total degree instead of letter height.
std::vector<ShiftedTableau> enumerate_marked_budget(const StrictPartition& shape,
                                                    long max_degree);
std::vector<ShiftedTableau> enumerate_colored_budget(
    const StrictPartition& shape, long max_degree);

// Streaming versions of the budget enumerations (no materialized vector).
void for_each_marked_budget(const StrictPartition& shape, long max_degree,
                            const std::function<void(const ShiftedTableau&)>& fn);
void for_each_colored_budget(
    const StrictPartition& shape, long max_degree,
    const std::function<void(const ShiftedTableau&)>& fn);

// Shifted reverse plane tableau: nonnegative entries weakly increasing along
// rows and columns.
struct ShiftedRPT {
  StrictPartition shape;
  std::vector<int> entries;
  bool operator==(const ShiftedRPT&) const = default;
};
Validation validate_rpt(const ShiftedRPT& t);
long rpt_total(const ShiftedRPT& t);
std::vector<ShiftedRPT> enumerate_rpt(const StrictPartition& shape,
                                      long max_total);

// Standard shifted tableaux (each of 1..n once, rows and columns strictly
// increasing): exhaustive count and the hook-product count n!/prod h*, whose
// division is checked to be exact.
Int count_standard_brute(const StrictPartition& shape);
Int count_standard_hook(const StrictPartition& shape);

}  // namespace shiftedq
