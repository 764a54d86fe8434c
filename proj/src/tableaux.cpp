#include "shiftedq/tableaux.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <stdexcept>

namespace shiftedq {

std::string to_string(const MarkedLetter& x) {
  return std::to_string(x.value) + (x.marked ? "'" : "");
}

namespace {

std::string cell_str(int row, int col) {
  return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

// Row-major cell indexing for a shifted shape.
struct ShapeIndex {
  std::vector<Cell> cells;
  std::vector<int> row_start;  // row_start[i-1] = index of cell (i, i)
  std::vector<int> left;       // index of (i, j-1), -1 if absent
  std::vector<int> up;         // index of (i-1, j), -1 if absent

  explicit ShapeIndex(const StrictPartition& shape) {
    cells = shifted_cells(shape);
    row_start.assign(shape.length(), 0);
    for (int i = 1, pos = 0; i <= shape.length(); ++i) {
      row_start[i - 1] = pos;
      pos += shape.parts[i - 1];
    }
    left.assign(cells.size(), -1);
    up.assign(cells.size(), -1);
    for (size_t p = 0; p < cells.size(); ++p) {
      auto [i, j] = cells[p];
      if (j - 1 >= i) left[p] = static_cast<int>(p) - 1;
      if (i >= 2 && j <= shape.parts[i - 2] + i - 2)
        up[p] = row_start[i - 2] + (j - (i - 1));
    }
  }
};

void check_entry_count(const StrictPartition& shape, size_t entries,
                       const char* what) {
  size_t want = static_cast<size_t>(shape.size());
  if (entries != want)
    throw std::invalid_argument(std::string(what) + ": expected " +
                                std::to_string(want) + " entries, got " +
                                std::to_string(entries));
}

}  // namespace

const MarkedLetter& ShiftedTableau::at(int row, int col) const {
  if (!in_shifted(shape, {row, col}))
    throw std::out_of_range("ShiftedTableau::at: cell " + cell_str(row, col) +
                            " outside the diagram");
  int pos = 0;
  for (int i = 1; i < row; ++i) pos += shape.parts[i - 1];
  return entries[pos + (col - row)];
}

MarkedLetter& ShiftedTableau::at(int row, int col) {
  return const_cast<MarkedLetter&>(
      static_cast<const ShiftedTableau&>(*this).at(row, col));
}

int ShiftedTableau::max_value() const {
  int m = 0;
  for (const auto& x : entries) m = std::max(m, x.value);
  return m;
}

int bar_value(const MarkedLetter& x, Cell c) {
  return x.value - (x.marked ? c.col : c.row);
}

std::vector<int> bar_values(const ShiftedTableau& t) {
  check_entry_count(t.shape, t.entries.size(), "bar_values");
  ShapeIndex ix(t.shape);
  std::vector<int> out(t.entries.size());
  for (size_t p = 0; p < t.entries.size(); ++p)
    out[p] = bar_value(t.entries[p], ix.cells[p]);
  return out;
}

Validation validate_marked(const ShiftedTableau& t) {
  check_entry_count(t.shape, t.entries.size(), "validate_marked");
  ShapeIndex ix(t.shape);
  for (size_t p = 0; p < t.entries.size(); ++p) {
    const MarkedLetter& x = t.entries[p];
    if (x.value < 1)
      return {false, "letter value must be positive at " +
                         cell_str(ix.cells[p].row, ix.cells[p].col)};
    if (ix.left[p] >= 0) {
      const MarkedLetter& l = t.entries[ix.left[p]];
      if (x.key() < l.key())
        return {false, "M1: row " + std::to_string(ix.cells[p].row) +
                           " decreases at " +
                           cell_str(ix.cells[p].row, ix.cells[p].col)};
      if (x == l && x.marked)
        return {false, "M3: marked letter " + std::to_string(x.value) +
                           "' repeated in row " +
                           std::to_string(ix.cells[p].row) + " at " +
                           cell_str(ix.cells[p].row, ix.cells[p].col)};
    }
    if (ix.up[p] >= 0) {
      const MarkedLetter& u = t.entries[ix.up[p]];
      if (x.key() < u.key())
        return {false, "M1: column " + std::to_string(ix.cells[p].col) +
                           " decreases at " +
                           cell_str(ix.cells[p].row, ix.cells[p].col)};
      if (x == u && !x.marked)
        return {false, "M2: unmarked letter " + std::to_string(x.value) +
                           " repeated in column " +
                           std::to_string(ix.cells[p].col) + " at " +
                           cell_str(ix.cells[p].row, ix.cells[p].col)};
    }
  }
  // The adjacent checks above imply the full row/column conditions for
  // weakly increasing fillings; scan entire lines anyway so that arbitrary
  // input gets a faithful verdict.
  for (int i = 1; i <= t.shape.length(); ++i) {
    std::vector<int> marked_seen;
    for (int j = i; j <= t.shape.parts[i - 1] + i - 1; ++j) {
      const MarkedLetter& x = t.at(i, j);
      if (x.marked) {
        if (std::find(marked_seen.begin(), marked_seen.end(), x.value) !=
            marked_seen.end())
          return {false, "M3: marked letter " + std::to_string(x.value) +
                             "' repeated in row " + std::to_string(i)};
        marked_seen.push_back(x.value);
      }
    }
  }
  int width = t.shape.length() ? t.shape.parts[0] : 0;
  for (int j = 1; j <= width; ++j) {
    std::vector<int> unmarked_seen;
    for (int i = 1; i <= t.shape.length(); ++i) {
      if (!in_shifted(t.shape, {i, j})) continue;
      const MarkedLetter& x = t.at(i, j);
      if (!x.marked) {
        if (std::find(unmarked_seen.begin(), unmarked_seen.end(), x.value) !=
            unmarked_seen.end())
          return {false, "M2: unmarked letter " + std::to_string(x.value) +
                             " repeated in column " + std::to_string(j)};
        unmarked_seen.push_back(x.value);
      }
    }
  }
  return {true, ""};
}

Validation validate_colored(const ShiftedTableau& t) {
  check_entry_count(t.shape, t.entries.size(), "validate_colored");
  ShapeIndex ix(t.shape);
  std::vector<int> bar(t.entries.size());
  for (size_t p = 0; p < t.entries.size(); ++p) {
    if (t.entries[p].value < 1)
      return {false, "letter value must be positive at " +
                         cell_str(ix.cells[p].row, ix.cells[p].col)};
    bar[p] = bar_value(t.entries[p], ix.cells[p]);
    if (bar[p] < 0)
      return {false, "bar value negative at " +
                         cell_str(ix.cells[p].row, ix.cells[p].col)};
    if (ix.left[p] >= 0 && bar[p] < bar[ix.left[p]])
      return {false, "bar row " + std::to_string(ix.cells[p].row) +
                         " decreases at " +
                         cell_str(ix.cells[p].row, ix.cells[p].col)};
    if (ix.up[p] >= 0 && bar[p] < bar[ix.up[p]])
      return {false, "bar column " + std::to_string(ix.cells[p].col) +
                         " decreases at " +
                         cell_str(ix.cells[p].row, ix.cells[p].col)};
  }
  return {true, ""};
}

Composition weight(const ShiftedTableau& t, int min_len) {
  std::vector<int> w(static_cast<size_t>(std::max(t.max_value(), min_len)), 0);
  for (const auto& x : t.entries) ++w[x.value - 1];
  return Composition(w);
}

long degree(const ShiftedTableau& t) {
  long d = 0;
  for (const auto& x : t.entries) d += x.value;
  return d;
}

namespace {

// Shared backtracking over shifted fillings in row-major order, letters in
// alphabet order.  colored_rules selects which local admissibility applies;
// max_letter and max_degree bound the search (either may be "no bound").
void enumerate_core(const StrictPartition& shape, bool colored_rules,
                    int max_letter, long max_degree,
                    const std::function<void(const ShiftedTableau&)>& emit) {
  ShapeIndex ix(shape);
  const int ncells = static_cast<int>(ix.cells.size());
  ShiftedTableau t{shape, std::vector<MarkedLetter>(
                              static_cast<size_t>(ncells), MarkedLetter{})};
  std::vector<int> bar(static_cast<size_t>(ncells), 0);

  std::function<void(int, long)> rec = [&](int pos, long used) {
    if (pos == ncells) {
      emit(t);
      return;
    }
    const Cell cell = ix.cells[pos];
    const int remaining_after = ncells - pos - 1;
    for (int v = 1; v <= max_letter; ++v) {
      if (max_degree != LONG_MAX &&
          used + v + remaining_after > max_degree)
        break;  // letter costs grow with v
      for (int pass = 0; pass < 2; ++pass) {
        const bool marked = pass == 0;  // v' precedes v in the alphabet
        const MarkedLetter x{v, marked};
        if (colored_rules) {
          const int b = bar_value(x, cell);
          if (b < 0) continue;
          if (ix.left[pos] >= 0 && b < bar[ix.left[pos]]) continue;
          if (ix.up[pos] >= 0 && b < bar[ix.up[pos]]) continue;
          bar[pos] = b;
        } else {
          if (ix.left[pos] >= 0) {
            const MarkedLetter& l = t.entries[ix.left[pos]];
            if (x.key() < l.key()) continue;
            if (x == l && marked) continue;  // M3
          }
          if (ix.up[pos] >= 0) {
            const MarkedLetter& u = t.entries[ix.up[pos]];
            if (x.key() < u.key()) continue;
            if (x == u && !marked) continue;  // M2
          }
        }
        t.entries[pos] = x;
        rec(pos + 1, used + v);
      }
    }
  };
  rec(0, 0);
}

std::vector<ShiftedTableau> collect(const StrictPartition& shape,
                                    bool colored_rules, int max_letter,
                                    long max_degree) {
  std::vector<ShiftedTableau> out;
  enumerate_core(shape, colored_rules, max_letter, max_degree,
                 [&](const ShiftedTableau& t) { out.push_back(t); });
  return out;
}

}  // namespace

std::vector<ShiftedTableau> enumerate_marked(const StrictPartition& shape,
                                             int max_letter) {
  if (max_letter < 0)
    throw std::invalid_argument("enumerate_marked: negative letter bound");
  return collect(shape, false, max_letter, LONG_MAX);
}

std::vector<ShiftedTableau> enumerate_colored(const StrictPartition& shape,
                                              int max_letter) {
  if (max_letter < 0)
    throw std::invalid_argument("enumerate_colored: negative letter bound");
  return collect(shape, true, max_letter, LONG_MAX);
}

std::vector<ShiftedTableau> enumerate_marked_budget(
    const StrictPartition& shape, long max_degree) {
  return collect(shape, false, INT_MAX, max_degree);
}

std::vector<ShiftedTableau> enumerate_colored_budget(
    const StrictPartition& shape, long max_degree) {
  return collect(shape, true, INT_MAX, max_degree);
}

void for_each_marked_budget(const StrictPartition& shape, long max_degree,
                            const std::function<void(const ShiftedTableau&)>& fn) {
  enumerate_core(shape, false, INT_MAX, max_degree, fn);
}

void for_each_colored_budget(const StrictPartition& shape, long max_degree,
                             const std::function<void(const ShiftedTableau&)>& fn) {
  enumerate_core(shape, true, INT_MAX, max_degree, fn);
}

Validation validate_rpt(const ShiftedRPT& t) {
  check_entry_count(t.shape, t.entries.size(), "validate_rpt");
  ShapeIndex ix(t.shape);
  for (size_t p = 0; p < t.entries.size(); ++p) {
    if (t.entries[p] < 0)
      return {false, "entry negative at " +
                         cell_str(ix.cells[p].row, ix.cells[p].col)};
    if (ix.left[p] >= 0 && t.entries[p] < t.entries[ix.left[p]])
      return {false, "row " + std::to_string(ix.cells[p].row) +
                         " decreases at " +
                         cell_str(ix.cells[p].row, ix.cells[p].col)};
    if (ix.up[p] >= 0 && t.entries[p] < t.entries[ix.up[p]])
      return {false, "column " + std::to_string(ix.cells[p].col) +
                         " decreases at " +
                         cell_str(ix.cells[p].row, ix.cells[p].col)};
  }
  return {true, ""};
}

long rpt_total(const ShiftedRPT& t) {
  long s = 0;
  for (int e : t.entries) s += e;
  return s;
}

std::vector<ShiftedRPT> enumerate_rpt(const StrictPartition& shape,
                                      long max_total) {
  if (max_total < 0)
    throw std::invalid_argument("enumerate_rpt: negative bound");
  ShapeIndex ix(shape);
  const int ncells = static_cast<int>(ix.cells.size());
  std::vector<ShiftedRPT> out;
  ShiftedRPT t{shape, std::vector<int>(static_cast<size_t>(ncells), 0)};
  std::function<void(int, long)> rec = [&](int pos, long used) {
    if (pos == ncells) {
      out.push_back(t);
      return;
    }
    int low = 0;
    if (ix.left[pos] >= 0) low = std::max(low, t.entries[ix.left[pos]]);
    if (ix.up[pos] >= 0) low = std::max(low, t.entries[ix.up[pos]]);
    for (int e = low; used + e <= max_total; ++e) {
      t.entries[pos] = e;
      rec(pos + 1, used + e);
    }
    t.entries[pos] = 0;
  };
  rec(0, 0);
  return out;
}

Int count_standard_brute(const StrictPartition& shape) {
  ShapeIndex ix(shape);
  const int ncells = static_cast<int>(ix.cells.size());
  std::vector<bool> filled(static_cast<size_t>(ncells), false);
  Int count = 0;
  std::function<void(int)> rec = [&](int placed) {
    if (placed == ncells) {
      ++count;
      return;
    }
    for (int p = 0; p < ncells; ++p) {
      if (filled[p]) continue;
      if (ix.left[p] >= 0 && !filled[ix.left[p]]) continue;
      if (ix.up[p] >= 0 && !filled[ix.up[p]]) continue;
      filled[p] = true;
      rec(placed + 1);
      filled[p] = false;
    }
  };
  rec(0);
  return count;
}

Int count_standard_hook(const StrictPartition& shape) {
  Int numer = 1;
  for (int k = 2; k <= shape.size(); ++k) numer *= k;
  Int denom = 1;
  for (Cell c : shifted_cells(shape)) denom *= shifted_hook(shape, c);
  if (numer % denom != 0)
    throw std::logic_error("count_standard_hook: hook product does not divide " +
                           std::to_string(shape.size()) + "!");
  return numer / denom;
}

}  // namespace shiftedq
