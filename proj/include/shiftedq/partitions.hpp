#pragma once

#include <compare>
#include <string>
#include <vector>

namespace shiftedq {

// Cells are 1-based: (row, col).
struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

// Ordinary partition: weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);  // throws std::invalid_argument

  int size() const;    // |lambda|, the sum of the parts
  int length() const;  // number of parts
  bool operator==(const Partition&) const = default;
};

// Strict partition: strictly decreasing positive parts.
struct StrictPartition {
  std::vector<int> parts;

  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> p);  // throws std::invalid_argument

  int size() const;
  int length() const;
  Partition as_partition() const;
  bool operator==(const StrictPartition&) const = default;
};

// Composition: finite sequence of nonnegative parts.  The canonical form has
// no trailing zeros; interior zeros are meaningful.
struct Composition {
  std::vector<int> parts;

  Composition() = default;
  explicit Composition(std::vector<int> p);  // throws std::invalid_argument

  int size() const;
  bool operator==(const Composition&) const = default;
};

// Frobenius coordinates (arm lengths | leg lengths), both strictly
// decreasing, possibly ending at 0.
struct Frobenius {
  std::vector<int> arm;
  std::vector<int> leg;
  bool operator==(const Frobenius&) const = default;
};

Partition conjugate(const Partition& p);
Frobenius frobenius(const Partition& p);
Partition from_frobenius(const Frobenius& f);

// The doubled shape of a strict partition lambda = (l1 > ... > lk):
// the partition with Frobenius coordinates (l1, ..., lk | l1 - 1, ..., lk - 1).
Partition double_partition(const StrictPartition& s);

// Row-major cell lists.  Ordinary diagram: row i holds cols 1..lambda_i.
// Shifted diagram: row i holds cols i..lambda_i + i - 1.
std::vector<Cell> young_cells(const Partition& p);
std::vector<Cell> shifted_cells(const StrictPartition& s);
bool in_young(const Partition& p, Cell c);
bool in_shifted(const StrictPartition& s, Cell c);

// Ordinary hook length lambda_i + lambda'_j - i - j + 1; throws if the cell
// is outside the diagram.
int hook(const Partition& p, Cell c);

// Shifted hook length of a cell of the shifted diagram: the ordinary hook of
// the doubled shape at (i, j + 1).
int shifted_hook(const StrictPartition& s, Cell c);

// Content col - row (may be negative for ordinary diagrams; nonnegative on
// shifted diagrams).
int content(Cell c);

// n(v) = sum over i of (i - 1) * v_i.
long n_stat(const std::vector<int>& parts);

// Parity of the number of parts: 0 if even, 1 if odd.
int delta(const StrictPartition& s);

// Reverse-lexicographic enumerations, largest first; n = 0 yields the empty
// shape.
std::vector<StrictPartition> enumerate_strict(int n);
std::vector<Partition> enumerate_partitions(int n);

// All canonical compositions of n into at most max_parts parts (no trailing
// zeros, interior zeros allowed).  Ordered by length, then lexicographically.
std::vector<Composition> enumerate_compositions(int n, int max_parts);

// True when a > b lexicographically (prefix rule: a longer word beats its
// proper prefix).
bool lex_greater(const std::vector<int>& a, const std::vector<int>& b);

// "4,2,1"; the empty sequence prints as "0".
std::string format_parts(const std::vector<int>& parts);

}  // namespace shiftedq
