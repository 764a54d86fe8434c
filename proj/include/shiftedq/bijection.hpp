#pragma once

#include "shiftedq/tableaux.hpp"

#include <vector>

namespace shiftedq {

// The exchange algorithm turning marked tableaux into colored ones (and
// back), one pass per letter value.  During pass k the marked letter k'
// travels by swapping with one neighbor at a time:
//   rule I  swaps with the row neighbor, rule II with the column neighbor.
enum class ExchangeCase { I, II };

struct ExchangeStep {
  int letter = 0;  // the moving letter's value (the pass index k)
  Cell from;
  Cell to;
  ExchangeCase rule = ExchangeCase::I;
  bool operator==(const ExchangeStep&) const = default;
};
using ExchangeTrace = std::vector<ExchangeStep>;

struct ForwardResult {
  ShiftedTableau image;                // colored tableau on the full shape
  std::vector<ShiftedTableau> stages;  // stages[k-1] = state after pass k,
                                       // restricted to the cells of value <= k
  ExchangeTrace trace;
};

struct InverseResult {
  ShiftedTableau preimage;             // marked tableau on the full shape
  std::vector<ShiftedTableau> stages;  // states after passes m, m-1, ..., 2
                                       // (the shrinking colored tableaux)
  ExchangeTrace trace;
};

// Input must pass validate_marked / validate_colored respectively; otherwise
// std::invalid_argument.  A violated internal invariant of the algorithm
// (e.g. a marked swap partner) raises std::logic_error.
ForwardResult forward(const ShiftedTableau& marked);
InverseResult inverse(const ShiftedTableau& colored);

// Replays a trace as plain content transpositions on a copy of t.  Both
// directions of the algorithm are reproduced exactly by their traces.
ShiftedTableau apply_trace(const ShiftedTableau& t, const ExchangeTrace& trace);

}  // namespace shiftedq
