#include "shiftedq/bijection.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace shiftedq {

namespace {

using Grid = std::map<Cell, MarkedLetter>;

std::string cell_str(Cell c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

Grid to_grid(const ShiftedTableau& t) {
  Grid g;
  auto cells = shifted_cells(t.shape);
  for (size_t p = 0; p < cells.size(); ++p) g.emplace(cells[p], t.entries[p]);
  return g;
}

// Rebuild a tableau from a set of filled cells, checking they form a shifted
// diagram (rows 1..r, row i contiguous from column i, strictly shorter rows
// going down).
ShiftedTableau cells_to_tableau(const Grid& g, const std::set<Cell>& keep) {
  std::map<int, std::vector<std::pair<int, MarkedLetter>>> rows;
  for (Cell c : keep) rows[c.row].push_back({c.col, g.at(c)});
  std::vector<int> parts;
  std::vector<MarkedLetter> entries;
  int expect_row = 1;
  for (auto& [row, line] : rows) {
    if (row != expect_row++)
      throw std::logic_error("exchange: stage rows are not contiguous");
    std::sort(line.begin(), line.end());
    for (size_t i = 0; i < line.size(); ++i)
      if (line[i].first != row + static_cast<int>(i))
        throw std::logic_error("exchange: stage row " + std::to_string(row) +
                               " is not left-justified");
    parts.push_back(static_cast<int>(line.size()));
    for (auto& [col, x] : line) entries.push_back(x);
  }
  return ShiftedTableau{StrictPartition(parts), std::move(entries)};
}

MarkedLetter expect_letter(const Grid& g, Cell c, MarkedLetter want,
                           const char* who) {
  auto it = g.find(c);
  if (it == g.end() || !(it->second == want))
    throw std::logic_error(std::string(who) +
                           ": traveling letter lost at " + cell_str(c));
  return it->second;
}

}  // namespace

ForwardResult forward(const ShiftedTableau& marked) {
  Validation v = validate_marked(marked);
  if (!v.ok)
    throw std::invalid_argument("forward: not a marked tableau: " + v.reason);

  ForwardResult res;
  Grid g = to_grid(marked);
  const int m = marked.max_value();

  for (int k = 1; k <= m; ++k) {
    const MarkedLetter kp{k, true};
    // Cells currently holding letters of value <= k: the sub-diagram this
    // pass works in.  Neighbors outside it count as missing.
    std::set<Cell> region;
    std::vector<Cell> starts;
    for (const auto& [c, x] : g) {
      if (x.value > k) continue;
      region.insert(c);
      if (x == kp) starts.push_back(c);
    }
    std::sort(starts.begin(), starts.end());  // top row first
    for (size_t i = 1; i < starts.size(); ++i)
      if (starts[i].row == starts[i - 1].row)
        throw std::logic_error("forward: two traveling letters share a row");

    for (Cell start : starts) {
      Cell cur = start;
      for (;;) {
        expect_letter(g, cur, kp, "forward");
        const Cell bcell{cur.row, cur.col - 1};  // row neighbor (left)
        const Cell ccell{cur.row - 1, cur.col};  // column neighbor (above)
        const bool hasb = region.count(bcell) > 0;
        const bool hasc = region.count(ccell) > 0;
        int bbar = 0, cbar = 0;
        if (hasb) bbar = bar_value(g.at(bcell), bcell);
        if (hasc) cbar = bar_value(g.at(ccell), ccell);
        const int self = k - cur.col;  // bar of k' at its current cell
        const bool trigb = hasb && self < bbar;
        const bool trigc = hasc && self < cbar;
        if (!trigb && !trigc) break;

        // Only a triggering neighbor is eligible to swap.  Here the trigger
        // is itself a bar comparison, so when both neighbors trigger the
        // larger bar always belongs to a triggering one; the distinction
        // matters only when exactly one side triggers.
        ExchangeCase rule;
        if (!trigc)
          rule = ExchangeCase::I;
        else if (!trigb)
          rule = ExchangeCase::II;
        else
          rule = bbar >= cbar ? ExchangeCase::I : ExchangeCase::II;
        const Cell partner = rule == ExchangeCase::I ? bcell : ccell;
        if (g.at(partner).marked)
          throw std::logic_error("forward: swap partner at " +
                                 cell_str(partner) + " is marked");
        std::swap(g.at(cur), g.at(partner));
        res.trace.push_back({k, cur, partner, rule});
        cur = partner;
      }
    }
    res.stages.push_back(cells_to_tableau(g, region));
  }

  std::set<Cell> all;
  for (const auto& [c, x] : g) all.insert(c);
  res.image = cells_to_tableau(g, all);
  if (!(res.image.shape == marked.shape))
    throw std::logic_error("forward: image shape changed");
  Validation cv = validate_colored(res.image);
  if (!cv.ok)
    throw std::logic_error("forward: image is not colored: " + cv.reason);
  return res;
}

InverseResult inverse(const ShiftedTableau& colored) {
  Validation v = validate_colored(colored);
  if (!v.ok)
    throw std::invalid_argument("inverse: not a colored tableau: " + v.reason);

  InverseResult res;
  Grid g = to_grid(colored);
  const int m = colored.max_value();
  std::set<Cell> active;
  for (const auto& [c, x] : g) active.insert(c);
  Grid out;  // the reconstructed marked tableau, filled value by value

  for (int k = m; k >= 1; --k) {
    const MarkedLetter kp{k, true};
    const MarkedLetter ku{k, false};
    // Unmarked k never moves: its cells already belong to the preimage.
    std::vector<Cell> stripped;
    for (Cell c : active)
      if (g.at(c) == ku) stripped.push_back(c);
    for (Cell c : stripped) {
      active.erase(c);
      out.emplace(c, ku);
    }

    std::vector<Cell> starts;
    for (Cell c : active)
      if (g.at(c) == kp) starts.push_back(c);
    std::sort(starts.begin(), starts.end(),
              [](Cell a, Cell b) { return b < a; });  // bottom row first
    for (size_t i = 1; i < starts.size(); ++i)
      if (starts[i].row == starts[i - 1].row)
        throw std::logic_error("inverse: two traveling letters share a row");

    for (Cell start : starts) {
      Cell cur = start;
      for (;;) {
        expect_letter(g, cur, kp, "inverse");
        const Cell bcell{cur.row, cur.col + 1};  // row neighbor (right)
        const Cell ccell{cur.row + 1, cur.col};  // column neighbor (below)
        const bool hasb = active.count(bcell) > 0;
        const bool hasc = active.count(ccell) > 0;
        // Trigger on alphabet order; direction chosen by bar values.
        const bool trigb = hasb && g.at(bcell).key() < kp.key();
        const bool trigc = hasc && g.at(ccell).key() < kp.key();
        if (!trigb && !trigc) break;
        int bbar = 0, cbar = 0;
        if (trigb) bbar = bar_value(g.at(bcell), bcell);
        if (trigc) cbar = bar_value(g.at(ccell), ccell);

        // Only a triggering neighbor is eligible to swap.  A present but
        // non-triggering neighbor (e.g. another settled traveling letter
        // directly below) must not win the bar comparison: swapping two
        // identical marked letters would go nowhere.
        ExchangeCase rule;
        if (!trigc)
          rule = ExchangeCase::I;
        else if (!trigb)
          rule = ExchangeCase::II;
        else
          rule = bbar <= cbar ? ExchangeCase::I : ExchangeCase::II;
        const Cell partner = rule == ExchangeCase::I ? bcell : ccell;
        if (g.at(partner).marked)
          throw std::logic_error("inverse: swap partner at " +
                                 cell_str(partner) + " is marked");
        std::swap(g.at(cur), g.at(partner));
        res.trace.push_back({k, cur, partner, rule});
        cur = partner;
      }
    }

    // The settled k' cells are the preimage's k' cells; remove them and the
    // remaining active cells carry the next (smaller) stage.
    std::vector<Cell> settled;
    for (Cell c : active)
      if (g.at(c) == kp) settled.push_back(c);
    for (Cell c : settled) {
      active.erase(c);
      out.emplace(c, kp);
    }
    if (k > 1) res.stages.push_back(cells_to_tableau(g, active));
  }

  if (!active.empty())
    throw std::logic_error("inverse: leftover cells after the last pass");
  std::set<Cell> all;
  for (const auto& [c, x] : out) all.insert(c);
  res.preimage = cells_to_tableau(out, all);
  if (!(res.preimage.shape == colored.shape))
    throw std::logic_error("inverse: preimage shape changed");
  Validation mv = validate_marked(res.preimage);
  if (!mv.ok)
    throw std::logic_error("inverse: preimage is not marked: " + mv.reason);
  return res;
}

ShiftedTableau apply_trace(const ShiftedTableau& t, const ExchangeTrace& trace) {
  ShiftedTableau out = t;
  for (const ExchangeStep& s : trace)
    std::swap(out.at(s.from.row, s.from.col), out.at(s.to.row, s.to.col));
  return out;
}

}  // namespace shiftedq
