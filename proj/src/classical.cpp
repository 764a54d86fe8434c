#include "shiftedq/classical.hpp"

#include <functional>
#include <stdexcept>

namespace shiftedq {

Series kirillov_series(const Partition& shape, int trunc) {
  Series out = Series::monomial(static_cast<int>(n_stat(shape.parts)), 1,
                                trunc);
  for (Cell c : young_cells(shape))
    out = mul(out, inv_one_minus(hook(shape, c), trunc));
  return out;
}

Series schur_principal(const Partition& shape, int trunc) {
  if (trunc < 1)
    throw std::invalid_argument("schur_principal: trunc must be >= 1");
  // Sum over semistandard tableaux of t^(sum(entry - 1)), pruned by the
  // degree budget; entries in cell (i, j) are at least i, so the column
  // condition alone bounds the search.
  const auto cells = young_cells(shape);
  const int ncells = static_cast<int>(cells.size());
  const long budget = trunc - 1;
  std::vector<int> entry(static_cast<size_t>(ncells), 0);
  Series out(trunc);
  // index of the cell above/left in the row-major list
  std::vector<int> left(static_cast<size_t>(ncells), -1);
  std::vector<int> up(static_cast<size_t>(ncells), -1);
  for (int p = 0; p < ncells; ++p) {
    for (int q = 0; q < ncells; ++q) {
      if (cells[q].row == cells[p].row && cells[q].col == cells[p].col - 1)
        left[p] = q;
      if (cells[q].col == cells[p].col && cells[q].row == cells[p].row - 1)
        up[p] = q;
    }
  }
  std::function<void(int, long)> rec = [&](int pos, long used) {
    if (pos == ncells) {
      out.c[used] += 1;
      return;
    }
    int low = 1;
    if (left[pos] >= 0) low = std::max(low, entry[left[pos]]);
    if (up[pos] >= 0) low = std::max(low, entry[up[pos]] + 1);
    for (int e = low; used + (e - 1) <= budget; ++e) {
      entry[pos] = e;
      rec(pos + 1, used + e - 1);
    }
  };
  rec(0, 0);
  return out;
}

BiSeries kirillov_pak(const Partition& shape, int trunc) {
  const int n = shape.size();
  BiSeries out = from_series(Series::one(trunc), n);
  for (Cell c : young_cells(shape)) {
    BiSeries f(n, trunc);
    f.rows[0] = Series::monomial(c.row - 1, 1, trunc);
    if (n >= 1) f.rows[1] = Series::monomial(c.col - 1, 1, trunc);
    out = mul(out, f);
  }
  Series hooks = Series::one(trunc);
  for (Cell c : young_cells(shape))
    hooks = mul(hooks, inv_one_minus(hook(shape, c), trunc));
  return mul(out, from_series(hooks, n));
}

BiSeries solomon_series(int n, int trunc) {
  if (n < 0) throw std::invalid_argument("solomon_series: negative n");
  BiSeries out = from_series(Series::one(trunc), n);
  for (int j = 0; j < n; ++j) {
    BiSeries f(n, trunc);
    f.rows[0] = Series::one(trunc);
    f.rows[1] = Series::monomial(j, 1, trunc);  // 1 + s t^j
    out = mul(out, f);
  }
  Series denom = Series::one(trunc);
  for (int k = 1; k <= n; ++k) denom = mul(denom, inv_one_minus(k, trunc));
  return mul(out, from_series(denom, n));
}

}  // namespace shiftedq
