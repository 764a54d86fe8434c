#include "shiftedq/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace shiftedq {

namespace {

void check_positive_decreasing(const std::vector<int>& p, bool strict,
                               const char* what) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0)
      throw std::invalid_argument(std::string(what) +
                                  ": parts must be positive, got " +
                                  std::to_string(p[i]));
    if (i > 0) {
      if (strict ? p[i - 1] <= p[i] : p[i - 1] < p[i])
        throw std::invalid_argument(
            std::string(what) + ": parts must be " +
            (strict ? "strictly" : "weakly") + " decreasing, got " +
            std::to_string(p[i - 1]) + " before " + std::to_string(p[i]));
    }
  }
}

int sum_parts(const std::vector<int>& p) {
  return std::accumulate(p.begin(), p.end(), 0);
}

}  // namespace

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  check_positive_decreasing(parts, /*strict=*/false, "Partition");
}
int Partition::size() const { return sum_parts(parts); }
int Partition::length() const { return static_cast<int>(parts.size()); }

StrictPartition::StrictPartition(std::vector<int> p) : parts(std::move(p)) {
  check_positive_decreasing(parts, /*strict=*/true, "StrictPartition");
}
int StrictPartition::size() const { return sum_parts(parts); }
int StrictPartition::length() const { return static_cast<int>(parts.size()); }
Partition StrictPartition::as_partition() const { return Partition(parts); }

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
  for (int v : parts)
    if (v < 0)
      throw std::invalid_argument("Composition: parts must be nonnegative");
}
int Composition::size() const { return sum_parts(parts); }

Partition conjugate(const Partition& p) {
  std::vector<int> out;
  if (!p.parts.empty()) {
    out.resize(p.parts[0]);
    for (int part : p.parts)
      for (int j = 0; j < part; ++j) ++out[j];
  }
  return Partition(out);
}

Frobenius frobenius(const Partition& p) {
  Frobenius f;
  Partition q = conjugate(p);
  for (int i = 1; i <= p.length(); ++i) {
    if (p.parts[i - 1] < i) break;  // past the diagonal
    f.arm.push_back(p.parts[i - 1] - i);
    f.leg.push_back(q.parts[i - 1] - i);
  }
  return f;
}

Partition from_frobenius(const Frobenius& f) {
  if (f.arm.size() != f.leg.size())
    throw std::invalid_argument("from_frobenius: arm/leg size mismatch");
  size_t d = f.arm.size();
  for (size_t i = 0; i + 1 < d; ++i)
    if (f.arm[i] <= f.arm[i + 1] || f.leg[i] <= f.leg[i + 1])
      throw std::invalid_argument(
          "from_frobenius: coordinates must strictly decrease");
  int rows = 0;
  for (size_t i = 0; i < d; ++i) {
    if (f.arm[i] < 0 || f.leg[i] < 0)
      throw std::invalid_argument("from_frobenius: negative coordinate");
    rows = std::max(rows, static_cast<int>(i + 1) + f.leg[i]);
  }
  std::vector<int> parts(rows, 0);
  // Row i of the diagonal block: arm extends right, leg extends down.
  for (size_t i = 0; i < d; ++i) {
    parts[i] = static_cast<int>(i + 1) + f.arm[i];
    for (int r = static_cast<int>(i + 1); r <= static_cast<int>(i) + f.leg[i];
         ++r)
      parts[r] = std::max(parts[r], static_cast<int>(i + 1));
  }
  return Partition(parts);
}

Partition double_partition(const StrictPartition& s) {
  Frobenius f;
  for (int part : s.parts) {
    f.arm.push_back(part);
    f.leg.push_back(part - 1);
  }
  return from_frobenius(f);
}

std::vector<Cell> young_cells(const Partition& p) {
  std::vector<Cell> out;
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.parts[i - 1]; ++j) out.push_back({i, j});
  return out;
}

std::vector<Cell> shifted_cells(const StrictPartition& s) {
  std::vector<Cell> out;
  for (int i = 1; i <= s.length(); ++i)
    for (int j = i; j <= s.parts[i - 1] + i - 1; ++j) out.push_back({i, j});
  return out;
}

bool in_young(const Partition& p, Cell c) {
  return c.row >= 1 && c.row <= p.length() && c.col >= 1 &&
         c.col <= p.parts[c.row - 1];
}

bool in_shifted(const StrictPartition& s, Cell c) {
  return c.row >= 1 && c.row <= s.length() && c.col >= c.row &&
         c.col <= s.parts[c.row - 1] + c.row - 1;
}

int hook(const Partition& p, Cell c) {
  if (!in_young(p, c))
    throw std::invalid_argument("hook: cell (" + std::to_string(c.row) + "," +
                                std::to_string(c.col) +
                                ") outside the diagram");
  Partition q = conjugate(p);
  return p.parts[c.row - 1] + q.parts[c.col - 1] - c.row - c.col + 1;
}

int shifted_hook(const StrictPartition& s, Cell c) {
  if (!in_shifted(s, c))
    throw std::invalid_argument("shifted_hook: cell (" +
                                std::to_string(c.row) + "," +
                                std::to_string(c.col) +
                                ") outside the shifted diagram");
  return hook(double_partition(s), {c.row, c.col + 1});
}

int content(Cell c) { return c.col - c.row; }

long n_stat(const std::vector<int>& parts) {
  long out = 0;
  for (size_t i = 0; i < parts.size(); ++i)
    out += static_cast<long>(i) * parts[i];
  return out;
}

int delta(const StrictPartition& s) { return s.length() % 2; }

namespace {

// Partitions of n with parts <= cap, largest part first; strict selects
// distinct parts.  Recursing on the largest part yields reverse-lex order.
template <typename Out>
void rec_partitions(int n, int cap, bool strict, std::vector<int>& acc,
                    Out&& emit) {
  if (n == 0) {
    emit(acc);
    return;
  }
  for (int first = std::min(n, cap); first >= 1; --first) {
    acc.push_back(first);
    rec_partitions(n - first, strict ? first - 1 : first, strict, acc, emit);
    acc.pop_back();
  }
}

}  // namespace

std::vector<StrictPartition> enumerate_strict(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_strict: negative size");
  std::vector<StrictPartition> out;
  std::vector<int> acc;
  rec_partitions(n, n, /*strict=*/true, acc,
                 [&](const std::vector<int>& p) { out.emplace_back(p); });
  return out;
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: negative size");
  std::vector<Partition> out;
  std::vector<int> acc;
  rec_partitions(n, n, /*strict=*/false, acc,
                 [&](const std::vector<int>& p) { out.emplace_back(p); });
  return out;
}

std::vector<Composition> enumerate_compositions(int n, int max_parts) {
  if (n < 0 || max_parts < 0)
    throw std::invalid_argument("enumerate_compositions: negative argument");
  std::vector<Composition> out;
  if (n == 0) {
    out.emplace_back();  // the empty composition
    return out;
  }
  // By length, then lexicographically; the last part is positive so each
  // canonical composition appears exactly once.
  std::vector<int> acc;
  auto rec = [&](auto&& self, int remaining, int slots_left) -> void {
    if (slots_left == 1) {
      if (remaining >= 1) {
        acc.push_back(remaining);
        out.emplace_back(acc);
        acc.pop_back();
      }
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      acc.push_back(v);
      self(self, remaining - v, slots_left - 1);
      acc.pop_back();
    }
  };
  for (int len = 1; len <= max_parts; ++len) rec(rec, n, len);
  return out;
}

bool lex_greater(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::string format_parts(const std::vector<int>& parts) {
  if (parts.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out;
}

}  // namespace shiftedq
