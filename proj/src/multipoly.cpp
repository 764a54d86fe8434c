#include "shiftedq/multipoly.hpp"

#include <stdexcept>

namespace shiftedq {

namespace {

void check_vars(const MultiPoly& a, const MultiPoly& b, const char* what) {
  if (a.nvars != b.nvars)
    throw std::invalid_argument(std::string("MultiPoly: variable count "
                                            "mismatch in ") +
                                what);
}

void add_term(MultiPoly& p, const std::vector<int>& expo, const Rat& coeff) {
  if (coeff == 0) return;
  auto it = p.terms.find(expo);
  if (it == p.terms.end()) {
    p.terms.emplace(expo, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) p.terms.erase(it);
  }
}

}  // namespace

MultiPoly MultiPoly::zero(int nvars) {
  if (nvars < 0) throw std::invalid_argument("MultiPoly: negative nvars");
  MultiPoly p;
  p.nvars = nvars;
  return p;
}

MultiPoly MultiPoly::constant(int nvars, const Rat& r) {
  MultiPoly p = zero(nvars);
  if (r != 0) p.terms.emplace(std::vector<int>(nvars, 0), r);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  MultiPoly p = zero(nvars);
  if (i < 0 || i >= nvars)
    throw std::invalid_argument("MultiPoly: variable index out of range");
  std::vector<int> e(nvars, 0);
  e[i] = 1;
  p.terms.emplace(std::move(e), Rat(1));
  return p;
}

bool MultiPoly::is_zero() const { return terms.empty(); }

MultiPoly add(const MultiPoly& a, const MultiPoly& b) {
  check_vars(a, b, "add");
  MultiPoly out = a;
  for (const auto& [e, c] : b.terms) add_term(out, e, c);
  return out;
}

MultiPoly sub(const MultiPoly& a, const MultiPoly& b) {
  check_vars(a, b, "sub");
  MultiPoly out = a;
  for (const auto& [e, c] : b.terms) add_term(out, e, -c);
  return out;
}

MultiPoly mul(const MultiPoly& a, const MultiPoly& b, int degree_cap) {
  check_vars(a, b, "mul");
  MultiPoly out = MultiPoly::zero(a.nvars);
  std::vector<int> e(a.nvars, 0);
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      long deg = 0;
      for (int i = 0; i < a.nvars; ++i) {
        e[i] = ea[i] + eb[i];
        deg += e[i];
      }
      if (degree_cap >= 0 && deg > degree_cap) continue;
      add_term(out, e, ca * cb);
    }
  return out;
}

MultiPoly scale(const MultiPoly& a, const Rat& r) {
  MultiPoly out = MultiPoly::zero(a.nvars);
  if (r == 0) return out;
  for (const auto& [e, c] : a.terms) out.terms.emplace(e, c * r);
  return out;
}

long total_degree(const std::vector<int>& expo) {
  long d = 0;
  for (int e : expo) d += e;
  return d;
}

bool is_homogeneous(const MultiPoly& a, long degree) {
  for (const auto& [e, c] : a.terms)
    if (total_degree(e) != degree) return false;
  return true;
}

Rat eval(const MultiPoly& a, const std::vector<Rat>& point) {
  if (static_cast<int>(point.size()) != a.nvars)
    throw std::invalid_argument("MultiPoly::eval: wrong point dimension");
  Rat out = 0;
  for (const auto& [e, c] : a.terms) {
    Rat term = c;
    for (int i = 0; i < a.nvars; ++i)
      if (e[i] != 0) term *= rat_pow(point[i], e[i]);
    out += term;
  }
  return out;
}

}  // namespace shiftedq
