#include "shiftedq/qfunctions.hpp"

#include "shiftedq/tableaux.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace shiftedq {

namespace {

std::vector<int> sorted_desc(std::vector<int> e) {
  std::sort(e.begin(), e.end(), std::greater<int>());
  while (!e.empty() && e.back() == 0) e.pop_back();
  return e;
}

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Number of distinct rearrangements of the exponent vector (padded with
// zeros to nvars positions).
Int orbit_size(const std::vector<int>& partition, int nvars) {
  std::map<int, int> mult;
  int used = 0;
  for (int e : partition) {
    ++mult[e];
    ++used;
  }
  mult[0] += nvars - used;
  Int denom = 1;
  for (const auto& [e, c] : mult) denom *= factorial(c);
  return factorial(nvars) / denom;
}

}  // namespace

MultiPoly q_r(int r, int nvars) {
  if (r < 0) throw std::invalid_argument("q_r: negative degree");
  // [u^r] prod_i (1 + z_i u)/(1 - z_i u); one variable contributes
  // 1 + 2 z u + 2 z^2 u^2 + ...
  std::vector<MultiPoly> acc(static_cast<size_t>(r) + 1,
                             MultiPoly::zero(nvars));
  acc[0] = MultiPoly::constant(nvars, 1);
  for (int i = 0; i < nvars; ++i) {
    std::vector<MultiPoly> next(static_cast<size_t>(r) + 1,
                                MultiPoly::zero(nvars));
    for (int a = 0; a <= r; ++a) {
      if (acc[a].is_zero()) continue;
      next[a] = add(next[a], acc[a]);  // u^0 coefficient 1
      std::vector<int> e(nvars, 0);
      for (int s = 1; a + s <= r; ++s) {
        e[i] = s;
        MultiPoly zs;
        zs.nvars = nvars;
        zs.terms.emplace(e, Rat(2));
        next[a + s] = add(next[a + s], mul(acc[a], zs));
      }
    }
    acc = std::move(next);
  }
  return acc[r];
}

MultiPoly q_nu(const Composition& nu, int nvars) {
  MultiPoly out = MultiPoly::constant(nvars, 1);
  for (int part : nu.parts)
    if (part > 0) out = mul(out, q_r(part, nvars));
  return out;
}

MultiPoly Q_tableau(const StrictPartition& shape, int nvars) {
  if (nvars < 0) throw std::invalid_argument("Q_tableau: negative nvars");
  MultiPoly out = MultiPoly::zero(nvars);
  for (const ShiftedTableau& t : enumerate_marked(shape, nvars)) {
    std::vector<int> e(nvars, 0);
    for (const MarkedLetter& x : t.entries) ++e[x.value - 1];
    auto it = out.terms.find(e);
    if (it == out.terms.end())
      out.terms.emplace(std::move(e), Rat(1));
    else
      it->second += 1;
  }
  return out;
}

Rat Q_symmetrized(const StrictPartition& shape,
                  const std::vector<Rat>& points) {
  const int l = shape.length();
  const int m = static_cast<int>(points.size());
  if (m < l)
    throw std::invalid_argument("Q_symmetrized: need at least length(shape) "
                                "sample points");
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (points[i] == points[j])
        throw std::invalid_argument(
            "Q_symmetrized: sample points must be pairwise distinct");

  Rat sum = 0;
  std::vector<int> chosen;  // injection: position i -> variable chosen[i]
  std::vector<bool> used(static_cast<size_t>(m), false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(chosen.size()) == l) {
      Rat term = 1;
      std::vector<bool> seen(static_cast<size_t>(m), false);
      for (int i = 0; i < l; ++i) {
        const Rat& zi = points[chosen[i]];
        term *= rat_pow(zi, shape.parts[i]);
        seen[chosen[i]] = true;
        // every variable beyond the ones already consumed
        for (int y = 0; y < m; ++y) {
          if (seen[y]) continue;
          term *= (zi + points[y]) / (zi - points[y]);
        }
      }
      sum += term;
      return;
    }
    for (int y = 0; y < m; ++y) {
      if (used[y]) continue;
      used[y] = true;
      chosen.push_back(y);
      self(self);
      chosen.pop_back();
      used[y] = false;
    }
  };
  rec(rec);
  return Rat(int_pow2(l)) * sum;
}

MonomialExpansion monomial_expand(const MultiPoly& p) {
  // Group the terms by their sorted exponent vector and insist every orbit
  // is complete with a constant coefficient.
  struct Group {
    Rat coeff;
    Int count;
  };
  std::map<std::vector<int>, Group, LexGreaterVec> groups;
  for (const auto& [e, c] : p.terms) {
    std::vector<int> key = sorted_desc(e);
    auto it = groups.find(key);
    if (it == groups.end()) {
      groups.emplace(std::move(key), Group{c, 1});
    } else {
      if (it->second.coeff != c)
        throw std::domain_error(
            "monomial_expand: not symmetric (conflicting coefficients in the "
            "orbit of z^(" +
            format_parts(it->first) + "))");
      it->second.count += 1;
    }
  }
  MonomialExpansion out;
  for (const auto& [key, grp] : groups) {
    if (grp.count != orbit_size(key, p.nvars))
      throw std::domain_error(
          "monomial_expand: not symmetric (incomplete orbit of z^(" +
          format_parts(key) + "))");
    out.emplace(key, grp.coeff);
  }
  return out;
}

namespace {

// Cache of Q-basis monomial expansions keyed by (shape, nvars).
const MonomialExpansion& q_basis_expansion(const std::vector<int>& shape,
                                           int nvars) {
  static std::map<std::pair<std::vector<int>, int>, MonomialExpansion> cache;
  auto key = std::make_pair(shape, nvars);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache
             .emplace(key,
                      monomial_expand(Q_tableau(StrictPartition(shape), nvars)))
             .first;
  return it->second;
}

}  // namespace

QExpansion expand_in_Q_basis(const MonomialExpansion& f, int n, int nvars) {
  if (nvars < n)
    throw std::invalid_argument("expand_in_Q_basis: need nvars >= n");
  QExpansion out;
  out.degree = n;
  MonomialExpansion residual = f;
  for (const auto& [key, coeff] : residual)
    if (total_degree(key) != n)
      throw std::invalid_argument(
          "expand_in_Q_basis: input not homogeneous of degree " +
          std::to_string(n));

  for (const StrictPartition& mu : enumerate_strict(n)) {
    const MonomialExpansion& qexp = q_basis_expansion(mu.parts, nvars);
    // Verify the pivot: lex-largest monomial is z^mu with coefficient
    // 2^length.
    if (qexp.empty() || !(qexp.begin()->first == mu.parts))
      throw std::logic_error("expand_in_Q_basis: pivot of Q_(" +
                             format_parts(mu.parts) + ") is not z^shape");
    const Rat& lead = qexp.begin()->second;
    if (lead != Rat(int_pow2(mu.length())))
      throw std::logic_error("expand_in_Q_basis: pivot coefficient of Q_(" +
                             format_parts(mu.parts) + ") is not 2^length");

    auto it = residual.find(mu.parts);
    if (it == residual.end() || it->second == 0) continue;
    Rat d = it->second / lead;
    for (const auto& [key, c] : qexp) {
      auto rit = residual.find(key);
      if (rit == residual.end())
        residual.emplace(key, -d * c);
      else {
        rit->second -= d * c;
        if (rit->second == 0) residual.erase(rit);
      }
    }
    out.terms.emplace(mu.parts, d);
  }
  for (const auto& [key, c] : residual)
    if (c != 0)
      throw std::domain_error(
          "expand_in_Q_basis: residual monomial z^(" + format_parts(key) +
          ") with coefficient " + rat_to_string(c) +
          "; input is outside the Q span");
  return out;
}

bool cauchy_check(int n, int ny, int nz) {
  if (n < 0 || ny < 1 || nz < 1)
    throw std::invalid_argument("cauchy_check: bad arguments");
  const int nv = ny + nz;
  const int cap = 2 * n;
  // Left side: product over pairs of 1 + sum_{s>=1} 2 (y_i z_j)^s.
  MultiPoly lhs = MultiPoly::constant(nv, 1);
  for (int i = 0; i < ny; ++i)
    for (int j = 0; j < nz; ++j) {
      MultiPoly factor = MultiPoly::constant(nv, 1);
      std::vector<int> e(nv, 0);
      for (int s = 1; 2 * s <= cap; ++s) {
        e[i] = s;
        e[ny + j] = s;
        factor.terms.emplace(e, Rat(2));
      }
      lhs = mul(lhs, factor, cap);
    }
  // Keep only terms with y-degree and z-degree both <= n (they are equal on
  // both sides).
  MultiPoly lhs_cut = MultiPoly::zero(nv);
  for (const auto& [e, c] : lhs.terms) {
    long dy = 0, dz = 0;
    for (int i = 0; i < ny; ++i) dy += e[i];
    for (int j = 0; j < nz; ++j) dz += e[ny + j];
    if (dy <= n && dz <= n) lhs_cut.terms.emplace(e, c);
  }

  MultiPoly rhs = MultiPoly::zero(nv);
  for (int d = 0; d <= n; ++d)
    for (const StrictPartition& mu : enumerate_strict(d)) {
      MultiPoly qy = Q_tableau(mu, ny);
      MultiPoly qz = Q_tableau(mu, nz);
      // Embed the two alphabets side by side.
      MultiPoly ey = MultiPoly::zero(nv), ez = MultiPoly::zero(nv);
      for (const auto& [e, c] : qy.terms) {
        std::vector<int> w(nv, 0);
        std::copy(e.begin(), e.end(), w.begin());
        ey.terms.emplace(std::move(w), c);
      }
      for (const auto& [e, c] : qz.terms) {
        std::vector<int> w(nv, 0);
        std::copy(e.begin(), e.end(), w.begin() + ny);
        ez.terms.emplace(std::move(w), c);
      }
      rhs = add(rhs, scale(mul(ey, ez), Rat(1, int_pow2(mu.length()))));
    }
  return lhs_cut == rhs;
}

QExpansion ch_sym_degree(int n, int j) {
  if (n < 1 || j < 0)
    throw std::invalid_argument("ch_sym_degree: need n >= 1, j >= 0");
  const int nvars = n;
  MonomialExpansion f;
  for (const Composition& nu : enumerate_compositions(n, j + 1)) {
    if (n_stat(nu.parts) != j) continue;
    for (const auto& [key, c] : monomial_expand(q_nu(nu, nvars))) {
      auto it = f.find(key);
      if (it == f.end())
        f.emplace(key, c);
      else
        it->second += c;
    }
  }
  return expand_in_Q_basis(f, n, nvars);
}

QExpansion ch_bigraded_degree(int n, int p, int q) {
  if (n < 1 || p < 0 || q < 0 || q > n)
    throw std::invalid_argument("ch_bigraded_degree: need n >= 1, p >= 0, "
                                "0 <= q <= n");
  const int nvars = n;
  MonomialExpansion f;
  for (const Composition& alpha : enumerate_compositions(n - q, p + 1)) {
    const long pa = n_stat(alpha.parts);
    if (pa > p) continue;
    for (const Composition& beta : enumerate_compositions(q, p + 1)) {
      if (n_stat(beta.parts) != p - pa) continue;
      MultiPoly prod = mul(q_nu(alpha, nvars), q_nu(beta, nvars));
      for (const auto& [key, c] : monomial_expand(prod)) {
        auto it = f.find(key);
        if (it == f.end())
          f.emplace(key, c);
        else
          it->second += c;
      }
    }
  }
  return expand_in_Q_basis(f, n, nvars);
}

}  // namespace shiftedq
