#include "shiftedq/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace shiftedq {

namespace {

void check_trunc(int trunc) {
  if (trunc < 1) throw std::invalid_argument("Series: trunc must be >= 1");
}

void check_same(const Series& a, const Series& b) {
  if (a.trunc != b.trunc)
    throw std::invalid_argument("Series: truncation mismatch (" +
                                std::to_string(a.trunc) + " vs " +
                                std::to_string(b.trunc) + ")");
}

std::string coeff_term(const Rat& r, int deg, const std::string& var) {
  std::string cs = rat_to_string(r);
  if (deg == 0) return cs;
  std::string v = deg == 1 ? var : var + "^" + std::to_string(deg);
  if (r == 1) return v;
  if (r == -1) return "-" + v;
  bool composite = cs.find('/') != std::string::npos;
  if (composite) cs = "(" + cs + ")";
  return cs + "*" + v;
}

std::string render_terms(const std::vector<Rat>& c, const std::string& var) {
  std::string out;
  for (size_t d = 0; d < c.size(); ++d) {
    if (c[d] == 0) continue;
    if (out.empty()) {
      out = coeff_term(c[d], static_cast<int>(d), var);
    } else if (c[d] < 0) {
      out += " - " + coeff_term(-c[d], static_cast<int>(d), var);
    } else {
      out += " + " + coeff_term(c[d], static_cast<int>(d), var);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

Series::Series(int trunc_) : trunc(trunc_) {
  check_trunc(trunc_);
  c.assign(static_cast<size_t>(trunc_), Rat(0));
}

Series Series::one(int trunc_) {
  Series s(trunc_);
  s.c[0] = 1;
  return s;
}

Series Series::monomial(int deg, const Rat& coeff, int trunc_) {
  if (deg < 0) throw std::invalid_argument("Series::monomial: negative degree");
  Series s(trunc_);
  if (deg < trunc_) s.c[deg] = coeff;
  return s;
}

const Rat& Series::coeff(int d) const {
  if (d < 0 || d >= trunc)
    throw std::out_of_range("Series::coeff: degree " + std::to_string(d) +
                            " outside truncation " + std::to_string(trunc));
  return c[d];
}

bool Series::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Rat& r) { return r == 0; });
}

Series add(const Series& a, const Series& b) {
  check_same(a, b);
  Series out(a.trunc);
  for (int d = 0; d < a.trunc; ++d) out.c[d] = a.c[d] + b.c[d];
  return out;
}

Series sub(const Series& a, const Series& b) {
  check_same(a, b);
  Series out(a.trunc);
  for (int d = 0; d < a.trunc; ++d) out.c[d] = a.c[d] - b.c[d];
  return out;
}

Series mul(const Series& a, const Series& b) {
  check_same(a, b);
  Series out(a.trunc);
  for (int i = 0; i < a.trunc; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; i + j < a.trunc; ++j) {
      if (b.c[j] == 0) continue;
      out.c[i + j] += a.c[i] * b.c[j];
    }
  }
  return out;
}

Series scale(const Series& a, const Rat& r) {
  Series out(a.trunc);
  for (int d = 0; d < a.trunc; ++d) out.c[d] = a.c[d] * r;
  return out;
}

Series shift(const Series& a, int k) {
  if (k < 0) throw std::invalid_argument("shift: negative exponent");
  Series out(a.trunc);
  for (int d = 0; d + k < a.trunc; ++d) out.c[d + k] = a.c[d];
  return out;
}

Series truncate(const Series& a, int trunc) {
  check_trunc(trunc);
  if (trunc > a.trunc)
    throw std::invalid_argument("truncate: cannot extend a series");
  Series out(trunc);
  std::copy(a.c.begin(), a.c.begin() + trunc, out.c.begin());
  return out;
}

Series inv_one_minus(int k, int trunc) {
  if (k < 1) throw std::invalid_argument("inv_one_minus: need k >= 1");
  Series out(trunc);
  for (int d = 0; d < trunc; d += k) out.c[d] = 1;
  return out;
}

Series operator+(const Series& a, const Series& b) { return add(a, b); }
Series operator-(const Series& a, const Series& b) { return sub(a, b); }
Series operator*(const Series& a, const Series& b) { return mul(a, b); }

std::string to_string(const Series& a, const std::string& var) {
  return render_terms(a.c, var) + " + O(" + var + "^" +
         std::to_string(a.trunc) + ")";
}

Poly poly_normalize(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return poly_normalize(out);
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return poly_normalize(out);
}

Poly poly_scale(const Poly& a, const Rat& r) {
  Poly out = a;
  for (Rat& x : out) x *= r;
  return poly_normalize(out);
}

int poly_degree(const Poly& a) {
  for (size_t i = a.size(); i > 0; --i)
    if (a[i - 1] != 0) return static_cast<int>(i - 1);
  return -1;
}

Rat poly_eval(const Poly& a, const Rat& x) {
  Rat out = 0;
  for (size_t i = a.size(); i > 0; --i) out = out * x + a[i - 1];
  return out;
}

Poly poly_divide_exact(const Poly& num, const Poly& den) {
  Poly n = poly_normalize(num), d = poly_normalize(den);
  if (d.empty()) throw std::domain_error("poly_divide_exact: division by zero");
  if (n.empty()) return {};
  if (n.size() < d.size())
    throw std::domain_error("poly_divide_exact: nonzero remainder");
  Poly q(n.size() - d.size() + 1, Rat(0));
  for (size_t i = q.size(); i > 0; --i) {
    size_t top = i - 1 + d.size() - 1;
    Rat f = n[top] / d.back();
    q[i - 1] = f;
    if (f == 0) continue;
    for (size_t j = 0; j < d.size(); ++j) n[i - 1 + j] -= f * d[j];
  }
  for (const Rat& r : n)
    if (r != 0) throw std::domain_error("poly_divide_exact: nonzero remainder");
  return poly_normalize(q);
}

Series poly_to_series(const Poly& a, int trunc) {
  Series out(trunc);
  for (size_t i = 0; i < a.size() && i < static_cast<size_t>(trunc); ++i)
    out.c[i] = a[i];
  return out;
}

std::string to_string(const Poly& a, const std::string& var) {
  return render_terms(a, var);
}

BiSeries::BiSeries(int sdeg_, int trunc_) : sdeg(sdeg_), trunc(trunc_) {
  if (sdeg_ < 0) throw std::invalid_argument("BiSeries: sdeg must be >= 0");
  check_trunc(trunc_);
  rows.assign(static_cast<size_t>(sdeg_) + 1, Series(trunc_));
}

const Rat& BiSeries::coeff(int tdeg, int spow) const {
  if (spow < 0 || spow > sdeg)
    throw std::out_of_range("BiSeries::coeff: s-power " +
                            std::to_string(spow) + " outside degree " +
                            std::to_string(sdeg));
  return rows[spow].coeff(tdeg);
}

BiSeries add(const BiSeries& a, const BiSeries& b) {
  if (a.sdeg != b.sdeg || a.trunc != b.trunc)
    throw std::invalid_argument("BiSeries: shape mismatch in add");
  BiSeries out(a.sdeg, a.trunc);
  for (int q = 0; q <= a.sdeg; ++q) out.rows[q] = add(a.rows[q], b.rows[q]);
  return out;
}

BiSeries mul(const BiSeries& a, const BiSeries& b) {
  if (a.sdeg != b.sdeg || a.trunc != b.trunc)
    throw std::invalid_argument("BiSeries: shape mismatch in mul");
  BiSeries out(a.sdeg, a.trunc);
  for (int qa = 0; qa <= a.sdeg; ++qa) {
    if (a.rows[qa].is_zero()) continue;
    for (int qb = 0; qa + qb <= a.sdeg; ++qb) {
      if (b.rows[qb].is_zero()) continue;
      out.rows[qa + qb] = add(out.rows[qa + qb], mul(a.rows[qa], b.rows[qb]));
    }
  }
  return out;
}

BiSeries scale(const BiSeries& a, const Rat& r) {
  BiSeries out(a.sdeg, a.trunc);
  for (int q = 0; q <= a.sdeg; ++q) out.rows[q] = scale(a.rows[q], r);
  return out;
}

BiSeries from_series(const Series& a, int sdeg) {
  BiSeries out(sdeg, a.trunc);
  out.rows[0] = a;
  return out;
}

Series substitute_t_equals_s_squared(const BiSeries& a, int strunc) {
  Series out(strunc);
  for (int q = 0; q <= a.sdeg; ++q)
    for (int p = 0; p < a.trunc; ++p) {
      long d = 2L * p + q;
      if (d < strunc) out.c[d] += a.rows[q].c[p];
    }
  return out;
}

std::string to_string(const BiSeries& a) {
  std::string out;
  for (int q = 0; q <= a.sdeg; ++q) {
    if (a.rows[q].is_zero()) continue;
    if (!out.empty()) out += "\n";
    out += "s^" + std::to_string(q) + ": " + to_string(a.rows[q]);
  }
  return out.empty() ? "0" : out;
}

Series extract_u_coeff(const std::vector<std::vector<Series>>& factors, int n,
                       int trunc) {
  if (n < 0) throw std::invalid_argument("extract_u_coeff: negative power");
  // acc[i] = coefficient of u^i of the running product, i <= n.
  std::vector<Series> acc(static_cast<size_t>(n) + 1, Series(trunc));
  acc[0] = Series::one(trunc);
  for (const auto& f : factors) {
    std::vector<Series> next(static_cast<size_t>(n) + 1, Series(trunc));
    for (int i = 0; i <= n; ++i) {
      if (acc[i].is_zero()) continue;
      for (int j = 0; i + j <= n && j < static_cast<int>(f.size()); ++j)
        next[i + j] = add(next[i + j], mul(acc[i], f[j]));
    }
    acc = std::move(next);
  }
  return acc[n];
}

}  // namespace shiftedq
