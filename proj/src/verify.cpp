#include "shiftedq/verify.hpp"

#include "shiftedq/bijection.hpp"
#include "shiftedq/classical.hpp"
#include "shiftedq/io.hpp"
#include "shiftedq/multiplicities.hpp"
#include "shiftedq/partitions.hpp"
#include "shiftedq/qfunctions.hpp"
#include "shiftedq/series.hpp"
#include "shiftedq/specializations.hpp"
#include "shiftedq/tableaux.hpp"

#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace shiftedq {

namespace {

// Collects the first failure; a clean run leaves ok = true and lets the
// check fill in a one-line summary.
struct Ctx {
  bool ok = true;
  std::string first;
  std::string summary;

  void fail(const std::string& msg) {
    if (ok) {
      ok = false;
      first = msg;
    }
  }
};

std::vector<StrictPartition> strict_upto(int nmax) {
  std::vector<StrictPartition> out;
  for (int n = 0; n <= nmax; ++n)
    for (const StrictPartition& s : enumerate_strict(n)) out.push_back(s);
  return out;
}

std::string shape_str(const StrictPartition& s) {
  return "(" + format_parts(s.parts) + ")";
}

std::string shape_str(const Partition& s) {
  return "(" + format_parts(s.parts) + ")";
}

// Multiplicity = this factor times the Q-expansion coefficient of the
// module characteristic (the simple module maps to 2^-((l-d)/2) Q).
Rat oracle_scale(const StrictPartition& s) {
  return Rat(int_pow2((s.length() - delta(s)) / 2));
}

// 1. The three independent principal-specialization routes agree.
void check_principal(bool quick, Ctx& c) {
  const int nmax = quick ? 6 : 8;
  const int trunc = quick ? 13 : 21;
  int shapes = 0;
  for (const StrictPartition& s : strict_upto(nmax)) {
    const Series hook = Q_principal_hook(s, trunc);
    const Series poch = Q_principal_pochhammer(s, trunc);
    const Series tab = Q_principal_tableau(s, trunc);
    if (!(hook == poch)) {
      c.fail("hook-content and pochhammer products disagree for " +
             shape_str(s));
      return;
    }
    if (!(hook == tab)) {
      c.fail("hook-content product and tableau sum disagree for " +
             shape_str(s));
      return;
    }
    ++shapes;
  }
  c.summary = std::to_string(shapes) + " shapes agree three ways up to t^" +
              std::to_string(trunc - 1);
}

// 2. The exchange algorithm is a weight-preserving bijection between marked
// and colored tableaux, and reproduces the worked 11-cell example stage by
// stage.
void check_bijection(bool quick, Ctx& c) {
  const ShiftedTableau t0 = parse_tableau_text("1' 1 2' 2 2\n2' 2 3' 3\n3' 3");
  const ShiftedTableau s1 = parse_tableau_text("1' 1");
  const ShiftedTableau s2 = parse_tableau_text("1' 2' 1 2 2\n2' 2");
  const ShiftedTableau s3 =
      parse_tableau_text("1' 2' 3' 1 2\n2' 2 2 3\n3' 3");

  const ForwardResult fw = forward(t0);
  if (!(fw.image == s3)) {
    c.fail("worked example: forward image differs from the expected colored "
           "tableau");
    return;
  }
  if (fw.stages.size() != 3 || !(fw.stages[0] == s1) ||
      !(fw.stages[1] == s2) || !(fw.stages[2] == s3)) {
    c.fail("worked example: intermediate stages differ");
    return;
  }
  if (!(apply_trace(t0, fw.trace) == s3)) {
    c.fail("worked example: forward trace does not replay");
    return;
  }
  const InverseResult in0 = inverse(s3);
  if (!(in0.preimage == t0)) {
    c.fail("worked example: inverse does not recover the marked tableau");
    return;
  }
  if (in0.stages.size() != 2 || !(in0.stages[0] == s2) ||
      !(in0.stages[1] == s1)) {
    c.fail("worked example: inverse stages differ");
    return;
  }
  if (!(apply_trace(s3, in0.trace) == t0)) {
    c.fail("worked example: inverse trace does not replay");
    return;
  }

  const int nmax = quick ? 6 : 8;
  const int m = quick ? 3 : 4;
  long trips = 0;
  int shapes = 0;
  for (const StrictPartition& s : strict_upto(nmax)) {
    const auto marked = enumerate_marked(s, m);
    const auto colored = enumerate_colored(s, m);
    if (marked.size() != colored.size()) {
      c.fail("tableau counts differ for " + shape_str(s) + ": " +
             std::to_string(marked.size()) + " marked vs " +
             std::to_string(colored.size()) + " colored");
      return;
    }
    std::map<std::vector<int>, long> wm, wc;
    for (const ShiftedTableau& t : marked) ++wm[weight(t, m).parts];
    for (const ShiftedTableau& t : colored) ++wc[weight(t, m).parts];
    if (wm != wc) {
      c.fail("weight distributions differ for " + shape_str(s));
      return;
    }
    for (const ShiftedTableau& t : marked) {
      const ForwardResult f = forward(t);
      if (!validate_colored(f.image).ok) {
        c.fail("forward image invalid for a tableau of shape " +
               shape_str(s));
        return;
      }
      if (!(weight(f.image, m) == weight(t, m))) {
        c.fail("forward changed the weight for a tableau of shape " +
               shape_str(s));
        return;
      }
      if (!(apply_trace(t, f.trace) == f.image)) {
        c.fail("forward trace fails to replay for shape " + shape_str(s));
        return;
      }
      if (!(inverse(f.image).preimage == t)) {
        c.fail("inverse(forward) is not the identity for a tableau of "
               "shape " +
               shape_str(s));
        return;
      }
      ++trips;
    }
    for (const ShiftedTableau& t : colored) {
      const InverseResult iv = inverse(t);
      if (!(apply_trace(t, iv.trace) == iv.preimage)) {
        c.fail("inverse trace fails to replay for shape " + shape_str(s));
        return;
      }
      if (!(forward(iv.preimage).image == t)) {
        c.fail("forward(inverse) is not the identity for a tableau of "
               "shape " +
               shape_str(s));
        return;
      }
      ++trips;
    }
    ++shapes;
  }
  c.summary = "worked example reproduced; " + std::to_string(trips) +
              " round trips over " + std::to_string(shapes) +
              " shapes with letters up to " + std::to_string(m);
}

// 3. Graded multiplicities in the full polynomial twist match the induced-
// character oracle degree by degree.
void check_graded_oracle(bool quick, Ctx& c) {
  const int nmax = quick ? 4 : 6;
  const int jmax = quick ? 5 : 8;
  const int trunc = jmax + 1;
  long comparisons = 0;
  for (int n = 1; n <= nmax && c.ok; ++n) {
    const auto shapes = enumerate_strict(n);
    std::vector<Series> mult;
    mult.reserve(shapes.size());
    for (const StrictPartition& s : shapes)
      mult.push_back(graded_mult_sym(s, trunc));
    for (int j = 0; j <= jmax && c.ok; ++j) {
      const QExpansion e = ch_sym_degree(n, j);
      for (size_t i = 0; i < shapes.size(); ++i) {
        Rat d = 0;
        auto it = e.terms.find(shapes[i].parts);
        if (it != e.terms.end()) d = it->second;
        if (mult[i].coeff(j) != oracle_scale(shapes[i]) * d) {
          c.fail("degree " + std::to_string(j) + " multiplicity of " +
                 shape_str(shapes[i]) + " disagrees with the character "
                 "oracle");
          break;
        }
        ++comparisons;
      }
    }
  }
  if (c.ok)
    c.summary = std::to_string(comparisons) + " coefficients matched for n "
                "up to " +
                std::to_string(nmax) + ", degrees up to " +
                std::to_string(jmax);
}

// 4. Bigraded multiplicities (extra exterior alphabet) match the two-
// composition character oracle in both gradings.
void check_bigraded_oracle(bool quick, Ctx& c) {
  const int nmax = quick ? 4 : 5;
  const int pmax = quick ? 3 : 5;
  const int trunc = pmax + 1;
  long comparisons = 0;
  for (int n = 1; n <= nmax && c.ok; ++n) {
    const auto shapes = enumerate_strict(n);
    std::vector<BiSeries> mult;
    mult.reserve(shapes.size());
    for (const StrictPartition& s : shapes)
      mult.push_back(bigraded_mult(s, trunc));
    for (int p = 0; p <= pmax && c.ok; ++p) {
      for (int q = 0; q <= n && c.ok; ++q) {
        const QExpansion e = ch_bigraded_degree(n, p, q);
        for (size_t i = 0; i < shapes.size(); ++i) {
          Rat d = 0;
          auto it = e.terms.find(shapes[i].parts);
          if (it != e.terms.end()) d = it->second;
          if (mult[i].coeff(p, q) != oracle_scale(shapes[i]) * d) {
            c.fail("bidegree (" + std::to_string(p) + "," +
                   std::to_string(q) + ") multiplicity of " +
                   shape_str(shapes[i]) +
                   " disagrees with the character oracle");
            break;
          }
          ++comparisons;
        }
      }
    }
  }
  if (c.ok)
    c.summary = std::to_string(comparisons) + " coefficients matched for n "
                "up to " +
                std::to_string(nmax) + ", t-degrees up to " +
                std::to_string(pmax);
}

// 5. The coinvariant multiplicity polynomial evaluated at t = 1 carries the
// dimension of the simple module, with the standard-tableau count taken
// from brute-force enumeration.
void check_coinvariant_dimension(bool quick, Ctx& c) {
  const int nmax = quick ? 7 : 9;
  int shapes = 0;
  for (const StrictPartition& s : strict_upto(nmax)) {
    const int n = s.size();
    const Int g = count_standard_brute(s);
    if (g != g_hook(s)) {
      c.fail("hook count of standard tableaux disagrees with enumeration "
             "for " +
             shape_str(s));
      return;
    }
    const Rat value = poly_eval(graded_mult_coinv(s), Rat(1));
    const int e = n - (s.length() - delta(s)) / 2;
    const Rat expected = Rat(int_pow2(e) * g, int_pow2(delta(s)));
    if (value != expected) {
      c.fail("coinvariant multiplicity at t = 1 is " + rat_to_string(value) +
             " for " + shape_str(s) + ", expected " +
             rat_to_string(expected));
      return;
    }
    ++shapes;
  }
  c.summary = std::to_string(shapes) +
              " shapes carry the simple-module dimension at t = 1";
}

// 6. One-row shapes: closed product forms for both multiplicity series.
void check_basic_module(bool quick, Ctx& c) {
  const int nmax = quick ? 6 : 10;
  const int trunc = 24;
  for (int n = 1; n <= nmax; ++n) {
    const StrictPartition row({n});
    Series expected = Series::one(trunc);
    for (int j = 1; j < n; ++j) {
      Series f = Series::one(trunc);
      if (j < trunc) f.c[j] += 1;
      expected = mul(expected, f);
    }
    for (int k = 1; k <= n; ++k)
      expected = mul(expected, inv_one_minus(k, trunc));
    if (!(graded_mult_sym(row, trunc) == expected)) {
      c.fail("one-row multiplicity series differs from the closed product "
             "for n = " +
             std::to_string(n));
      return;
    }
    Poly coinv_expected = {Rat(1)};
    for (int j = 1; j < n; ++j) {
      Poly f(static_cast<size_t>(j) + 1, Rat(0));
      f[0] = 1;
      f[j] = 1;
      coinv_expected = poly_mul(coinv_expected, f);
    }
    if (!(graded_mult_coinv(row) == coinv_expected)) {
      c.fail("one-row coinvariant multiplicity differs from prod(1 + t^j) "
             "for n = " +
             std::to_string(n));
      return;
    }
  }
  c.summary = "one-row closed forms hold for n up to " + std::to_string(nmax);
}

// 7. Cauchy-type identity in two finite alphabets.
void check_cauchy(bool quick, Ctx& c) {
  const int n = quick ? 3 : 4;
  if (!cauchy_check(n, 3, 3)) {
    c.fail("product and Q-sum sides differ in 3 + 3 variables at total "
           "degree " +
           std::to_string(n));
    return;
  }
  c.summary = "3 + 3 variables agree through bidegree (" + std::to_string(n) +
              ", " + std::to_string(n) + ")";
}

// 8. Reverse-plane-tableau generating function equals the shifted hook
// product.
void check_rpt(bool quick, Ctx& c) {
  const int nmax = quick ? 4 : 6;
  const int deg = quick ? 8 : 12;
  const int trunc = deg + 1;
  int shapes = 0;
  for (const StrictPartition& s : strict_upto(nmax)) {
    Series sum(trunc);
    for (const ShiftedRPT& t : enumerate_rpt(s, deg)) sum.c[rpt_total(t)] += 1;
    Series prod = Series::one(trunc);
    for (Cell cell : shifted_cells(s))
      prod = mul(prod, inv_one_minus(shifted_hook(s, cell), trunc));
    if (!(sum == prod)) {
      c.fail("reverse-plane sum and hook product disagree for " +
             shape_str(s));
      return;
    }
    ++shapes;
  }
  c.summary = std::to_string(shapes) + " shapes agree up to t^" +
              std::to_string(deg);
}

// 9. Two-letter evaluation: closed two-row formula, zero beyond two rows.
void check_two_row(bool quick, Ctx& c) {
  const int nmax = quick ? 5 : 7;
  int shapes = 0, zeros = 0;
  for (const StrictPartition& s : strict_upto(nmax)) {
    const Poly closed = Q_one_s(s);
    Poly direct;
    for (const ShiftedTableau& t : enumerate_marked(s, 2)) {
      size_t d = 0;
      for (const MarkedLetter& x : t.entries)
        if (x.value == 2) ++d;
      if (direct.size() <= d) direct.resize(d + 1, Rat(0));
      direct[d] += 1;
    }
    direct = poly_normalize(direct);
    if (!(closed == direct)) {
      c.fail("closed form and two-letter enumeration disagree for " +
             shape_str(s));
      return;
    }
    if (s.length() >= 3) {
      if (!closed.empty()) {
        c.fail("expected the zero polynomial for " + shape_str(s));
        return;
      }
      ++zeros;
    }
    ++shapes;
  }
  c.summary = std::to_string(shapes) + " shapes match, " +
              std::to_string(zeros) + " of them vanishing (three or more "
              "rows)";
}

// 10. Koszul regrading: substituting t = s^2 into the bigraded series
// recovers the singly graded one.
void check_koszul(bool quick, Ctx& c) {
  const int nmax = quick ? 4 : 6;
  const int sdeg = quick ? 12 : 20;
  const int btrunc = quick ? 7 : 11;  // 2 * btrunc covers every s-degree
  int shapes = 0;
  for (const StrictPartition& s : strict_upto(nmax)) {
    const Series lhs =
        substitute_t_equals_s_squared(bigraded_mult(s, btrunc), sdeg + 1);
    const Series rhs = graded_mult_sym(s, sdeg + 1);
    if (!(lhs == rhs)) {
      c.fail("t = s^2 substitution differs from the graded series for " +
             shape_str(s));
      return;
    }
    ++shapes;
  }
  c.summary = std::to_string(shapes) + " shapes agree up to s^" +
              std::to_string(sdeg);
}

// 11. Unshifted analogues: hook-product principal specialization vs the
// semistandard-tableau sum, and the one-row two-parameter product.
void check_classical(bool quick, Ctx& c) {
  const int nmax = quick ? 6 : 8;
  const int trunc = 17;
  int shapes = 0;
  for (int n = 0; n <= nmax; ++n)
    for (const Partition& p : enumerate_partitions(n)) {
      if (!(kirillov_series(p, trunc) == schur_principal(p, trunc))) {
        c.fail("hook product and tableau sum disagree for " + shape_str(p));
        return;
      }
      ++shapes;
    }
  const int rows = quick ? 5 : 8;
  for (int n = 1; n <= rows; ++n) {
    if (!(kirillov_pak(Partition({n}), trunc) == solomon_series(n, trunc))) {
      c.fail("one-row two-parameter product differs from the descent form "
             "for n = " +
             std::to_string(n));
      return;
    }
  }
  c.summary = std::to_string(shapes) + " ordinary shapes up to t^" +
              std::to_string(trunc - 1) + "; one-row refinements to n = " +
              std::to_string(rows);
}

}  // namespace

std::vector<CheckResult> run_acceptance(bool quick) {
  using Entry = std::pair<const char*, std::function<void(bool, Ctx&)>>;
  const std::vector<Entry> checks = {
      {"principal-three-way", check_principal},
      {"exchange-bijection", check_bijection},
      {"graded-mult-oracle", check_graded_oracle},
      {"bigraded-mult-oracle", check_bigraded_oracle},
      {"coinvariant-dimension", check_coinvariant_dimension},
      {"basic-module", check_basic_module},
      {"cauchy-identity", check_cauchy},
      {"rpt-hook-product", check_rpt},
      {"two-row-wedge", check_two_row},
      {"koszul-substitution", check_koszul},
      {"classical-suite", check_classical},
  };

  std::vector<CheckResult> out;
  for (const auto& [name, fn] : checks) {
    Ctx ctx;
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(quick, ctx);
    } catch (const std::exception& ex) {
      ctx.fail(std::string("exception: ") + ex.what());
    }
    const auto stop = std::chrono::steady_clock::now();
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
            .count();
    std::ostringstream detail;
    detail << (ctx.ok ? ctx.summary : ctx.first) << " [" << ms / 1000 << "."
           << (ms % 1000) / 100 << "s]";
    out.push_back({name, ctx.ok, detail.str()});
  }
  return out;
}

}  // namespace shiftedq
