// Command-line front end for the shifted-tableau library: diagram tables,
// tableau enumeration, the exchange bijection, Q-function expansions,
// specializations, multiplicity series, classical analogues, and the
// cross-validation suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include "shiftedq/bijection.hpp"
#include "shiftedq/classical.hpp"
#include "shiftedq/io.hpp"
#include "shiftedq/multiplicities.hpp"
#include "shiftedq/partitions.hpp"
#include "shiftedq/qfunctions.hpp"
#include "shiftedq/series.hpp"
#include "shiftedq/specializations.hpp"
#include "shiftedq/tableaux.hpp"
#include "shiftedq/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace shiftedq;
using nlohmann::json;

namespace {

int env_trunc() {
  const char* v = std::getenv("SHIFTEDQ_TRUNC");
  if (v == nullptr) return 24;
  std::string s(v);
  size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || value < 1)
    throw std::invalid_argument(
        "SHIFTEDQ_TRUNC must be a positive integer, got '" + s + "'");
  return value;
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open input file '" + path + "'");
    buf << f.rdbuf();
  }
  return buf.str();
}

// Output plumbing: every command builds a JSON document and a human
// rendering; --json switches stdout to the document, --out additionally
// writes it to a file.
struct Output {
  bool json_mode = false;
  std::string out_path;

  void emit(const json& doc, const std::string& human) const {
    if (json_mode)
      std::cout << doc.dump(2) << "\n";
    else
      std::cout << human;
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      if (!f)
        throw std::invalid_argument("cannot open output file '" + out_path +
                                    "'");
      f << doc.dump(2) << "\n";
    }
  }
};

// Rows of numbers laid out like the diagram: row i of a shifted table is
// indented by i - 1 columns.
std::string number_table(const std::vector<std::vector<int>>& rows,
                         bool shifted) {
  size_t width = 1;
  for (const auto& row : rows)
    for (int v : row) width = std::max(width, std::to_string(v).size());
  std::string out;
  for (size_t i = 0; i < rows.size(); ++i) {
    std::string line;
    if (shifted) line.assign(i * (width + 1), ' ');
    for (size_t j = 0; j < rows[i].size(); ++j) {
      std::string tok = std::to_string(rows[i][j]);
      tok.insert(0, width - tok.size(), ' ');
      if (j) line += ' ';
      line += tok;
    }
    out += line;
    out += '\n';
  }
  return out;
}

std::string qexpansion_to_string(const QExpansion& e) {
  if (e.terms.empty()) return "0";
  std::string out;
  for (const auto& [parts, coeff] : e.terms) {
    if (!out.empty()) out += " + ";
    if (coeff != Rat(1)) out += rat_to_string(coeff) + "*";
    out += "Q(" + format_parts(parts) + ")";
  }
  return out;
}

std::string monomials_to_string(const MonomialExpansion& m) {
  if (m.empty()) return "0";
  std::string out;
  for (const auto& [parts, coeff] : m) {
    if (!out.empty()) out += " + ";
    if (coeff != Rat(1)) out += rat_to_string(coeff) + "*";
    out += "m(" + format_parts(parts) + ")";
  }
  return out;
}

json monomials_json(const MonomialExpansion& m) {
  json terms = json::array();
  for (const auto& [parts, coeff] : m)
    terms.push_back({{"exponent", parts}, {"coeff", rat_json(coeff)}});
  return terms;
}

json trace_json(const ExchangeTrace& trace) {
  json steps = json::array();
  for (const ExchangeStep& s : trace)
    steps.push_back({{"letter", s.letter},
                     {"from", {s.from.row, s.from.col}},
                     {"to", {s.to.row, s.to.col}},
                     {"rule", s.rule == ExchangeCase::I ? "I" : "II"}});
  return steps;
}

// ---------------------------------------------------------------------------

int run_shape(const std::string& strict_arg, const std::string& part_arg,
              const std::string& show, const Output& out) {
  json doc;
  std::ostringstream human;
  const bool all = show == "all";
  if (!strict_arg.empty()) {
    const StrictPartition s = parse_strict(strict_arg);
    doc["strict"] = s.parts;
    doc["size"] = s.size();
    doc["nstat"] = n_stat(s.parts);
    doc["delta"] = delta(s);
    human << "strict shape (" << format_parts(s.parts) << "), size "
          << s.size() << ", n = " << n_stat(s.parts) << ", delta = "
          << delta(s) << "\n";
    std::vector<std::vector<int>> hooks(s.length()), contents(s.length());
    for (Cell c : shifted_cells(s)) {
      hooks[c.row - 1].push_back(shifted_hook(s, c));
      contents[c.row - 1].push_back(content(c));
    }
    if (all || show == "cells") {
      json cells = json::array();
      for (Cell c : shifted_cells(s)) cells.push_back({c.row, c.col});
      doc["cells"] = cells;
      human << "cells: " << doc["cells"].dump() << "\n";
    }
    if (all || show == "hooks") {
      doc["hooks"] = hooks;
      human << "shifted hooks:\n" << number_table(hooks, true);
    }
    if (all || show == "contents") {
      doc["contents"] = contents;
      human << "contents:\n" << number_table(contents, true);
    }
    if (all || show == "double") {
      const Partition d = double_partition(s);
      doc["double"] = d.parts;
      human << "doubled shape: (" << format_parts(d.parts) << ")\n";
    }
    if (all || show == "frobenius") {
      const Frobenius f = frobenius(double_partition(s));
      doc["frobenius"] = {{"arm", f.arm}, {"leg", f.leg}};
      human << "frobenius of the double: (" << format_parts(f.arm) << " | "
            << format_parts(f.leg) << ")\n";
    }
    if (all) {
      doc["standard_count"] = g_hook(s).str();
      doc["dim_simple"] = dim_D(s).str();
      human << "standard tableaux: " << g_hook(s).str()
            << ", simple-module dimension: " << dim_D(s).str() << "\n";
    }
  } else {
    const Partition p = parse_partition(part_arg);
    doc["partition"] = p.parts;
    doc["size"] = p.size();
    doc["nstat"] = n_stat(p.parts);
    human << "shape (" << format_parts(p.parts) << "), size " << p.size()
          << ", n = " << n_stat(p.parts) << "\n";
    std::vector<std::vector<int>> hooks(p.length()), contents(p.length());
    for (Cell c : young_cells(p)) {
      hooks[c.row - 1].push_back(hook(p, c));
      contents[c.row - 1].push_back(content(c));
    }
    if (all || show == "hooks") {
      doc["hooks"] = hooks;
      human << "hooks:\n" << number_table(hooks, false);
    }
    if (all || show == "contents") {
      doc["contents"] = contents;
      human << "contents:\n" << number_table(contents, false);
    }
    if (all || show == "double") {
      const Partition c = conjugate(p);
      doc["conjugate"] = c.parts;
      human << "conjugate: (" << format_parts(c.parts) << ")\n";
    }
    if (all || show == "frobenius") {
      const Frobenius f = frobenius(p);
      doc["frobenius"] = {{"arm", f.arm}, {"leg", f.leg}};
      human << "frobenius: (" << format_parts(f.arm) << " | "
            << format_parts(f.leg) << ")\n";
    }
  }
  out.emit(doc, human.str());
  return 0;
}

int run_tableaux(const std::string& shape_arg, const std::string& kind,
                 int max_letter, long max_total, bool count_only,
                 bool validate, const std::string& input, const Output& out) {
  const StrictPartition s = parse_strict(shape_arg);
  json doc;
  doc["shape"] = s.parts;
  doc["kind"] = kind;
  std::ostringstream human;

  if (validate) {
    const std::string text = read_input(input);
    Validation v;
    if (kind == "rpt") {
      // integer grid, same layout as tableau text
      std::vector<int> parts;
      std::vector<int> entries;
      std::istringstream ss(text);
      std::string line;
      while (std::getline(ss, line)) {
        std::istringstream ls(line);
        int count = 0, value = 0;
        while (ls >> value) {
          entries.push_back(value);
          ++count;
        }
        if (count) parts.push_back(count);
      }
      ShiftedRPT t{StrictPartition(parts), std::move(entries)};
      if (!(t.shape == s))
        throw std::invalid_argument("input shape (" +
                                    format_parts(t.shape.parts) +
                                    ") does not match --shape");
      v = validate_rpt(t);
    } else {
      const ShiftedTableau t = parse_tableau_text(text);
      if (!(t.shape == s))
        throw std::invalid_argument("input shape (" +
                                    format_parts(t.shape.parts) +
                                    ") does not match --shape");
      v = kind == "colored" ? validate_colored(t) : validate_marked(t);
    }
    doc["valid"] = v.ok;
    if (!v.ok) doc["reason"] = v.reason;
    human << (v.ok ? "valid " + kind + " tableau"
                   : "invalid: " + v.reason)
          << "\n";
    out.emit(doc, human.str());
    return v.ok ? 0 : 1;
  }

  if (kind == "rpt") {
    if (max_total < 0)
      throw std::invalid_argument(
          "enumerating reverse plane tableaux needs --max-total");
    const auto list = enumerate_rpt(s, max_total);
    doc["max_total"] = max_total;
    doc["count"] = list.size();
    if (!count_only) {
      json arr = json::array();
      for (const ShiftedRPT& t : list) {
        std::vector<std::vector<int>> rows(s.length());
        int pos = 0;
        for (int i = 0; i < s.length(); ++i)
          for (int j = 0; j < s.parts[i]; ++j) rows[i].push_back(t.entries[pos++]);
        arr.push_back({{"rows", rows}, {"total", rpt_total(t)}});
        human << number_table(rows, true) << "\n";
      }
      doc["tableaux"] = arr;
    }
    human << "count: " << list.size() << "\n";
  } else {
    if (max_letter < 0)
      throw std::invalid_argument("enumerating " + kind +
                                  " tableaux needs --max-letter");
    const auto list = kind == "colored" ? enumerate_colored(s, max_letter)
                                        : enumerate_marked(s, max_letter);
    doc["max_letter"] = max_letter;
    doc["count"] = list.size();
    if (!count_only) {
      json arr = json::array();
      for (const ShiftedTableau& t : list) {
        arr.push_back(tableau_json(t));
        human << format_tableau_text(t) << "\n";
      }
      doc["tableaux"] = arr;
    }
    human << "count: " << list.size() << "\n";
  }
  out.emit(doc, human.str());
  return 0;
}

int run_bijection(bool do_forward, bool with_trace, const std::string& input,
                  const Output& out) {
  const ShiftedTableau t = parse_tableau_text(read_input(input));
  json doc;
  doc["direction"] = do_forward ? "forward" : "inverse";
  doc["input"] = tableau_json(t);
  std::ostringstream human;
  std::vector<ShiftedTableau> stages;
  ExchangeTrace trace;
  ShiftedTableau result;
  if (do_forward) {
    ForwardResult r = forward(t);
    result = r.image;
    stages = std::move(r.stages);
    trace = std::move(r.trace);
    doc["image"] = tableau_json(result);
    human << "colored image:\n" << format_tableau_text(result);
  } else {
    InverseResult r = inverse(t);
    result = r.preimage;
    stages = std::move(r.stages);
    trace = std::move(r.trace);
    doc["preimage"] = tableau_json(result);
    human << "marked preimage:\n" << format_tableau_text(result);
  }
  if (with_trace) {
    json st = json::array();
    for (const ShiftedTableau& stage : stages) st.push_back(tableau_json(stage));
    doc["stages"] = st;
    doc["trace"] = trace_json(trace);
    for (size_t i = 0; i < stages.size(); ++i)
      human << "stage " << i + 1 << ":\n" << format_tableau_text(stages[i]);
    human << "steps:\n";
    for (const ExchangeStep& step : trace)
      human << "  " << step.letter << "' (" << step.from.row << ","
            << step.from.col << ") -> (" << step.to.row << "," << step.to.col
            << ") rule " << (step.rule == ExchangeCase::I ? "I" : "II")
            << "\n";
  }
  out.emit(doc, human.str());
  return 0;
}

int run_qfun(const std::string& shape_arg, const std::string& qnu_arg,
             int vars, bool expand, const Output& out) {
  json doc;
  std::ostringstream human;
  MultiPoly poly;
  int degree = 0;
  if (!shape_arg.empty()) {
    const StrictPartition s = parse_strict(shape_arg);
    degree = s.size();
    if (vars < 0) vars = degree;
    poly = Q_tableau(s, vars);
    doc["shape"] = s.parts;
    human << "Q(" << format_parts(s.parts) << ") in " << vars
          << " variables:\n";
  } else {
    const Composition nu = parse_composition(qnu_arg);
    degree = nu.size();
    if (vars < 0) vars = degree;
    poly = q_nu(nu, vars);
    doc["qnu"] = nu.parts;
    human << "q(" << format_parts(nu.parts) << ") in " << vars
          << " variables:\n";
  }
  doc["nvars"] = vars;
  const MonomialExpansion mono = monomial_expand(poly);
  doc["monomials"] = monomials_json(mono);
  human << "  " << monomials_to_string(mono) << "\n";
  if (expand) {
    // The expansion works in enough variables to see every monomial.
    MultiPoly full = poly;
    if (vars != degree) {
      if (!shape_arg.empty())
        full = Q_tableau(parse_strict(shape_arg), degree);
      else
        full = q_nu(parse_composition(qnu_arg), degree);
    }
    const QExpansion e = expand_in_Q_basis(monomial_expand(full), degree,
                                           degree);
    doc["expansion"] = qexpansion_json(e);
    human << "Q-basis expansion:\n  " << qexpansion_to_string(e) << "\n";
  }
  out.emit(doc, human.str());
  return 0;
}

int run_specialize(const std::string& shape_arg, int trunc, bool bigraded,
                   const Output& out) {
  const StrictPartition s = parse_strict(shape_arg);
  json doc;
  doc["shape"] = s.parts;
  doc["trunc"] = trunc;
  std::ostringstream human;
  int rc = 0;
  if (bigraded) {
    const BiSeries b = Q_bigraded(s, trunc);
    doc["bigraded"] = biseries_json(b);
    doc["sdeg"] = b.sdeg;
    human << "Q(" << format_parts(s.parts)
          << ") at (1, t, t^2, ...; s, st, st^2, ...):\n"
          << to_string(b) << "\n";
  } else {
    const Series hook = Q_principal_hook(s, trunc);
    const Series poch = Q_principal_pochhammer(s, trunc);
    const Series tab = Q_principal_tableau(s, trunc);
    const bool agree = hook == poch && hook == tab;
    doc["series"] = series_json(hook);
    doc["agreement"] = agree;
    human << "Q(" << format_parts(s.parts) << ") at (1, t, t^2, ...):\n  "
          << to_string(hook) << "\n"
          << "hook-content, pochhammer, and tableau routes "
          << (agree ? "agree" : "DISAGREE") << "\n";
    if (!agree) rc = 1;
  }
  out.emit(doc, human.str());
  return rc;
}

int run_mult(const std::string& shape_arg, const std::string& module,
             const std::string& algebra, int trunc, const Output& out) {
  const StrictPartition s = parse_strict(shape_arg);
  const Rat factor = algebra == "spin" ? spin_factor(s) : Rat(1);
  json doc;
  doc["shape"] = s.parts;
  doc["module"] = module;
  doc["algebra"] = algebra;
  doc["factor"] = rat_json(factor);
  std::ostringstream human;
  human << "multiplicity of the simple module labelled ("
        << format_parts(s.parts) << ") [" << module << ", " << algebra;
  if (factor != Rat(1)) human << ", halved";
  human << "]:\n  ";
  if (module == "sym") {
    const Series m = scale(graded_mult_sym(s, trunc), factor);
    doc["series"] = series_json(m);
    human << to_string(m) << "\n";
  } else if (module == "coinv") {
    const Poly m = poly_scale(graded_mult_coinv(s), factor);
    doc["poly"] = poly_json(m);
    human << to_string(m, "t") << "\n";
  } else if (module == "wedge") {
    const Poly m = poly_scale(wedge_mult(s), factor);
    doc["poly"] = poly_json(m);
    human << to_string(m, "s") << "\n";
  } else {  // bigraded
    const BiSeries m = scale(bigraded_mult(s, trunc), factor);
    doc["bigraded"] = biseries_json(m);
    human << "\n" << to_string(m) << "\n";
  }
  out.emit(doc, human.str());
  return 0;
}

int run_classical(const std::string& shape_arg, int trunc, const Output& out) {
  const Partition p = parse_partition(shape_arg);
  json doc;
  doc["partition"] = p.parts;
  doc["trunc"] = trunc;
  std::ostringstream human;
  const Series hookform = kirillov_series(p, trunc);
  const Series oracle = schur_principal(p, trunc);
  const bool agree = hookform == oracle;
  doc["principal"] = series_json(hookform);
  doc["tableau_agreement"] = agree;
  human << "principal specialization for (" << format_parts(p.parts)
        << "):\n  " << to_string(hookform) << "\n"
        << "hook product and tableau sum "
        << (agree ? "agree" : "DISAGREE") << "\n";
  const BiSeries pak = kirillov_pak(p, trunc);
  doc["two_parameter"] = biseries_json(pak);
  human << "two-parameter refinement:\n" << to_string(pak) << "\n";
  bool ok = agree;
  if (p.length() <= 1) {
    const BiSeries sol = solomon_series(p.size(), trunc);
    const bool same = pak == sol;
    doc["solomon"] = biseries_json(sol);
    doc["solomon_agreement"] = same;
    human << "one-row descent product " << (same ? "matches" : "DIFFERS")
          << "\n";
    ok = ok && same;
  }
  out.emit(doc, human.str());
  return ok ? 0 : 1;
}

int run_verify(const std::string& level, const Output& out) {
  const bool quick = level == "quick";
  const auto results = run_acceptance(quick);
  json doc = json::array();
  std::ostringstream human;
  bool all = true;
  for (const CheckResult& r : results) {
    doc.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    human << (r.pass ? "PASS" : "FAIL") << "  " << r.name << ": " << r.detail
          << "\n";
    all = all && r.pass;
  }
  human << (all ? "all checks passed" : "CHECKS FAILED") << " (" << level
        << " level)\n";
  out.emit(doc, human.str());
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  int rc = 0;
  try {
    const int default_trunc = env_trunc();
    CLI::App app{"shifted-tableau combinatorics and Schur Q-function "
                 "formulas (exact arithmetic)"};
    app.require_subcommand(1);
    Output out;
    app.add_flag("--json", out.json_mode, "emit JSON instead of text");
    app.add_option("--out", out.out_path, "also write the JSON document here");

    // shape -----------------------------------------------------------------
    auto* shape = app.add_subcommand("shape", "diagram tables for a shape");
    std::string shape_strict, shape_part, shape_show = "all";
    auto* so1 = shape->add_option("--strict", shape_strict,
                                  "strict partition, e.g. 4,2,1");
    auto* so2 = shape->add_option("--partition", shape_part,
                                  "ordinary partition");
    so1->excludes(so2);
    shape->add_option("--show", shape_show, "one of: all, hooks, contents, "
                                            "frobenius, double, cells")
        ->check(CLI::IsMember({"all", "hooks", "contents", "frobenius",
                               "double", "cells"}));
    shape->callback([&] {
      if (shape_strict.empty() && shape_part.empty())
        throw CLI::ValidationError("shape",
                                   "need --strict or --partition");
      rc = run_shape(shape_strict, shape_part, shape_show, out);
    });

    // tableaux --------------------------------------------------------------
    auto* tab = app.add_subcommand("tableaux",
                                   "enumerate or validate tableaux");
    std::string tab_shape, tab_kind = "marked", tab_input = "-";
    int tab_max_letter = -1;
    long tab_max_total = -1;
    bool tab_count = false, tab_validate = false;
    tab->add_option("--shape", tab_shape, "strict partition")->required();
    tab->add_option("--kind", tab_kind, "marked, colored, or rpt")
        ->check(CLI::IsMember({"marked", "colored", "rpt"}));
    tab->add_option("--max-letter", tab_max_letter,
                    "letter bound for marked/colored enumeration");
    tab->add_option("--max-total", tab_max_total,
                    "entry-sum bound for rpt enumeration");
    tab->add_flag("--count-only", tab_count, "print only the count");
    tab->add_flag("--validate", tab_validate,
                  "validate a tableau read from --input instead");
    tab->add_option("--input", tab_input, "tableau file, - for stdin");
    tab->callback([&] {
      rc = run_tableaux(tab_shape, tab_kind, tab_max_letter, tab_max_total,
                        tab_count, tab_validate, tab_input, out);
    });

    // bijection -------------------------------------------------------------
    auto* bij = app.add_subcommand("bijection",
                                   "exchange marked and colored tableaux");
    bool bij_fwd = false, bij_inv = false, bij_trace = false;
    std::string bij_input = "-";
    auto* bf = bij->add_flag("--forward", bij_fwd,
                             "marked tableau to colored");
    auto* bi = bij->add_flag("--inverse", bij_inv,
                             "colored tableau to marked");
    bf->excludes(bi);
    bij->add_flag("--trace", bij_trace, "print stages and swap steps");
    bij->add_option("--input", bij_input, "tableau file, - for stdin");
    bij->callback([&] {
      if (!bij_fwd && !bij_inv)
        throw CLI::ValidationError("bijection",
                                   "need --forward or --inverse");
      rc = run_bijection(bij_fwd, bij_trace, bij_input, out);
    });

    // qfun ------------------------------------------------------------------
    auto* qf = app.add_subcommand("qfun",
                                  "Q-polynomials and induced products");
    std::string qf_shape, qf_qnu;
    int qf_vars = -1;
    bool qf_expand = false;
    auto* q1 = qf->add_option("--shape", qf_shape,
                              "strict partition: the Q-function itself");
    auto* q2 = qf->add_option("--qnu", qf_qnu,
                              "composition: the product of one-row "
                              "functions");
    q1->excludes(q2);
    qf->add_option("--vars", qf_vars, "number of variables (default: the "
                                      "degree)");
    qf->add_flag("--expand", qf_expand, "also expand in the Q basis");
    qf->callback([&] {
      if (qf_shape.empty() && qf_qnu.empty())
        throw CLI::ValidationError("qfun", "need --shape or --qnu");
      rc = run_qfun(qf_shape, qf_qnu, qf_vars, qf_expand, out);
    });

    // specialize ------------------------------------------------------------
    auto* sp = app.add_subcommand("specialize",
                                  "principal and two-alphabet "
                                  "specializations");
    std::string sp_shape;
    int sp_trunc = default_trunc;
    bool sp_bigraded = false;
    sp->add_option("--shape", sp_shape, "strict partition")->required();
    sp->add_option("--trunc", sp_trunc, "series truncation");
    sp->add_flag("--bigraded", sp_bigraded, "two-alphabet version");
    sp->callback(
        [&] { rc = run_specialize(sp_shape, sp_trunc, sp_bigraded, out); });

    // mult ------------------------------------------------------------------
    auto* mu = app.add_subcommand("mult", "graded multiplicity series");
    std::string mu_shape, mu_module = "sym", mu_algebra = "hc";
    int mu_trunc = default_trunc;
    mu->add_option("--shape", mu_shape, "strict partition")->required();
    mu->add_option("--module", mu_module, "sym, coinv, wedge, or bigraded")
        ->check(CLI::IsMember({"sym", "coinv", "wedge", "bigraded"}));
    mu->add_option("--algebra", mu_algebra,
                   "hc (full twisted algebra) or spin (double cover)")
        ->check(CLI::IsMember({"hc", "spin"}));
    mu->add_option("--trunc", mu_trunc, "series truncation");
    mu->callback(
        [&] { rc = run_mult(mu_shape, mu_module, mu_algebra, mu_trunc, out); });

    // classical -------------------------------------------------------------
    auto* cl = app.add_subcommand("classical",
                                  "unshifted analogues side by side");
    std::string cl_shape;
    int cl_trunc = default_trunc;
    cl->add_option("--shape", cl_shape, "ordinary partition")->required();
    cl->add_option("--trunc", cl_trunc, "series truncation");
    cl->callback([&] { rc = run_classical(cl_shape, cl_trunc, out); });

    // verify ----------------------------------------------------------------
    auto* ve = app.add_subcommand("verify", "run the cross-validation suite");
    std::string ve_level = "full";
    ve->add_option("--level", ve_level, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));
    ve->callback([&] { rc = run_verify(ve_level, out); });

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e);
      return code == 0 ? 0 : 2;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
