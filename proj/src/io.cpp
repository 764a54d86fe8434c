#include "shiftedq/io.hpp"

#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace shiftedq {

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> out;
  if (text.empty() || text == "0") return out;
  if (text.back() == ',')
    throw std::invalid_argument("partition: trailing comma in '" + text + "'");
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty())
      throw std::invalid_argument("partition: empty component in '" + text +
                                  "'");
    size_t used = 0;
    int v;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("partition: '" + tok +
                                  "' is not an integer");
    }
    if (used != tok.size())
      throw std::invalid_argument("partition: trailing characters in '" + tok +
                                  "'");
    out.push_back(v);
  }
  return out;
}

Partition parse_partition(const std::string& text) {
  return Partition(parse_parts(text));
}

StrictPartition parse_strict(const std::string& text) {
  return StrictPartition(parse_parts(text));
}

Composition parse_composition(const std::string& text) {
  return Composition(parse_parts(text));
}

namespace {

MarkedLetter parse_letter(const std::string& tok) {
  std::string digits = tok;
  bool marked = false;
  if (!digits.empty() && digits.back() == '\'') {
    marked = true;
    digits.pop_back();
  }
  if (digits.empty())
    throw std::invalid_argument("tableau: bad letter token '" + tok + "'");
  for (char ch : digits)
    if (ch < '0' || ch > '9')
      throw std::invalid_argument("tableau: bad letter token '" + tok + "'");
  int v = std::stoi(digits);
  if (v < 1)
    throw std::invalid_argument("tableau: letter value must be positive in '" +
                                tok + "'");
  return MarkedLetter{v, marked};
}

}  // namespace

ShiftedTableau parse_tableau_text(const std::string& text) {
  std::vector<int> parts;
  std::vector<MarkedLetter> entries;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    std::stringstream ls(line);
    std::string tok;
    int count = 0;
    while (ls >> tok) {
      entries.push_back(parse_letter(tok));
      ++count;
    }
    if (count == 0) continue;  // blank line
    parts.push_back(count);
  }
  return ShiftedTableau{StrictPartition(parts), std::move(entries)};
}

std::string format_tableau_text(const ShiftedTableau& t) {
  size_t width = 1;
  for (const MarkedLetter& x : t.entries)
    width = std::max(width, to_string(x).size());
  std::string out;
  int pos = 0;
  for (int i = 1; i <= t.shape.length(); ++i) {
    std::string line(static_cast<size_t>(i - 1) * (width + 1), ' ');
    for (int j = 0; j < t.shape.parts[i - 1]; ++j) {
      std::string tok = to_string(t.entries[pos++]);
      tok.resize(width, ' ');
      if (j) line += ' ';
      line += tok;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

nlohmann::json rat_json(const Rat& r) {
  const Int num = numerator(r), den = denominator(r);
  auto one = [](const Int& v) -> nlohmann::json {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
      return static_cast<std::int64_t>(v);
    return v.str();
  };
  return nlohmann::json::array({one(num), one(den)});
}

nlohmann::json series_json(const Series& a) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Rat& r : a.c) coeffs.push_back(rat_json(r));
  return {{"trunc", a.trunc}, {"coeffs", coeffs}};
}

nlohmann::json poly_json(const Poly& a) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Rat& r : a) coeffs.push_back(rat_json(r));
  return {{"trunc", static_cast<int>(a.size())}, {"coeffs", coeffs}};
}

nlohmann::json biseries_json(const BiSeries& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (const Series& row : a.rows) rows.push_back(series_json(row));
  return rows;
}

nlohmann::json tableau_json(const ShiftedTableau& t) {
  nlohmann::json rows = nlohmann::json::array();
  int pos = 0;
  for (int i = 1; i <= t.shape.length(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < t.shape.parts[i - 1]; ++j)
      row.push_back(to_string(t.entries[pos++]));
    rows.push_back(row);
  }
  return {{"shape", t.shape.parts}, {"rows", rows}};
}

ShiftedTableau tableau_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("shape") || !j.contains("rows"))
    throw std::invalid_argument("tableau json: need {\"shape\",\"rows\"}");
  StrictPartition shape(j.at("shape").get<std::vector<int>>());
  std::vector<MarkedLetter> entries;
  const auto& rows = j.at("rows");
  if (!rows.is_array() ||
      static_cast<int>(rows.size()) != shape.length())
    throw std::invalid_argument("tableau json: row count does not match "
                                "shape");
  for (int i = 0; i < shape.length(); ++i) {
    const auto& row = rows[i];
    if (!row.is_array() ||
        static_cast<int>(row.size()) != shape.parts[i])
      throw std::invalid_argument("tableau json: row " + std::to_string(i + 1) +
                                  " length does not match shape");
    for (const auto& tok : row)
      entries.push_back(parse_letter(tok.get<std::string>()));
  }
  return ShiftedTableau{std::move(shape), std::move(entries)};
}

nlohmann::json qexpansion_json(const QExpansion& e) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [shape, coeff] : e.terms)
    terms.push_back({{"partition", shape}, {"coeff", rat_json(coeff)}});
  return {{"degree", e.degree}, {"terms", terms}};
}

}  // namespace shiftedq
