#pragma once

#include "shiftedq/partitions.hpp"
#include "shiftedq/qfunctions.hpp"
#include "shiftedq/series.hpp"
#include "shiftedq/tableaux.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace shiftedq {

// Text formats ---------------------------------------------------------------

// "4,2,1" -> {4,2,1}; "" and "0" denote the empty sequence.  Throws
// std::invalid_argument with a description on malformed input.
std::vector<int> parse_parts(const std::string& text);
Partition parse_partition(const std::string& text);
StrictPartition parse_strict(const std::string& text);
Composition parse_composition(const std::string& text);

// Tableau text: one row per line, cells space-separated, marked letters
// carry a trailing apostrophe, row i indented by its shift.  The parser
// ignores the exact indentation.
ShiftedTableau parse_tableau_text(const std::string& text);
std::string format_tableau_text(const ShiftedTableau& t);

// JSON forms -----------------------------------------------------------------

// Rational -> [num, den] (JSON integers when they fit 64 bits, otherwise
// decimal strings).
nlohmann::json rat_json(const Rat& r);
nlohmann::json series_json(const Series& a);            // {"trunc","coeffs"}
nlohmann::json poly_json(const Poly& a);                // exact: trunc = deg+1
nlohmann::json biseries_json(const BiSeries& a);        // array of rows
nlohmann::json tableau_json(const ShiftedTableau& t);   // {"shape","rows"}
ShiftedTableau tableau_from_json(const nlohmann::json& j);
nlohmann::json qexpansion_json(const QExpansion& e);    // {"degree","terms"}

}  // namespace shiftedq
