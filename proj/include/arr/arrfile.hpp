#pragma once

#include <iosfwd>

#include "arr/theorems.hpp"

namespace arr {

// Arrangement file format (UTF-8, '#' comments, blank lines ignored):
//   field Q | field GF <p> <k> | field CYCLO <m>
//   line <a> <b> <c>        one per projective line, element encodings as
//                           produced by FieldElement::encode()
// Parse-serialize round-trips are byte identical after normalization.
Arrangement parse_arrangement(const std::string& text);
std::string serialize_arrangement(const Arrangement& arr);

Arrangement load_arrangement(const std::string& path);
void save_arrangement(const Arrangement& arr, const std::string& path);

// Matrix file: header "matrix <r> <d>", then r rows of d 0/1 entries.
IncidenceMatrix parse_matrix(const std::string& text);
IncidenceMatrix load_matrix(const std::string& path);

// Inline t-vector syntax "d=9;t3=12".
TVector parse_tvec(const std::string& text);

}  // namespace arr
