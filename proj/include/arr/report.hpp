#pragma once

#include <json.hpp>

#include "arr/experiments.hpp"
#include "arr/theorems.hpp"

namespace arr {

using Json = nlohmann::ordered_json;

// Every number in a report carries the exact rational next to a fixed
// 12-significant-digit decimal rendering.
Json rat_node(const Rat& v);
Json int_node(const Int& v);

// tvector + chern + checks (+ faces when real). The checks section names
// map one to one onto operations in the invariants module.
struct Analysis {
    Json doc;
    bool ok = true;  // no violated check
};

Analysis analyze_tvector(const TVector& tv, FieldClass field_class,
                         bool field_class_known, bool from_coordinates);
Analysis analyze_arrangement(const Arrangement& arr);

// analyze + the theorems module: de Bruijn-Erdos report, zero-diagonal
// permutation on square incidence matrices, field reconstruction on
// projective planes.
Analysis verify_arrangement(const Arrangement& arr);

// Deterministic key/value-tree rendering of a report document.
std::string render_text(const Json& doc);

}  // namespace arr
