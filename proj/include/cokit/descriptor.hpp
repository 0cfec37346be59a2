#pragma once

// JSON descriptors for fields, elements, modules, and isometries, plus
// resolution of CLI module arguments: an existing descriptor file, a
// catalog name, or "<name>.json" under the directory named by the
// COINCIDENCE_KIT_CATALOG environment variable.
//
// Field descriptor:
//   { "minpoly": ["0","-2","0","0","1"],
//     "root": {"kind":"real","lo":"1","hi":"2"},
//     "radicals": [["0","1"]] }                         (optional, real only)
// or, for an imaginary quadratic root,
//   { "minpoly": ["1","0","1"],
//     "root": {"kind":"imaginary","re_lo":"-1/4","re_hi":"1/4",
//              "im_lo":"1/2","im_hi":"2"},
//     "conj": ["0","-1"] }                              (optional)
// All numbers are decimal strings of exact rationals "p/q".
//
// Element descriptor: array of rational strings, coefficients on the power
// basis of the field (short vectors are zero-padded).
//
// Module descriptor:
//   { "field": <field descriptor for L>,
//     "subfield_generator": <element>,
//     "ring_zbasis": [<element>, ...],
//     "basis_columns": [[<element>, ...], ...] }
//
// Isometry descriptor:
//   { "field": <field descriptor>,
//     "matrix": [[<element>, ...], ...],                (row-major)
//     "check_orthogonal": true }
// Orthogonality is always validated; the flag records intent.

#include <string>

#include "json.hpp"

#include "cokit/catalog.hpp"

namespace cokit {

using Json = nlohmann::json;

Json field_to_json(const FieldPtr& f);
FieldPtr field_from_json(const Json& j);

Json element_to_json(const FieldElement& e);
FieldElement element_from_json(const Json& j, const FieldPtr& f);

Json module_to_json(const FreeModule& gamma);
FreeModule module_from_json(const Json& j);

Json isometry_to_json(const Isometry& r);
Isometry isometry_from_json(const Json& j);

// nlohmann parse failures rebranded as Err::ParseError; `what` names the
// input in the diagnostic.
Json json_from_text(const std::string& text, const std::string& what);
Json json_from_file(const std::string& path);

// Resolve a CLI module argument (file path, catalog name, or catalog-dir
// entry).  Throws BadTarget when nothing matches; malformed descriptors and
// invalid catalog parameters propagate their own errors.
CatalogLookup resolve_target(const std::string& arg);
FreeModule load_module(const std::string& arg);
Isometry load_isometry(const std::string& path);

}  // namespace cokit
