#ifndef YB_JSON_IO_HPP
#define YB_JSON_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "yb/operators.hpp"
#include "yb/verify.hpp"

namespace yb {

using nlohmann::json;

// field: {"kind":"rationals"} | {"kind":"cyclotomic","m":4} | {"kind":"prime","p":2}
json field_to_json(const ScalarField& f);
ScalarField field_from_json(const json& j);

// matrix exchange: {"field": {...}, "n": side, "rows": [[scalar strings]]}
json matrix_to_json(const LinearOperator& m);
LinearOperator matrix_from_json(const json& j);

// structure files:
// {"kind": "associative"|"super"|"gtheta", "field": {...}, "dim": N,
//  "basis_names": [...], "grades": [...], "group": {"orders": [...]},
//  "theta_exponents": [[...]], "mult"|"bracket": [{"i":,"j":,"coords":[...]}],
//  "unit": [...]}   (omitted (i,j) pairs mean zero)
json structure_to_json(const AnyStructure& s);
AnyStructure structure_from_json(const json& j);
AnyStructure load_structure(const std::filesystem::path& path);

/// Catalog name, or a path to a structure file (relative to base_dir).
AnyStructure resolve_structure_ref(const std::string& ref, const std::filesystem::path& base_dir);

// recipe files:
// {"family": "...", "structure": "<catalog name or file path>",
//  "params": {"alpha": "...", ..., "z": [...]|"auto-center", "colors": [...],
//             "alpha_table": {...}, "beta_table": {...}, ...}}
Recipe recipe_from_json(const json& j, const std::filesystem::path& base_dir);
Recipe load_recipe(const std::filesystem::path& path);

// per-check machine-readable record:
// {"check": "...", "params": {...}, "outcome": "holds"|"fails", "witness": {...}|null}
json report_to_json(const CheckReport& r);

// search census
json census_to_json(const SearchResult& r);

json load_json(const std::filesystem::path& path);
void save_json(const json& j, const std::filesystem::path& path);

} // namespace yb

#endif
