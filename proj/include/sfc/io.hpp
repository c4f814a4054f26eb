#pragma once

// JSON container format "sfc-1".
//
//   {
//     "format_version": "sfc-1",
//     "kind": "fusion" | "superfusion" | "group+cocycles",
//     "labels": [...], "unit": "<label>", "mult": [[i, j, m, n], ...],
//     "object_types": {"<label>": "bosonic" | "majorana"},   superfusion
//     "parities": [[i, j, m, alpha, s], ...],               superfusion
//     "sixj": [[i, j, m, k, n, t, alpha, beta, eta, phi, scalar], ...],
//     "group": {"order": n, "product": [[...], ...], "identity": e},
//     "omega": [[bit, ...], ...], "supercocycle": [scalar x n^3],
//     "cocycle": [scalar x n^3],
//     "metadata": {"key": "value"}
//   }
//
// Indices are 0-based label positions, multiplicity labels 1-based. A
// scalar is an integer or {"order": n, "coeffs": [[num, den], ...]} in the
// power basis of Q(zeta_n); integers may be written as decimal strings when
// they do not fit in 64 bits.

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "sfc/category.hpp"

namespace sfc {

/// Malformed or schema-invalid input; `location()` is a JSON pointer to the
/// offending value (empty for whole-document errors).
class SchemaError : public std::runtime_error {
public:
  SchemaError(std::string location, const std::string& message)
      : std::runtime_error(location.empty() ? message : location + ": " + message), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

private:
  std::string location_;
};

inline constexpr const char* kFormatVersion = "sfc-1";

nlohmann::json scalar_to_json(const Cyclotomic& x);
Cyclotomic scalar_from_json(const nlohmann::json& j, const std::string& location = "");

CategoryFile parse_category(const std::string& text);
CategoryFile load_category(const std::string& path);

/// Canonical text: keys sorted, one record per line, trailing newline.
/// Identical values give identical bytes.
std::string serialize_category(const CategoryFile& file);
void save_category(const CategoryFile& file, const std::string& path);

}  // namespace sfc
