#pragma once

#include <string>

#include <json.hpp>

#include "ppav/matrix.hpp"

namespace ppav {

// Shared wire format for all matrix kinds:
//   {"rows": n, "cols": m, "data": [[entry, ...], ...]}
// Integer entries are decimal strings, rationals "p/q", Gaussian rationals
// {"re":"p/q","im":"p/q"}. Decimal strings keep arbitrary-precision entries
// intact across tools that would overflow 64-bit JSON numbers.
using json = nlohmann::ordered_json;

json to_json(const IntegerMatrix& m);
json to_json(const RationalMatrix& m);
json to_json(const GaussianMatrix& m);

IntegerMatrix integer_matrix_from_json(const json& j);
RationalMatrix rational_matrix_from_json(const json& j);
GaussianMatrix gaussian_matrix_from_json(const json& j);

json parse_json(const std::string& text);
json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j, bool pretty);

}  // namespace ppav
