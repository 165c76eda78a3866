#include "ppav/json_io.hpp"

#include <fstream>
#include <functional>

namespace ppav {

namespace {

json matrix_to_json_impl(std::size_t rows, std::size_t cols,
                         const std::function<json(std::size_t, std::size_t)>& entry) {
  json data = json::array();
  for (std::size_t i = 0; i < rows; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < cols; ++j) row.push_back(entry(i, j));
    data.push_back(std::move(row));
  }
  return json{{"rows", rows}, {"cols", cols}, {"data", std::move(data)}};
}

void check_shape(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
    throw ParseError("matrix JSON must have rows, cols, data");
  if (!j["data"].is_array() || j["data"].size() != j["rows"].get<std::size_t>())
    throw ParseError("matrix JSON data has wrong row count");
  for (const auto& row : j["data"])
    if (!row.is_array() || row.size() != j["cols"].get<std::size_t>())
      throw ParseError("matrix JSON data has wrong column count");
}

Integer integer_entry(const json& e) {
  if (e.is_string()) return int_from_string(e.get<std::string>());
  if (e.is_number_integer()) return Integer(std::to_string(e.get<long long>()));
  throw ParseError("integer entry must be a decimal string or integer");
}

Rational rational_entry(const json& e) {
  if (e.is_string()) return rational_from_string(e.get<std::string>());
  if (e.is_number_integer()) return Rational(Integer(std::to_string(e.get<long long>())));
  throw ParseError("rational entry must be a \"p/q\" string or integer");
}

GaussianRational gaussian_entry(const json& e) {
  if (e.is_object()) {
    if (!e.contains("re") || !e.contains("im"))
      throw ParseError("Gaussian entry must have re and im");
    return {rational_entry(e["re"]), rational_entry(e["im"])};
  }
  // bare rationals are accepted as real entries
  return GaussianRational(rational_entry(e));
}

}  // namespace

json to_json(const IntegerMatrix& m) {
  return matrix_to_json_impl(m.rows(), m.cols(),
                             [&](std::size_t i, std::size_t j) { return json(to_string(m(i, j))); });
}

json to_json(const RationalMatrix& m) {
  return matrix_to_json_impl(m.rows(), m.cols(),
                             [&](std::size_t i, std::size_t j) { return json(to_string(m(i, j))); });
}

json to_json(const GaussianMatrix& m) {
  return matrix_to_json_impl(m.rows(), m.cols(), [&](std::size_t i, std::size_t j) {
    return json{{"re", to_string(m(i, j).re)}, {"im", to_string(m(i, j).im)}};
  });
}

IntegerMatrix integer_matrix_from_json(const json& j) {
  check_shape(j);
  IntegerMatrix m(j["rows"].get<std::size_t>(), j["cols"].get<std::size_t>());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = integer_entry(j["data"][i][c]);
  return m;
}

RationalMatrix rational_matrix_from_json(const json& j) {
  check_shape(j);
  RationalMatrix m(j["rows"].get<std::size_t>(), j["cols"].get<std::size_t>());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = rational_entry(j["data"][i][c]);
  return m;
}

GaussianMatrix gaussian_matrix_from_json(const json& j) {
  check_shape(j);
  GaussianMatrix m(j["rows"].get<std::size_t>(), j["cols"].get<std::size_t>());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = gaussian_entry(j["data"][i][c]);
  return m;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j, bool pretty) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  out << (pretty ? j.dump(2) : j.dump()) << "\n";
}

}  // namespace ppav
