#include "isotori/specfile.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace isotori {

namespace {

using nlohmann::ordered_json;

Rat field_rat(const ordered_json& j, const std::string& where) {
  if (!j.is_string())
    throw SpecFileError(where + ": rational values must be strings like \"3/2\"");
  const auto parsed = parse_rat(j.get<std::string>());
  if (!parsed)
    throw SpecFileError(where + ": cannot parse rational literal '" +
                        j.get<std::string>() + "'");
  return *parsed;
}

std::size_t field_size(const ordered_json& j, const char* name) {
  if (!j.contains(name))
    throw SpecFileError(std::string(name) + ": missing field");
  if (!j[name].is_number_unsigned())
    throw SpecFileError(std::string(name) + ": must be a non-negative integer");
  return j[name].get<std::size_t>();
}

RatMat field_matrix(const ordered_json& j, const char* name, std::size_t rows,
                    std::size_t cols) {
  if (!j.contains(name))
    throw SpecFileError(std::string(name) + ": missing field");
  const auto& arr = j[name];
  if (!arr.is_array() || arr.size() != rows)
    throw SpecFileError(std::string(name) + ": must be an array of " +
                        std::to_string(rows) + " rows");
  RatMat out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = arr[r];
    const std::string where = std::string(name) + "[" + std::to_string(r + 1) + "]";
    if (!row.is_array() || row.size() != cols)
      throw SpecFileError(where + ": must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c)
      out(r, c) = field_rat(row[c], where + "[" + std::to_string(c + 1) + "]");
  }
  return out;
}

}  // namespace

TorusSpec parse_spec(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecFileError(std::string("not valid JSON: ") + e.what());
  }
  TorusSpec spec;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw SpecFileError("name: must be a string");
    spec.name = j["name"].get<std::string>();
  }
  spec.n = field_size(j, "n");
  spec.l = field_size(j, "l");
  spec.m = field_size(j, "m");
  if (!j.contains("r_squared"))
    throw SpecFileError("r_squared: missing field");
  const auto& rs = j["r_squared"];
  if (!rs.is_array() || rs.size() != spec.n)
    throw SpecFileError("r_squared: must be an array of n entries");
  spec.r_sq.resize(spec.n);
  for (std::size_t d = 0; d < spec.n; ++d)
    spec.r_sq[d] = field_rat(rs[d], "r_squared[" + std::to_string(d + 1) + "]");
  spec.E = field_matrix(j, "E", spec.n, spec.l);
  spec.F = field_matrix(j, "F", spec.n, spec.m);
  return spec;
}

TorusSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecFileError("cannot open file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_spec(buffer.str());
}

std::string serialize_spec(const TorusSpec& spec) {
  ordered_json j;
  j["name"] = spec.name;
  j["n"] = spec.n;
  j["l"] = spec.l;
  j["m"] = spec.m;
  auto rationals = [](const RatMat& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      ordered_json row = ordered_json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
      rows.push_back(row);
    }
    return rows;
  };
  ordered_json rs = ordered_json::array();
  for (const Rat& r : spec.r_sq) rs.push_back(to_string(r));
  j["r_squared"] = rs;
  j["E"] = rationals(spec.E);
  j["F"] = rationals(spec.F);
  return j.dump(2) + "\n";
}

}  // namespace isotori
