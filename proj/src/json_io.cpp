#include "pgq/json_io.hpp"

#include <fstream>

namespace pgq {

ordered_json params_to_json(const Params& p) {
  return ordered_json::array({p.l1.str(), p.l2.str(), p.l3.str()});
}

ordered_json vec_to_json(const Vec& v) {
  ordered_json out = ordered_json::array();
  for (const Rational& x : v) out.push_back(x.str());
  return out;
}

ordered_json matrix_to_json(const Matrix& m) {
  ordered_json out = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vec_to_json(m.row(r)));
  return out;
}

ordered_json bilinear_tensor_to_json(const BilinearTensor& d) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    ordered_json slice = ordered_json::array();
    for (std::size_t j = 0; j < 4; ++j) slice.push_back(vec_to_json(d.value(i, j).to_vec()));
    out.push_back(std::move(slice));
  }
  return out;
}

ordered_json tensor_to_json(const StructureTensor& sc) {
  ordered_json doc;
  doc["dim"] = 4;
  if (sc.params) doc["params"] = params_to_json(*sc.params);
  ordered_json table = ordered_json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < 4; ++j) row.push_back(vec_to_json(sc.product(i, j).to_vec()));
    table.push_back(std::move(row));
  }
  doc["table"] = std::move(table);
  return doc;
}

namespace {

Rational parse_rational_field(const nlohmann::json& v, const char* where) {
  if (!v.is_string()) throw InputError(std::string(where) + ": expected a rational string");
  auto r = Rational::parse(v.get<std::string>());
  if (!r) throw InputError(std::string(where) + ": malformed rational '" + v.get<std::string>() + "'");
  return *r;
}

}  // namespace

StructureTensor tensor_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("algebra document: expected a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<int>() != 4)
    throw InputError("algebra document: \"dim\" must be 4");
  if (!doc.contains("table") || !doc["table"].is_array() || doc["table"].size() != 4)
    throw InputError("algebra document: \"table\" must be a 4x4 array of coordinate vectors");

  StructureTensor sc;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& row = doc["table"][i];
    if (!row.is_array() || row.size() != 4) throw InputError("algebra document: \"table\" must be a 4x4 array of coordinate vectors");
    for (std::size_t j = 0; j < 4; ++j) {
      const auto& cell = row[j];
      if (!cell.is_array() || cell.size() != 4) throw InputError("algebra document: each table cell needs 4 coordinates");
      for (std::size_t k = 0; k < 4; ++k) sc.c[i][j][k] = parse_rational_field(cell[k], "table entry");
    }
  }

  if (doc.contains("params")) {
    const auto& ps = doc["params"];
    if (!ps.is_array() || ps.size() != 3) throw InputError("algebra document: \"params\" must hold 3 rational strings");
    sc.params = Params{parse_rational_field(ps[0], "params[0]"), parse_rational_field(ps[1], "params[1]"),
                       parse_rational_field(ps[2], "params[2]")};
  }

  if (!e0_is_identity(sc)) throw InputError("algebra document: e0 must be a two-sided identity");
  return sc;
}

StructureTensor load_tensor_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw InputError("cannot open algebra file: " + path);
  nlohmann::json doc;
  try {
    file >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("cannot parse algebra file " + path + ": " + e.what());
  }
  return tensor_from_json(doc);
}

}  // namespace pgq
