#pragma once

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "pgq/algebra.hpp"
#include "pgq/biderivations.hpp"
#include "pgq/linalg.hpp"

namespace pgq {

using ordered_json = nlohmann::ordered_json;

// Malformed or out-of-contract input documents.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

ordered_json params_to_json(const Params& p);
ordered_json vec_to_json(const Vec& v);
ordered_json matrix_to_json(const Matrix& m);
ordered_json bilinear_tensor_to_json(const BilinearTensor& d);

// {"dim":4, "params":["l1","l2","l3"], "table": 4x4 array of 4-entry
// rational-string vectors}; "params" may be omitted for tables that do not
// come from a parameter triple.
ordered_json tensor_to_json(const StructureTensor& sc);

// Accepts the same document; requires dim 4 and a two-sided identity e0.
StructureTensor tensor_from_json(const nlohmann::json& doc);

StructureTensor load_tensor_file(const std::string& path);

}  // namespace pgq
