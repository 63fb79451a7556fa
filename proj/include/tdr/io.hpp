#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "tdr/decompose.hpp"
#include "tdr/flows.hpp"
#include "tdr/representation.hpp"
#include "tdr/wildness.hpp"

namespace tdr::io {

using nlohmann::json;

// Every parser throws ParseError on malformed input; validation errors from
// the owning modules pass through unchanged.

json to_json(const Rational& q);
Rational rational_from_json(const json& j);
json to_json(const RatMatrix& m);  // array of rows
RatMatrix matrix_from_json(const json& j);
json to_json(const RatPoly& p);    // coefficients, lowest first
RatPoly poly_from_json(const json& j);

json to_json(const TensorDiagram& d);
TensorDiagram diagram_from_json(const json& j);

json to_json(const Representation& r);
/// A string "diagram" field is a path resolved against base_dir.
Representation representation_from_json(const json& j, const std::filesystem::path& base_dir = {});

json to_json(const IndecompDescriptor& d);
IndecompDescriptor descriptor_from_json(const json& j);
json to_json(const Decomposition& d);

struct FlowInput {
  FlowAssignment wires;
  std::vector<std::string> u;
};
json to_json(const FlowAssignment& f);
FlowInput flow_from_json(const json& j);

struct PairsInput {
  MatrixPair first, second;
};
PairsInput pairs_from_json(const json& j);

json parse(const std::string& text);
std::string read_file(const std::filesystem::path& p);
/// Two-space indented dump with sorted keys and a trailing newline.
std::string dump(const json& j);

}  // namespace tdr::io
