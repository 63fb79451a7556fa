#include "tdr/shapes.hpp"

#include <string>

namespace tdr::shapes {

namespace {

std::string v(std::size_t i) { return "v" + std::to_string(i); }
std::string e(std::size_t i) { return "e" + std::to_string(i); }

std::vector<std::string> vertex_ids(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(v(i));
  return out;
}

}  // namespace

TensorDiagram loop(std::size_t n) {
  RawDiagram raw{vertex_ids(n), {}};
  for (std::size_t i = 1; i <= n; ++i) raw.wires.push_back({e(i), v(i == 1 ? n : i - 1), v(i)});
  return validate_diagram(std::move(raw));
}

TensorDiagram closed_path(std::size_t n) {
  RawDiagram raw{vertex_ids(n), {}};
  for (std::size_t i = 1; i < n; ++i) raw.wires.push_back({e(i), v(i), v(i + 1)});
  return validate_diagram(std::move(raw));
}

TensorDiagram open_path(std::size_t n) {
  RawDiagram raw{vertex_ids(n), {}};
  raw.wires.push_back({e(1), std::nullopt, v(1)});
  for (std::size_t i = 2; i <= n; ++i) raw.wires.push_back({e(i), v(i - 1), v(i)});
  raw.wires.push_back({e(n + 1), v(n), std::nullopt});
  return validate_diagram(std::move(raw));
}

TensorDiagram half_open_path(std::size_t n) {
  RawDiagram raw{vertex_ids(n), {}};
  raw.wires.push_back({e(1), std::nullopt, v(1)});
  for (std::size_t i = 2; i <= n; ++i) raw.wires.push_back({e(i), v(i - 1), v(i)});
  return validate_diagram(std::move(raw));
}

TensorDiagram open_claw() {
  return validate_diagram({{"v1"}, {{"e1", "v1", std::nullopt}, {"e2", "v1", std::nullopt}, {"e3", "v1", std::nullopt}}});
}

TensorDiagram needle() {
  return validate_diagram({{"v1"}, {{"e1", "v1", "v1"}, {"e2", "v1", std::nullopt}}});
}

TensorDiagram figure_eight() {
  return validate_diagram({{"v1"}, {{"e1", "v1", "v1"}, {"e2", "v1", "v1"}}});
}

}  // namespace tdr::shapes
