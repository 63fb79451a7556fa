#include "tdr/io.hpp"

#include <fstream>
#include <sstream>

#include "tdr/error.hpp"

namespace tdr::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string str(const json& j, const char* what) {
  if (!j.is_string()) fail(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::size_t count(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    fail(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

double real(const json& j) {
  if (!j.is_number()) fail("flow components must be numbers");
  return j.get<double>();
}

}  // namespace

json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return parse_rational(str(j, "rational"));
}

json to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) fail("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) fail("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(j[r][c]);
  }
  return m;
}

json to_json(const RatPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

RatPoly poly_from_json(const json& j) {
  if (!j.is_array()) fail("polynomial must be a coefficient array");
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return RatPoly(std::move(c));
}

json to_json(const TensorDiagram& d) {
  json wires = json::array();
  for (const auto& w : d.wires()) {
    wires.push_back({{"id", w.id},
                     {"tail", w.tail ? json(*w.tail) : json(nullptr)},
                     {"head", w.head ? json(*w.head) : json(nullptr)}});
  }
  return {{"vertices", d.vertices()}, {"wires", std::move(wires)}};
}

TensorDiagram diagram_from_json(const json& j) {
  RawDiagram raw;
  for (const auto& v : field(j, "vertices")) raw.vertices.push_back(str(v, "vertex id"));
  for (const auto& w : field(j, "wires")) {
    Wire x{str(field(w, "id"), "wire id"), std::nullopt, std::nullopt};
    if (w.contains("tail") && !w.at("tail").is_null()) x.tail = str(w.at("tail"), "tail");
    if (w.contains("head") && !w.at("head").is_null()) x.head = str(w.at("head"), "head");
    raw.wires.push_back(std::move(x));
  }
  return validate_diagram(std::move(raw));
}

json to_json(const Representation& r) {
  json dims = json::object();
  for (const auto& [w, k] : r.dims) dims[w] = k;
  json vertices = json::object();
  for (const auto& [v, m] : r.tensors) vertices[v] = {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", to_json(m)}};
  return {{"diagram", to_json(r.diagram)}, {"dims", std::move(dims)}, {"vertices", std::move(vertices)}};
}

Representation representation_from_json(const json& j, const std::filesystem::path& base_dir) {
  const json& dj = field(j, "diagram");
  TensorDiagram d;
  if (dj.is_string()) {
    d = diagram_from_json(parse(read_file(base_dir / dj.get<std::string>())));
  } else {
    d = diagram_from_json(dj);
  }
  DimensionVector dims;
  const json& dimj = field(j, "dims");
  if (!dimj.is_object()) fail("dims must be an object");
  for (const auto& [w, k] : dimj.items()) dims[w] = count(k, "dimension");
  std::map<std::string, RatMatrix> tensors;
  const json& vj = field(j, "vertices");
  if (!vj.is_object()) fail("vertices must be an object");
  for (const auto& [v, t] : vj.items()) {
    const std::size_t rows = count(field(t, "rows"), "rows"), cols = count(field(t, "cols"), "cols");
    const json& e = field(t, "entries");
    if (!e.is_array() || e.size() != rows) fail("entries of " + v + " do not match rows");
    RatMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      if (!e[r].is_array() || e[r].size() != cols) fail("entries of " + v + " do not match cols");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(e[r][c]);
    }
    tensors[v] = std::move(m);
  }
  return validate_representation(std::move(d), std::move(dims), std::move(tensors));
}

json to_json(const IndecompDescriptor& d) {
  switch (d.kind) {
    case IndecompDescriptor::Kind::Interval: return {{"type", "interval"}, {"a", d.a}, {"b", d.b}};
    case IndecompDescriptor::Kind::Band: return {{"type", "band"}, {"poly", to_json(d.poly)}, {"power", d.power}};
    case IndecompDescriptor::Kind::String: return {{"type", "string"}, {"start", d.start}, {"len", d.len}};
  }
  return nullptr;
}

IndecompDescriptor descriptor_from_json(const json& j) {
  const std::string type = str(field(j, "type"), "type");
  if (type == "interval") return IndecompDescriptor::interval(count(field(j, "a"), "a"), count(field(j, "b"), "b"));
  if (type == "band") {
    return IndecompDescriptor::band(poly_from_json(field(j, "poly")), static_cast<int>(count(field(j, "power"), "power")));
  }
  if (type == "string") {
    return IndecompDescriptor::string(count(field(j, "start"), "start"), count(field(j, "len"), "len"));
  }
  fail("unknown descriptor type " + type);
}

json to_json(const Decomposition& d) {
  json blocks = json::array();
  for (const auto& e : d.entries) {
    json b = to_json(e.desc);
    b["mult"] = e.mult;
    if (e.alias) {
      switch (e.alias->kind) {
        case DescriptorAlias::Kind::V0: b["alias"] = {{"type", "V0"}, {"i", e.alias->i}}; break;
        case DescriptorAlias::Kind::Vlambda: b["alias"] = {{"type", "Vlambda"}, {"lambda", to_json(e.alias->lambda)}}; break;
        case DescriptorAlias::Kind::W: b["alias"] = {{"type", "W"}, {"i", e.alias->i}}; break;
      }
    }
    blocks.push_back(std::move(b));
  }
  return {{"field", "QQ"}, {"shape", to_string(d.shape)}, {"n", d.n}, {"blocks", std::move(blocks)}};
}

json to_json(const FlowAssignment& f) {
  json out = json::object();
  for (const auto& [w, v] : f) out[w] = {v.real(), v.imag()};
  return out;
}

FlowInput flow_from_json(const json& j) {
  FlowInput in;
  const json& wj = field(j, "wires");
  if (!wj.is_object()) fail("flow wires must be an object");
  for (const auto& [w, v] : wj.items()) {
    if (v.is_number()) {
      in.wires[w] = real(v);
    } else if (v.is_array() && v.size() == 2) {
      in.wires[w] = FlowValue(real(v[0]), real(v[1]));
    } else {
      fail("flow value of " + w + " must be [re, im]");
    }
  }
  if (j.contains("u")) {
    for (const auto& v : j.at("u")) in.u.push_back(str(v, "vertex id"));
  }
  return in;
}

PairsInput pairs_from_json(const json& j) {
  return {{matrix_from_json(field(j, "A1")), matrix_from_json(field(j, "B1"))},
          {matrix_from_json(field(j, "A2")), matrix_from_json(field(j, "B2"))}};
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(e.what());
  }
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) fail("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace tdr::io
