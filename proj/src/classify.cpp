#include "tdr/classify.hpp"

#include "tdr/error.hpp"

namespace tdr {

namespace {

std::vector<std::string> loops_at(const TensorDiagram& d, const std::string& v) {
  std::vector<std::string> out;
  for (const auto& w : d.wires())
    if (w.is_loop() && w.tail == v) out.push_back(w.id);
  return out;
}

}  // namespace

std::optional<WildWitness> find_forbidden_witness(const TensorDiagram& d) {
  for (const auto& v : d.vertices()) {
    const auto loops = loops_at(d, v);
    if (loops.size() >= 2) {
      return WildWitness{WitnessKind::FigureEight, v,
                         {{loops[0], End::Out}, {loops[0], End::In}, {loops[1], End::Out}, {loops[1], End::In}},
                         {loops[0], loops[1]}};
    }
  }
  for (const auto& v : d.vertices()) {
    const auto loops = loops_at(d, v);
    if (loops.size() != 1 || d.degree(v) < 3) continue;
    for (const auto& s : d.slots(v)) {
      if (s.wire == loops[0]) continue;
      return WildWitness{WitnessKind::Needle, v, {{loops[0], End::Out}, {loops[0], End::In}, s}, {loops[0], s.wire}};
    }
  }
  for (const auto& v : d.vertices()) {
    const auto slots = d.slots(v);
    if (slots.size() < 3) continue;
    WildWitness w{WitnessKind::OpenClaw, v, {slots.begin(), slots.begin() + 3}, {}};
    for (const auto& s : w.slots) w.wires.push_back(s.wire);
    return w;
  }
  return std::nullopt;
}

std::vector<ComponentClass> classify_diagram(const TensorDiagram& d) {
  if (d.has_endpointless()) throw Error(ErrorKind::NotNormalized, "endpointless wire present");
  std::vector<ComponentClass> out;
  for (const auto& comp : connected_components(d)) {
    const TensorDiagram c = restrict_to(d, comp);
    DiagramClass cls;
    cls.n = c.vertices().size();
    if (auto w = find_forbidden_witness(c)) {
      cls.kind = ClassKind::Wild;
      cls.witness = std::move(w);
    } else {
      std::size_t dangling = 0;
      for (const auto& w : c.wires()) dangling += w.is_dangling();
      if (dangling == 2) {
        cls = {ClassKind::Finite, ShapeKind::A0, cls.n, std::nullopt};
      } else if (dangling == 1) {
        cls = {ClassKind::Finite, ShapeKind::A1, cls.n, std::nullopt};
      } else if (c.wires().size() + 1 == cls.n) {
        cls = {ClassKind::Tame, ShapeKind::P, cls.n, std::nullopt};
      } else {
        cls = {ClassKind::Tame, ShapeKind::J, cls.n, std::nullopt};
      }
    }
    out.push_back({comp, std::move(cls)});
  }
  return out;
}

std::string to_string(ClassKind k) {
  switch (k) {
    case ClassKind::Finite: return "finite";
    case ClassKind::Tame: return "tame";
    case ClassKind::Wild: return "wild";
  }
  return "?";
}

std::string to_string(ShapeKind k) {
  switch (k) {
    case ShapeKind::A0: return "A0";
    case ShapeKind::A1: return "A1";
    case ShapeKind::P: return "P";
    case ShapeKind::J: return "J";
  }
  return "?";
}

std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::OpenClaw: return "open-claw";
    case WitnessKind::Needle: return "needle";
    case WitnessKind::FigureEight: return "figure-eight";
  }
  return "?";
}

}  // namespace tdr
