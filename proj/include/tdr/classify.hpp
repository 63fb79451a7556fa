#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tdr/semigraph.hpp"

namespace tdr {

enum class WitnessKind { OpenClaw, Needle, FigureEight };

/// A forbidden subdiagram located at one vertex. For the open claw `wires`
/// lists the three slots' wires (a loop may appear twice); for the needle it
/// is {loop, extra}; for the figure eight the two loops.
struct WildWitness {
  WitnessKind kind = WitnessKind::OpenClaw;
  std::string vertex;
  std::vector<Slot> slots;
  std::vector<std::string> wires;
  friend bool operator==(const WildWitness&, const WildWitness&) = default;
};

enum class ClassKind { Finite, Tame, Wild };
enum class ShapeKind { A0, A1, P, J };

struct DiagramClass {
  ClassKind kind = ClassKind::Tame;
  ShapeKind shape = ShapeKind::P;  // meaningful unless wild
  std::size_t n = 0;               // number of vertices
  std::optional<WildWitness> witness;
};

struct ComponentClass {
  SubdiagramRef component;
  DiagramClass cls;
};

/// Per connected component. Throws NotNormalized on endpointless wires.
std::vector<ComponentClass> classify_diagram(const TensorDiagram& d);

/// Any vertex of slot-degree three or more yields a witness.
std::optional<WildWitness> find_forbidden_witness(const TensorDiagram& d);

std::string to_string(ClassKind k);
std::string to_string(ShapeKind k);
std::string to_string(WitnessKind k);

}  // namespace tdr
