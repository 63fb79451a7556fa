#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace tdr {

/// A wire with up to two endpoints. An empty tail or head is a dangling end.
struct Wire {
  std::string id;
  std::optional<std::string> tail;
  std::optional<std::string> head;

  bool is_loop() const { return tail && head && *tail == *head; }
  bool is_dangling() const { return tail.has_value() != head.has_value(); }
  bool is_endpointless() const { return !tail && !head; }
  friend bool operator==(const Wire&, const Wire&) = default;
};

/// Which end of a wire sits at a vertex: Out is the tail end, In the head end.
enum class End { Out, In };

struct Slot {
  std::string wire;
  End end = End::Out;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

struct VertexNeighborhood {
  std::vector<std::string> incoming;  // head = v
  std::vector<std::string> outgoing;  // tail = v
  std::size_t degree() const { return incoming.size() + outgoing.size(); }
};

struct SubdiagramRef {
  std::vector<std::string> vertices;
  std::vector<std::string> wires;
  bool induced = false;
  friend bool operator==(const SubdiagramRef&, const SubdiagramRef&) = default;
};

/// Unvalidated input record.
struct RawDiagram {
  std::vector<std::string> vertices;
  std::vector<Wire> wires;
};

/// Directed semi-graph with ids kept in lexicographic order.
class TensorDiagram {
 public:
  TensorDiagram() = default;

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Wire>& wires() const noexcept { return wires_; }

  bool has_vertex(const std::string& v) const;
  bool has_wire(const std::string& w) const;
  /// Throws UnknownWire.
  const Wire& wire(const std::string& w) const;
  std::size_t wire_index(const std::string& w) const;
  std::size_t vertex_index(const std::string& v) const;

  /// Throws UnknownVertex.
  VertexNeighborhood neighborhood(const std::string& v) const;
  std::vector<Slot> slots(const std::string& v) const;
  std::size_t degree(const std::string& v) const { return neighborhood(v).degree(); }

  bool is_closed() const;
  bool has_endpointless() const;

  friend bool operator==(const TensorDiagram&, const TensorDiagram&) = default;

 private:
  friend TensorDiagram validate_diagram(RawDiagram raw);
  std::vector<std::string> vertices_;
  std::vector<Wire> wires_;
};

/// Sorts ids and checks references. Throws DuplicateId, UnknownVertexRef.
TensorDiagram validate_diagram(RawDiagram raw);

struct NormalizeResult {
  TensorDiagram diagram;
  std::vector<std::string> removed;
};

/// Drops endpointless wires.
NormalizeResult normalize(const TensorDiagram& d);

/// Swaps tail and head of one wire. Throws UnknownWire.
TensorDiagram reverse_wire(const TensorDiagram& d, const std::string& w);

struct SplitResult {
  TensorDiagram diagram;
  std::string fresh_wire;  // from first to second
  std::string first;       // carries part1
  std::string second;      // carries part2
};

/// Replaces v by two vertices joined by a fresh wire. The parts must partition
/// the slots at v. Throws UnknownVertex, NotAPartition.
SplitResult split_vertex(const TensorDiagram& d, const std::string& v, const std::vector<Slot>& part1,
                         const std::vector<Slot>& part2);

/// Removes a wire between two distinct vertices and merges them under
/// `merged` (the tail id by default). Throws UnknownWire, NotAPartition when
/// the wire is a loop or dangling, DuplicateId when `merged` clashes.
TensorDiagram contract_wire(const TensorDiagram& d, const std::string& w,
                            const std::optional<std::string>& merged = std::nullopt);

struct SplitStep {
  std::string vertex;
  std::vector<Slot> part1, part2;
  std::string fresh_wire, first, second;
};

struct IsolationResult {
  TensorDiagram diagram;
  std::vector<std::string> restricted;  // wires to be pinned to dimension 1
  SubdiagramRef copy;
  std::vector<SplitStep> steps;  // in the order applied
};

/// Two splitting passes that cut s off from the rest of d.
/// Throws NotASubdiagram.
IsolationResult isolate_subdiagram(const TensorDiagram& d, const SubdiagramRef& s);

/// Maximal connected pieces, ordered by their smallest vertex; endpointless
/// wires come last, one component each.
std::vector<SubdiagramRef> connected_components(const TensorDiagram& d);

/// Throws NotASubdiagram for unknown ids.
bool is_induced(const TensorDiagram& d, const SubdiagramRef& s);

/// The subdiagram as a diagram in its own right: ends outside the vertex set
/// become dangling. Throws NotASubdiagram.
TensorDiagram restrict_to(const TensorDiagram& d, const SubdiagramRef& s);

}  // namespace tdr
