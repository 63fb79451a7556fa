#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "tdr/classify.hpp"
#include "tdr/poly.hpp"
#include "tdr/random.hpp"
#include "tdr/representation.hpp"

namespace tdr {

/// Name of an indecomposable block. Positions are 1-based along the shape
/// frame (see ShapeFrame).
struct IndecompDescriptor {
  enum class Kind { Interval, Band, String };
  Kind kind = Kind::Interval;
  std::size_t a = 0, b = 0;       // Interval[a, b]
  RatPoly poly;                   // Band(poly, power)
  int power = 0;
  std::size_t start = 0, len = 0; // String(start, len)

  static IndecompDescriptor interval(std::size_t a, std::size_t b);
  static IndecompDescriptor band(RatPoly p, int s);
  static IndecompDescriptor string(std::size_t start, std::size_t len);

  friend bool operator==(const IndecompDescriptor&, const IndecompDescriptor&) = default;
  friend std::strong_ordering operator<=>(const IndecompDescriptor& x, const IndecompDescriptor& y);
};

/// Closed-path names: simple at a position, one-dimensional with loop
/// scalar lambda, and the two-dimensional nilpotent family.
struct DescriptorAlias {
  enum class Kind { V0, Vlambda, W };
  Kind kind = Kind::V0;
  std::size_t i = 0;
  Rational lambda;
};

struct DecompositionEntry {
  IndecompDescriptor desc;
  std::size_t mult = 1;
  std::optional<DescriptorAlias> alias;  // closed paths only
};

struct Decomposition {
  ShapeKind shape = ShapeKind::A0;
  std::size_t n = 0;
  std::vector<DecompositionEntry> entries;  // sorted by descriptor

  /// Descriptor multiset with repetitions.
  std::vector<IndecompDescriptor> multiset() const;
  friend bool operator==(const Decomposition& x, const Decomposition& y) { return x.multiset() == y.multiset(); }
};

/// How a connected finite or tame diagram is read as a path or cycle quiver.
/// Vertex i maps position i to position i+1 (cyclically for P and J). An
/// empty position is the pinned one-dimensional slot: the closed end of A1
/// (last position) or the closing slot of P (first position).
struct ShapeFrame {
  ShapeKind shape = ShapeKind::A0;
  std::size_t n = 0;
  std::vector<std::optional<std::string>> positions;
  std::vector<std::string> vertices;
  std::vector<std::string> reversed;  // wires flipped to co-orient

  bool cyclic() const { return shape == ShapeKind::P || shape == ShapeKind::J; }
};

/// Throws NotConnected, NotDecomposable (wild), NotNormalized.
ShapeFrame shape_frame(const TensorDiagram& d);

/// Canonical co-oriented diagram of a shape with n vertices.
TensorDiagram canonical_shape(ShapeKind shape, std::size_t n);

/// Throws NotConnected, NotDecomposable.
Decomposition decompose(const Representation& r);

/// Throws InvalidDescriptor, including a single block that does not fill
/// the pinned slot of A1 or P exactly once.
Representation realize(const TensorDiagram& d, const IndecompDescriptor& desc);
/// Block sum in the frame; on A1 and P the blocks must fill the pinned slot
/// exactly once between them.
Representation realize_sum(const TensorDiagram& d, const std::vector<IndecompDescriptor>& descs);

/// Throws DiagramMismatch, NotDecidableWild, NotConnected.
bool isomorphic(const Representation& r1, const Representation& r2);

std::optional<DescriptorAlias> closed_path_alias(const IndecompDescriptor& desc, std::size_t n);

std::string to_string(const IndecompDescriptor& desc);
std::string to_string(const DescriptorAlias& alias);

struct SumSample {
  Representation rep;
  std::vector<IndecompDescriptor> answer_key;  // sorted
};

/// Random valid blocks for the diagram's shape, summed and moved by a random
/// group element. At most max_blocks blocks.
SumSample random_sum(const TensorDiagram& d, SplitMix64& rng, std::size_t max_blocks = 6);

}  // namespace tdr
