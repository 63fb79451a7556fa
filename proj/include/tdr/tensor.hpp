#pragma once

#include <string>
#include <vector>

#include "tdr/matrix.hpp"
#include "tdr/semigraph.hpp"

namespace tdr {

/// Dense tensor whose axes are labeled by wire slots, row-major.
struct LabeledTensor {
  std::vector<Slot> axes;
  std::vector<std::size_t> dims;
  std::vector<Rational> data;

  std::size_t axis(const Slot& s) const;  // throws ShapeMismatch if absent
  bool has_axis(const Slot& s) const;
};

/// Reorders axes to `order`, which must be a permutation of t.axes.
LabeledTensor permute(const LabeledTensor& t, const std::vector<Slot>& order);

/// Sums over the diagonal of the Out and In axes of one wire.
LabeledTensor trace_wire(const LabeledTensor& t, const std::string& wire);

/// Contracts the listed wires, each having one end in a and the other in b.
/// Free axes of a come first, then those of b. An empty list gives the outer
/// product.
LabeledTensor contract_pair(const LabeledTensor& a, const LabeledTensor& b, const std::vector<std::string>& wires);

/// Wires with one end in a and the other in b.
std::vector<std::string> shared_wires(const LabeledTensor& a, const LabeledTensor& b);

/// Wires with both ends in t.
std::vector<std::string> self_wires(const LabeledTensor& t);

}  // namespace tdr
