#pragma once

#include <map>
#include <string>
#include <vector>

#include "tdr/matrix.hpp"
#include "tdr/semigraph.hpp"
#include "tdr/tensor.hpp"

namespace tdr {

using DimensionVector = std::map<std::string, std::size_t>;
/// One invertible matrix per wire.
using GroupElement = std::map<std::string, RatMatrix>;
/// One linear map per wire, source to target.
using RepMorphism = std::map<std::string, RatMatrix>;

/// Vertex matrices: rows run over the outgoing wires, columns over the
/// incoming ones, both in canonical wire order with the first wire slowest.
/// A loop shows up on both sides; an empty side has size 1.
struct Representation {
  TensorDiagram diagram;
  DimensionVector dims;
  std::map<std::string, RatMatrix> tensors;

  std::size_t row_dim(const std::string& v) const;
  std::size_t col_dim(const std::string& v) const;
  friend bool operator==(const Representation&, const Representation&) = default;
};

/// Throws InvalidDims, ShapeMismatch.
Representation validate_representation(TensorDiagram d, DimensionVector dims,
                                        std::map<std::string, RatMatrix> tensors);

/// Axis labels of a vertex tensor: Out slots, then In slots.
std::vector<Slot> vertex_axes(const TensorDiagram& d, const std::string& v);
LabeledTensor vertex_tensor(const Representation& r, const std::string& v);
/// Inverse of vertex_tensor for a tensor whose axes are a permutation of vertex_axes.
RatMatrix vertex_matrix(const TensorDiagram& d, const std::string& v, const LabeledTensor& t);

/// (x) g_out . M . (x) g_in^-1 at every vertex. Throws SizeMismatch, Singular.
Representation apply_group_element(const GroupElement& g, const Representation& r);
GroupElement multiply(const GroupElement& g, const GroupElement& h);  // g after h
GroupElement identity_element(const Representation& r);

/// Tensor direct sum; mixed blocks are zero. A vertex with no wires gets the
/// sum of the two scalars. Throws DiagramMismatch.
Representation direct_sum(const Representation& r1, const Representation& r2);
Representation tensor_product(const Representation& r1, const Representation& r2);
Representation unit(const TensorDiagram& d);
Representation zero_rep(const TensorDiagram& d);

/// Every wire reversed, every vertex matrix transposed.
TensorDiagram dual_diagram(const TensorDiagram& d);
Representation dual_rep(const Representation& r);

/// Throws ShapeMismatch.
bool is_morphism(const RepMorphism& phi, const Representation& r1, const Representation& r2);
RepMorphism compose(const RepMorphism& psi, const RepMorphism& phi);  // psi after phi
RepMorphism identity_morphism(const Representation& r);
RepMorphism dual_morphism(const RepMorphism& phi);

/// Dimension of the space of morphisms. Only defined when every vertex has
/// exactly one incoming and one outgoing slot; throws Unsupported otherwise.
std::size_t hom_dim(const Representation& r1, const Representation& r2);

struct CokernelResult {
  Representation rep;
  RepMorphism projection;  // r2 -> rep
};

struct KernelResult {
  Representation rep;
  RepMorphism inclusion;  // rep -> r1
};

/// Throws NotAMorphism, NotMonic, Unsupported (the quotient map is not a
/// morphism, which happens at vertices with several incoming slots).
CokernelResult cokernel(const RepMorphism& phi, const Representation& r1, const Representation& r2);
/// Dual of the cokernel of the dual morphism. Throws NotAMorphism, Unsupported.
KernelResult kernel(const RepMorphism& phi, const Representation& r1, const Representation& r2);

/// Full contraction of a closed diagram, greedy order. Throws NotClosed.
Rational contract(const Representation& r);
/// Same scalar, absorbing vertices in the given order.
Rational contract_in_order(const Representation& r, const std::vector<std::string>& order);

/// Product of vertex matrices once around a co-oriented cycle, starting and
/// ending at the base wire. Throws NotALoop.
RatMatrix monodromy(const Representation& r, const std::string& base_wire);

/// Reverses one wire, keeping entries (standard basis identification).
Representation reverse_wire_rep(const Representation& r, const std::string& w);

/// Merges the two halves of a split back into the original vertex. The fresh
/// wire must have dimension 1. Throws RestrictedDimViolation.
Representation split_functor(const Representation& split, const TensorDiagram& original, const SplitResult& s,
                             const std::string& vertex);
/// Factors the vertex tensor across a split. Throws RestrictedDimViolation
/// when the tensor has rank above 1 across the partition.
Representation split_rep(const Representation& r, const SplitResult& s, const std::string& vertex);

}  // namespace tdr
