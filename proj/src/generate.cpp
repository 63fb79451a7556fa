#include "tdr/generate.hpp"

#include "tdr/error.hpp"

namespace tdr {

Representation random_representation(const TensorDiagram& d, const DimensionVector& dims, SplitMix64& rng) {
  for (const auto& w : d.wires())
    if (!dims.count(w.id)) throw Error(ErrorKind::InvalidDims, "no dimension for wire " + w.id);
  Representation r{d, dims, {}};
  for (const auto& v : d.vertices()) r.tensors[v] = rng.matrix(r.row_dim(v), r.col_dim(v));
  return validate_representation(std::move(r.diagram), std::move(r.dims), std::move(r.tensors));
}

GroupElement random_group_element(const Representation& r, SplitMix64& rng) {
  GroupElement g;
  for (const auto& [w, n] : r.dims) g[w] = rng.invertible_ldu(n);
  return g;
}

}  // namespace tdr
