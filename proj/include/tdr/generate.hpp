#pragma once

#include <cstdint>
#include <vector>

#include "tdr/random.hpp"
#include "tdr/representation.hpp"

namespace tdr {

/// Random entries at every vertex. Throws InvalidDims.
Representation random_representation(const TensorDiagram& d, const DimensionVector& dims, SplitMix64& rng);

/// Random invertible matrix on every wire.
GroupElement random_group_element(const Representation& r, SplitMix64& rng);

}  // namespace tdr
