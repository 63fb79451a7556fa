#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "tdr/semigraph.hpp"

namespace tdr {

using FlowValue = std::complex<double>;
/// Nonzero value per wire; may cover only part of the diagram.
using FlowAssignment = std::map<std::string, FlowValue>;

/// Wires whose ends all lie in u (the induced subdiagram's wires).
std::vector<std::string> induced_wires(const TensorDiagram& d, const std::vector<std::string>& u);

/// Product of outgoing values times inverse incoming values at v, over the
/// wires f covers.
FlowValue flow_balance(const TensorDiagram& d, const FlowAssignment& f, const std::string& v);

/// Checks the flow condition at every vertex outside u. f must be defined on
/// exactly the wires outside the induced subdiagram. Throws DomainMismatch.
bool verify_partial_flow(const TensorDiagram& d, const FlowAssignment& f, const std::vector<std::string>& u,
                         double tol = 1e-9);

/// Extends a partial flow over the induced subdiagram of u by peeling leaves
/// of a spanning multi-tree. Throws NotClosed, DomainMismatch,
/// InvalidPartialFlow (including when a piece of the induced subdiagram has
/// a boundary product away from 1).
FlowAssignment extend_flow(const TensorDiagram& d, const FlowAssignment& f, const std::vector<std::string>& u,
                           double tol = 1e-9);

}  // namespace tdr
