#pragma once

#include <cstddef>

#include "tdr/semigraph.hpp"

namespace tdr::shapes {

// Co-oriented builders with ids v1..vn and e1..em.

/// n vertices on a directed cycle; e_i runs v_{i-1} -> v_i, e_1 closes from v_n.
TensorDiagram loop(std::size_t n);
/// n vertices, n-1 wires, e_i runs v_i -> v_{i+1}.
TensorDiagram closed_path(std::size_t n);
/// n vertices, e_1 dangles into v_1, e_{n+1} dangles out of v_n.
TensorDiagram open_path(std::size_t n);
/// n vertices, e_1 dangles into v_1, the far end is closed at v_n.
TensorDiagram half_open_path(std::size_t n);

/// One vertex with three outgoing dangling wires.
TensorDiagram open_claw();
/// One vertex with loop e1 and an outgoing dangling wire e2.
TensorDiagram needle();
/// One vertex with loops e1 and e2.
TensorDiagram figure_eight();

}  // namespace tdr::shapes
