#pragma once

#include "divgraph/bitmatrix.hpp"
#include "divgraph/graph.hpp"

namespace divgraph::graph {

inline constexpr std::size_t kPlanarityOracleMaxVertices = 256;

/// Boyer-Myrvold edge-addition planarity test, independent of the closed-form
/// classification. Throws GuardError above 256 vertices.
bool planarity_oracle(const BitMatrix& adj);
inline bool planarity_oracle(const DivGraph& g) { return planarity_oracle(g.adjacency()); }

}  // namespace divgraph::graph
