#include "divgraph/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "divgraph/error.hpp"

namespace divgraph::graph {

bool planarity_oracle(const BitMatrix& adj) {
  guard(adj.size() <= kPlanarityOracleMaxVertices, "planarity_oracle: more than 256 vertices");
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph g(adj.size());
  for (std::size_t i = 0; i < adj.size(); ++i)
    for (std::size_t j = i + 1; j < adj.size(); ++j)
      if (adj.test(i, j)) boost::add_edge(i, j, g);
  return boost::boyer_myrvold_planarity_test(g);
}

}  // namespace divgraph::graph
