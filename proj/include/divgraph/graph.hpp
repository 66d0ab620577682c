#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "divgraph/arith.hpp"
#include "divgraph/bitmatrix.hpp"

namespace divgraph::graph {

/// Exponent bounds (a_1, ..., a_d), all positive. Graph construction accepts
/// any order; FactorizationType::exponents() gives the sorted form.
using Shape = std::vector<unsigned>;

/// A divisor as its exponent vector (alpha_1, ..., alpha_d), 0 <= alpha_i <= a_i.
using ExponentVector = std::vector<unsigned>;

inline constexpr std::size_t kMaxLength = 16;
inline constexpr std::uint64_t kMaxVertices = std::uint64_t{1} << 20;

/// Divisibility relation graph of a shape. Vertices are enumerated in
/// mixed radix with coordinate 1 fastest:
///   index(alpha) = sum_i alpha_i * prod_{j<i} (a_j + 1).
/// Immutable after construction.
class DivGraph {
 public:
  /// Throws GuardError when d > 16 or the vertex count exceeds 2^20.
  static DivGraph build(std::span<const unsigned> shape);
  static DivGraph build(const arith::FactorizationType& t) { return build(t.parts()); }

  const Shape& shape() const { return shape_; }
  arith::FactorizationType ftype() const { return arith::FactorizationType(shape_); }

  std::size_t order() const { return adj_.size(); }
  std::size_t edge_count() const { return adj_.total_count() / 2; }
  const BitMatrix& adjacency() const { return adj_; }
  bool adjacent(std::size_t x, std::size_t y) const { return adj_.test(x, y); }
  std::size_t degree(std::size_t x) const { return adj_.row_count(x); }

  ExponentVector vertex(std::size_t index) const;
  std::vector<ExponentVector> vertices() const;
  std::size_t index_of(std::span<const unsigned> alpha) const;
  /// Omega of the divisor: sum of its exponents.
  unsigned weight(std::size_t index) const;

  std::size_t bottom() const { return 0; }
  std::size_t top() const { return order() - 1; }

 private:
  Shape shape_;
  std::vector<std::size_t> strides_;
  BitMatrix adj_;
};

/// Componentwise alpha <= beta.
bool dominated(std::span<const unsigned> alpha, std::span<const unsigned> beta);

/// D_n for a concrete n, vertices in the integer's own order (primes
/// ascending, smallest prime fastest) and labelled by the actual divisors.
struct IntegerDivGraph {
  std::uint64_t n = 1;
  arith::Factorization factorization;
  DivGraph graph;
  std::vector<std::uint64_t> labels;
  /// to_canonical[i] = index of vertex i in DivGraph::build(factorization_type(n)).
  std::vector<std::size_t> to_canonical;
};

IntegerDivGraph build_from_integer(std::uint64_t n);

struct Counts {
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
};

/// v = prod(a_i + 1), e = v * (prod(a_i + 2) / 2^d - 1), evaluated exactly.
Counts counts(std::span<const unsigned> shape);

/// Degree of x from the closed form prod(a_i + 1 - x_i) + prod(x_i + 1) - 2.
std::int64_t degree(std::span<const unsigned> shape, std::span<const unsigned> x);

/// Delta_i(x) = prod_{j != i}(x_j + 1) - prod_{j != i}(a_j + 1 - x_j); i is 0-based.
std::int64_t delta(std::span<const unsigned> shape, std::span<const unsigned> x, std::size_t i);

struct DegreeProfile {
  std::vector<std::int64_t> degrees;
  std::int64_t min_degree = 0;
  std::vector<std::size_t> minimizers;
  std::vector<bool> extremal;  // per vertex
  /// At least one minimizer is extremal.
  bool extremal_minimizer_exists = false;
  /// Every minimizer has Delta_i = 0 at each nonextremal coordinate.
  bool stability_holds = false;
  /// Extremal x is a minimizer iff prod_{A}(a_i+1) + prod_{B}(a_j+1) is minimal.
  bool extremal_criterion_holds = false;
  bool degree_sum_matches = false;  // sum of degrees == 2e

  bool ok() const {
    return extremal_minimizer_exists && stability_holds && extremal_criterion_holds && degree_sum_matches;
  }
};

DegreeProfile min_degree_analysis(std::span<const unsigned> shape);

/// (C(i,j) + C(j,i)) mod 2 for 0 <= i, j < 2^k. Throws PreconditionError for k > 16.
BitMatrix lucas_adjacency(unsigned k);

/// 0 if x == y, 1 if adjacent, 2 otherwise.
unsigned distance(const DivGraph& g, std::size_t x, std::size_t y);

/// Breadth-first distances from `source`; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const BitMatrix& adj, std::size_t source,
                                       const std::vector<bool>* removed = nullptr);

struct ConnectivityReport {
  bool connected = false;
  bool middle_connected = false;
  bool bipartite = false;
  bool predicted_middle_connected = false;
  bool predicted_bipartite = false;
  unsigned diameter = 0;

  bool ok() const {
    return connected && middle_connected == predicted_middle_connected && bipartite == predicted_bipartite &&
           diameter <= 2;
  }
};

ConnectivityReport connectivity_checks(std::span<const unsigned> shape);

struct CliqueResult {
  unsigned size = 0;
  std::vector<std::size_t> witness;  // a divisor chain, bottom to top
  bool witness_is_clique = false;
  std::optional<unsigned> brute_force;  // exact search when v <= 24

  bool ok() const { return witness_is_clique && witness.size() == size && (!brute_force || *brute_force == size); }
};

CliqueResult clique_number(std::span<const unsigned> shape);

struct IndependenceResult {
  unsigned size = 0;
  std::vector<std::size_t> witness;  // vertices of weight floor(Omega / 2)
  bool witness_is_independent = false;
  std::optional<unsigned> brute_force;

  bool ok() const {
    return witness_is_independent && witness.size() == size && (!brute_force || *brute_force == size);
  }
};

IndependenceResult independence_number(std::span<const unsigned> shape);

struct ColoringResult {
  std::vector<unsigned> colors;
  unsigned colors_used = 0;
  bool proper = false;
  unsigned clique_number = 0;

  bool ok() const { return proper && colors_used == clique_number; }
};

ColoringResult omega_coloring(std::span<const unsigned> shape);

/// Maximum clique by branch and bound over 64-bit masks (v <= 64).
unsigned max_clique_size(const BitMatrix& adj);
unsigned max_independent_set_size(const BitMatrix& adj);

enum class WitnessKind { none, k5, k33, k5_subdivision };

/// A Kuratowski subgraph: branch vertices plus one path per branch edge.
struct KuratowskiWitness {
  WitnessKind kind = WitnessKind::none;
  std::vector<std::size_t> branch;
  std::vector<std::vector<std::size_t>> paths;
};

struct PlanarityClass {
  bool planar = false;
  std::string reason;
  /// Minimal nonplanar subtype contained in the shape, when nonplanar.
  std::optional<Shape> offending_subtype;
  KuratowskiWitness witness;
};

PlanarityClass planarity_class(std::span<const unsigned> shape);

/// Is every path an actual path in g and do the paths realise K5 or K3,3?
bool witness_is_valid(const DivGraph& g, const KuratowskiWitness& w);

std::string to_string(WitnessKind kind);

/// Graphviz export. Labels are divisors when provided, exponent vectors otherwise.
std::string to_dot(const DivGraph& g, const std::vector<std::uint64_t>* labels = nullptr);

}  // namespace divgraph::graph
