#include "divgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "divgraph/error.hpp"

namespace divgraph::graph {
namespace {

void check_shape(std::span<const unsigned> shape) {
  for (unsigned a : shape) require(a >= 1, "shape entries must be positive");
}

void check_vertex(std::span<const unsigned> shape, std::span<const unsigned> x) {
  require(x.size() == shape.size(), "exponent vector length differs from the shape");
  for (std::size_t i = 0; i < shape.size(); ++i) require(x[i] <= shape[i], "exponent vector exceeds the shape");
}

// Advances alpha through the box lo <= alpha <= hi, coordinate 0 fastest.
bool next_in_box(std::vector<unsigned>& alpha, std::span<const unsigned> lo, std::span<const unsigned> hi) {
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] < hi[i]) {
      ++alpha[i];
      return true;
    }
    alpha[i] = lo[i];
  }
  return false;
}

}  // namespace

bool dominated(std::span<const unsigned> alpha, std::span<const unsigned> beta) {
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i] > beta[i]) return false;
  return true;
}

DivGraph DivGraph::build(std::span<const unsigned> shape) {
  check_shape(shape);
  guard(shape.size() <= kMaxLength, "build: more than 16 prime factors");
  std::uint64_t v = 1;
  for (unsigned a : shape) {
    guard(!__builtin_mul_overflow(v, std::uint64_t{a} + 1, &v) && v <= kMaxVertices,
          "build: vertex count exceeds 2^20");
  }

  DivGraph g;
  g.shape_.assign(shape.begin(), shape.end());
  g.strides_.resize(shape.size());
  std::size_t stride = 1;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    g.strides_[i] = stride;
    stride *= shape[i] + 1;
  }
  g.adj_ = BitMatrix(v);

  // Every vertex is joined to each strictly larger vertex of its up-box.
  std::vector<unsigned> x(shape.size(), 0);
  std::size_t xi = 0;
  do {
    std::vector<unsigned> y = x;
    while (next_in_box(y, x, shape)) g.adj_.set_symmetric(xi, g.index_of(y));
    ++xi;
  } while (next_in_box(x, std::vector<unsigned>(shape.size(), 0), shape));
  return g;
}

ExponentVector DivGraph::vertex(std::size_t index) const {
  ExponentVector alpha(shape_.size());
  for (std::size_t i = 0; i < shape_.size(); ++i) {
    alpha[i] = static_cast<unsigned>(index % (shape_[i] + 1));
    index /= shape_[i] + 1;
  }
  return alpha;
}

std::vector<ExponentVector> DivGraph::vertices() const {
  std::vector<ExponentVector> out;
  out.reserve(order());
  for (std::size_t i = 0; i < order(); ++i) out.push_back(vertex(i));
  return out;
}

std::size_t DivGraph::index_of(std::span<const unsigned> alpha) const {
  check_vertex(shape_, alpha);
  std::size_t index = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) index += alpha[i] * strides_[i];
  return index;
}

unsigned DivGraph::weight(std::size_t index) const {
  unsigned w = 0;
  for (std::size_t i = 0; i < shape_.size(); ++i) {
    w += static_cast<unsigned>(index % (shape_[i] + 1));
    index /= shape_[i] + 1;
  }
  return w;
}

IntegerDivGraph build_from_integer(std::uint64_t n) {
  IntegerDivGraph out;
  out.n = n;
  out.factorization = arith::factor(n);
  Shape shape;
  for (const auto& pp : out.factorization) shape.push_back(pp.exponent);
  out.graph = DivGraph::build(shape);

  // Canonical coordinates sort primes by (exponent, prime).
  std::vector<std::size_t> by_type(shape.size());
  std::iota(by_type.begin(), by_type.end(), 0);
  std::stable_sort(by_type.begin(), by_type.end(), [&](std::size_t a, std::size_t b) { return shape[a] < shape[b]; });
  Shape sorted(shape.size());
  for (std::size_t k = 0; k < shape.size(); ++k) sorted[k] = shape[by_type[k]];
  std::vector<std::size_t> strides(shape.size());
  std::size_t stride = 1;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    strides[k] = stride;
    stride *= sorted[k] + 1;
  }

  out.labels.resize(out.graph.order());
  out.to_canonical.resize(out.graph.order());
  for (std::size_t i = 0; i < out.graph.order(); ++i) {
    const auto alpha = out.graph.vertex(i);
    std::uint64_t label = 1;
    for (std::size_t j = 0; j < alpha.size(); ++j)
      for (unsigned e = 0; e < alpha[j]; ++e) label *= out.factorization[j].prime;
    out.labels[i] = label;
    std::size_t canonical = 0;
    for (std::size_t k = 0; k < sorted.size(); ++k) canonical += alpha[by_type[k]] * strides[k];
    out.to_canonical[i] = canonical;
  }
  return out;
}

Counts counts(std::span<const unsigned> shape) {
  check_shape(shape);
  // e = v * prod(a_i + 2) / 2^d - v; the product v * prod(a_i + 2) is divisible by 2^d.
  unsigned __int128 v = 1, numerator = 1;
  for (unsigned a : shape) {
    v *= a + 1;
    numerator *= static_cast<unsigned __int128>(a + 1) * (a + 2);
    guard(numerator < (static_cast<unsigned __int128>(1) << 120), "counts: overflow");
  }
  numerator >>= shape.size();
  const unsigned __int128 e = numerator - v;
  guard(e <= std::numeric_limits<std::uint64_t>::max(), "counts: edge count exceeds 64 bits");
  return {static_cast<std::uint64_t>(v), static_cast<std::uint64_t>(e)};
}

std::int64_t degree(std::span<const unsigned> shape, std::span<const unsigned> x) {
  check_vertex(shape, x);
  std::int64_t up = 1, down = 1;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    up *= shape[i] + 1 - x[i];
    down *= x[i] + 1;
  }
  return up + down - 2;
}

std::int64_t delta(std::span<const unsigned> shape, std::span<const unsigned> x, std::size_t i) {
  check_vertex(shape, x);
  require(i < shape.size(), "delta: coordinate index out of range");
  std::int64_t below = 1, above = 1;
  for (std::size_t j = 0; j < shape.size(); ++j) {
    if (j == i) continue;
    below *= x[j] + 1;
    above *= shape[j] + 1 - x[j];
  }
  return below - above;
}

DegreeProfile min_degree_analysis(std::span<const unsigned> shape) {
  check_shape(shape);
  const auto [v, e] = counts(shape);
  DegreeProfile p;
  p.degrees.resize(v);
  p.extremal.resize(v);
  std::vector<unsigned> x(shape.size(), 0);
  std::vector<unsigned> zero(shape.size(), 0);
  std::int64_t sum = 0;
  std::size_t idx = 0;
  do {
    p.degrees[idx] = degree(shape, x);
    sum += p.degrees[idx];
    bool extremal = true;
    for (std::size_t i = 0; i < shape.size(); ++i) extremal = extremal && (x[i] == 0 || x[i] == shape[i]);
    p.extremal[idx] = extremal;
    ++idx;
  } while (next_in_box(x, zero, shape));

  p.min_degree = *std::min_element(p.degrees.begin(), p.degrees.end());
  for (std::size_t i = 0; i < v; ++i)
    if (p.degrees[i] == p.min_degree) p.minimizers.push_back(i);
  p.degree_sum_matches = sum == 2 * static_cast<std::int64_t>(e);

  const DivGraph box = DivGraph::build(shape);  // only for vertex decoding
  p.extremal_minimizer_exists = std::any_of(p.minimizers.begin(), p.minimizers.end(),
                                            [&](std::size_t m) { return p.extremal[m]; });
  p.stability_holds = true;
  for (std::size_t m : p.minimizers) {
    const auto alpha = box.vertex(m);
    for (std::size_t i = 0; i < shape.size(); ++i) {
      if (alpha[i] != 0 && alpha[i] != shape[i] && delta(shape, alpha, i) != 0) p.stability_holds = false;
    }
  }

  // Extremal criterion: among extremal vertices the score
  // prod_{x_i = a_i}(a_i + 1) + prod_{x_j = 0}(a_j + 1) is minimal exactly at the minimizers.
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<std::pair<std::size_t, std::int64_t>> scores;
  for (std::size_t i = 0; i < v; ++i) {
    if (!p.extremal[i]) continue;
    const auto alpha = box.vertex(i);
    std::int64_t top = 1, bottom = 1;
    for (std::size_t c = 0; c < shape.size(); ++c) {
      if (alpha[c] == shape[c]) top *= shape[c] + 1;
      if (alpha[c] == 0) bottom *= shape[c] + 1;
    }
    scores.emplace_back(i, top + bottom);
    best = std::min(best, top + bottom);
  }
  p.extremal_criterion_holds = true;
  for (const auto& [i, score] : scores) {
    if ((score == best) != (p.degrees[i] == p.min_degree)) p.extremal_criterion_holds = false;
  }
  return p;
}

BitMatrix lucas_adjacency(unsigned k) {
  require(k <= 16, "lucas_adjacency: k must be at most 16");
  const std::size_t n = std::size_t{1} << k;
  BitMatrix m(n);
  // By Lucas, C(i, j) is odd iff the bits of j are a subset of those of i.
  auto binom_odd = [](std::size_t i, std::size_t j) { return (i & j) == j; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((binom_odd(i, j) + binom_odd(j, i)) % 2 == 1) m.set(i, j);
  return m;
}

unsigned distance(const DivGraph& g, std::size_t x, std::size_t y) {
  require(x < g.order() && y < g.order(), "distance: vertex out of range");
  if (x == y) return 0;
  return g.adjacent(x, y) ? 1 : 2;
}

std::vector<std::size_t> bfs_distances(const BitMatrix& adj, std::size_t source, const std::vector<bool>* removed) {
  const std::size_t n = adj.size();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::size_t> dist(n, std::numeric_limits<std::size_t>::max());
  // Unvisited (and not removed) vertices as a bit set, so each row is scanned word by word.
  std::vector<std::uint64_t> open(words, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (!(removed && (*removed)[i])) open[i / 64] |= std::uint64_t{1} << (i % 64);
  open[source / 64] &= ~(std::uint64_t{1} << (source % 64));
  std::vector<std::size_t> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t u = queue[head];
    const auto row = adj.row(u);
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t fresh = row[w] & open[w];
      open[w] &= ~fresh;
      while (fresh != 0) {
        const std::size_t x = w * 64 + static_cast<std::size_t>(std::countr_zero(fresh));
        fresh &= fresh - 1;
        dist[x] = dist[u] + 1;
        queue.push_back(x);
      }
    }
  }
  return dist;
}

ConnectivityReport connectivity_checks(std::span<const unsigned> shape) {
  const DivGraph g = DivGraph::build(shape);
  const std::size_t n = g.order();
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  ConnectivityReport r;

  const auto from_bottom = bfs_distances(g.adjacency(), 0);
  r.connected = std::none_of(from_bottom.begin(), from_bottom.end(), [](std::size_t d) { return d == kInf; });

  std::vector<bool> removed(n, false);
  removed[g.bottom()] = removed[g.top()] = true;
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i)
    if (!removed[i]) {
      start = i;
      break;
    }
  if (start == n) {
    r.middle_connected = true;  // the empty graph counts as connected
  } else {
    const auto d = bfs_distances(g.adjacency(), start, &removed);
    r.middle_connected = true;
    for (std::size_t i = 0; i < n; ++i)
      if (!removed[i] && d[i] == kInf) r.middle_connected = false;
  }

  // Two-colouring by BFS parity.
  r.bipartite = true;
  for (std::size_t i = 0; i < n && r.bipartite; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.adjacent(i, j) && from_bottom[i] % 2 == from_bottom[j] % 2) {
        r.bipartite = false;
        break;
      }

  for (std::size_t s = 0; s < n; ++s) {
    const auto d = s == 0 ? from_bottom : bfs_distances(g.adjacency(), s);
    for (auto x : d) r.diameter = std::max<unsigned>(r.diameter, x == kInf ? 1000u : static_cast<unsigned>(x));
  }

  Shape sorted(shape.begin(), shape.end());
  std::sort(sorted.begin(), sorted.end());
  r.predicted_middle_connected = sorted != Shape{1, 1};
  // A single vertex is trivially bipartite, so D_1 joins D_p here.
  r.predicted_bipartite = sorted.empty() || sorted == Shape{1};
  return r;
}

CliqueResult clique_number(std::span<const unsigned> shape) {
  const DivGraph g = DivGraph::build(shape);
  CliqueResult r;
  r.size = 1 + std::accumulate(shape.begin(), shape.end(), 0u);
  // Climb coordinate 1 to its maximum, then coordinate 2, and so on.
  std::vector<unsigned> alpha(shape.size(), 0);
  r.witness.push_back(g.index_of(alpha));
  for (std::size_t i = 0; i < shape.size(); ++i) {
    while (alpha[i] < shape[i]) {
      ++alpha[i];
      r.witness.push_back(g.index_of(alpha));
    }
  }
  r.witness_is_clique = true;
  for (std::size_t a = 0; a < r.witness.size(); ++a)
    for (std::size_t b = a + 1; b < r.witness.size(); ++b)
      if (!g.adjacent(r.witness[a], r.witness[b])) r.witness_is_clique = false;
  if (g.order() <= 24) r.brute_force = max_clique_size(g.adjacency());
  return r;
}

IndependenceResult independence_number(std::span<const unsigned> shape) {
  const DivGraph g = DivGraph::build(shape);
  IndependenceResult r;
  const unsigned middle = std::accumulate(shape.begin(), shape.end(), 0u) / 2;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.weight(i) == middle) r.witness.push_back(i);
  r.size = static_cast<unsigned>(r.witness.size());
  r.witness_is_independent = true;
  for (std::size_t a = 0; a < r.witness.size(); ++a)
    for (std::size_t b = a + 1; b < r.witness.size(); ++b)
      if (g.adjacent(r.witness[a], r.witness[b])) r.witness_is_independent = false;
  if (g.order() <= 24) r.brute_force = max_independent_set_size(g.adjacency());
  return r;
}

ColoringResult omega_coloring(std::span<const unsigned> shape) {
  const DivGraph g = DivGraph::build(shape);
  ColoringResult r;
  r.colors.resize(g.order());
  std::set<unsigned> used;
  for (std::size_t i = 0; i < g.order(); ++i) {
    r.colors[i] = g.weight(i);
    used.insert(r.colors[i]);
  }
  r.colors_used = static_cast<unsigned>(used.size());
  r.proper = true;
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j)
      if (g.adjacent(i, j) && r.colors[i] == r.colors[j]) r.proper = false;
  r.clique_number = 1 + std::accumulate(shape.begin(), shape.end(), 0u);
  return r;
}

namespace {

using Mask = std::uint64_t;

void clique_search(const std::vector<Mask>& nbr, Mask candidates, unsigned size, unsigned& best) {
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  // Bound: even taking every candidate cannot beat the incumbent.
  if (size + static_cast<unsigned>(std::popcount(candidates)) <= best) return;
  while (candidates != 0) {
    if (size + static_cast<unsigned>(std::popcount(candidates)) <= best) return;
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    clique_search(nbr, candidates & nbr[v], size + 1, best);
  }
}

unsigned max_clique_masks(const std::vector<Mask>& nbr) {
  unsigned best = 0;
  const std::size_t n = nbr.size();
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  clique_search(nbr, all, 0, best);
  return best;
}

}  // namespace

unsigned max_clique_size(const BitMatrix& adj) {
  require(adj.size() <= 64, "max_clique_size: at most 64 vertices");
  std::vector<Mask> nbr(adj.size());
  for (std::size_t i = 0; i < adj.size(); ++i) nbr[i] = adj.size() == 0 ? 0 : adj.row(i)[0];
  return max_clique_masks(nbr);
}

unsigned max_independent_set_size(const BitMatrix& adj) {
  require(adj.size() <= 64, "max_independent_set_size: at most 64 vertices");
  const std::size_t n = adj.size();
  std::vector<Mask> nbr(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    nbr[i] = ~adj.row(i)[0] & all & ~(Mask{1} << i);
  }
  return max_clique_masks(nbr);
}

namespace {

// Exponent vector in the shape with `values` placed at `coords`.
std::size_t embed(const DivGraph& g, const std::vector<std::size_t>& coords, std::initializer_list<unsigned> values) {
  ExponentVector alpha(g.shape().size(), 0);
  std::size_t k = 0;
  for (unsigned v : values) alpha[coords[k++]] = v;
  return g.index_of(alpha);
}

std::vector<std::vector<std::size_t>> k5_paths(const std::vector<std::size_t>& b) {
  // Pentagon A B C D E plus the five diagonals.
  const std::pair<int, int> edges[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}};
  std::vector<std::vector<std::size_t>> paths;
  for (auto [a, c] : edges) paths.push_back({b[a], b[c]});
  return paths;
}

void replace_path(std::vector<std::vector<std::size_t>>& paths, std::vector<std::size_t> path) {
  for (auto& p : paths) {
    if ((p.front() == path.front() && p.back() == path.back()) ||
        (p.front() == path.back() && p.back() == path.front())) {
      p = std::move(path);
      return;
    }
  }
}

}  // namespace

PlanarityClass planarity_class(std::span<const unsigned> shape) {
  check_shape(shape);
  Shape sorted(shape.begin(), shape.end());
  std::sort(sorted.begin(), sorted.end());
  static const std::vector<Shape> kPlanar = {{}, {1}, {2}, {3}, {1, 1}, {1, 2}};
  PlanarityClass r;
  if (std::find(kPlanar.begin(), kPlanar.end(), sorted) != kPlanar.end()) {
    r.planar = true;
    r.reason = "type is one of (), (1), (2), (3), (1,1), (1,2)";
    return r;
  }

  // Coordinates ordered by exponent, largest first.
  std::vector<std::size_t> order(shape.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return shape[a] > shape[b]; });
  const DivGraph g = DivGraph::build(shape);
  const std::size_t d = shape.size();

  if (shape[order[0]] >= 4) {
    r.offending_subtype = Shape{4};
    r.witness.kind = WitnessKind::k5;
    const std::vector<std::size_t> c{order[0]};
    for (unsigned e = 0; e <= 4; ++e) r.witness.branch.push_back(embed(g, c, {e}));
    r.witness.paths = k5_paths(r.witness.branch);
  } else if (d >= 2 && shape[order[0]] >= 3) {
    // p^3 q: parts {1, p, q} and {pq, p^2 q, p^3 q}.
    r.offending_subtype = Shape{1, 3};
    r.witness.kind = WitnessKind::k33;
    const std::vector<std::size_t> c{order[0], order[1]};  // p, q
    r.witness.branch = {embed(g, c, {0, 0}), embed(g, c, {1, 0}), embed(g, c, {0, 1}),
                        embed(g, c, {1, 1}), embed(g, c, {2, 1}), embed(g, c, {3, 1})};
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 3; b < 6; ++b) r.witness.paths.push_back({r.witness.branch[a], r.witness.branch[b]});
  } else if (d >= 2 && shape[order[1]] >= 2) {
    // p^2 q^2: branch 1, p^2 q, p^2 q^2, q, p; the edge q - p runs through pq.
    r.offending_subtype = Shape{2, 2};
    r.witness.kind = WitnessKind::k5_subdivision;
    const std::vector<std::size_t> c{order[0], order[1]};
    const auto one = embed(g, c, {0, 0}), p2q = embed(g, c, {2, 1}), p2q2 = embed(g, c, {2, 2}),
               q = embed(g, c, {0, 1}), p = embed(g, c, {1, 0}), pq = embed(g, c, {1, 1});
    r.witness.branch = {one, p2q, p2q2, q, p};
    r.witness.paths = k5_paths(r.witness.branch);
    replace_path(r.witness.paths, {q, pq, p});
  } else if (d >= 3) {
    // pqr: branch 1, pqr, pq, r, p; pq - r through q, rq and r - p through pr.
    r.offending_subtype = Shape{1, 1, 1};
    r.witness.kind = WitnessKind::k5_subdivision;
    const std::vector<std::size_t> c{order[0], order[1], order[2]};  // p, q, r
    const auto one = embed(g, c, {0, 0, 0}), pqr = embed(g, c, {1, 1, 1}), pq = embed(g, c, {1, 1, 0}),
               r_ = embed(g, c, {0, 0, 1}), p = embed(g, c, {1, 0, 0}), q = embed(g, c, {0, 1, 0}),
               rq = embed(g, c, {0, 1, 1}), pr = embed(g, c, {1, 0, 1});
    r.witness.branch = {one, pqr, pq, r_, p};
    r.witness.paths = k5_paths(r.witness.branch);
    replace_path(r.witness.paths, {pq, q, rq, r_});
    replace_path(r.witness.paths, {r_, pr, p});
  }

  const Shape& sub = *r.offending_subtype;
  std::string sub_text = "(";
  for (std::size_t i = 0; i < sub.size(); ++i) sub_text += (i ? "," : "") + std::to_string(sub[i]);
  sub_text += ")";
  if (sorted == sub) {
    r.reason = "contains " + to_string(r.witness.kind);
  } else {
    r.reason = "contains nonplanar D_m for divisor m of type " + sub_text;
  }
  return r;
}

std::string to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::none:
      return "none";
    case WitnessKind::k5:
      return "K5";
    case WitnessKind::k33:
      return "K3,3";
    case WitnessKind::k5_subdivision:
      return "K5-subdivision";
  }
  return "unknown";
}

bool witness_is_valid(const DivGraph& g, const KuratowskiWitness& w) {
  std::set<std::size_t> branch(w.branch.begin(), w.branch.end());
  if (branch.size() != w.branch.size()) return false;
  std::set<std::pair<std::size_t, std::size_t>> connected;
  std::set<std::size_t> interior;
  for (const auto& path : w.paths) {
    if (path.size() < 2) return false;
    if (!branch.count(path.front()) || !branch.count(path.back())) return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      if (!g.adjacent(path[i], path[i + 1])) return false;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      if (branch.count(path[i]) || !interior.insert(path[i]).second) return false;
    }
    connected.insert(std::minmax(path.front(), path.back()));
  }
  if (connected.size() != w.paths.size()) return false;
  switch (w.kind) {
    case WitnessKind::k5:
    case WitnessKind::k5_subdivision:
      return w.branch.size() == 5 && w.paths.size() == 10;
    case WitnessKind::k33: {
      if (w.branch.size() != 6 || w.paths.size() != 9) return false;
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 3; b < 6; ++b)
          if (!connected.count(std::minmax(w.branch[a], w.branch[b]))) return false;
      return true;
    }
    case WitnessKind::none:
      return false;
  }
  return false;
}

std::string to_dot(const DivGraph& g, const std::vector<std::uint64_t>* labels) {
  std::ostringstream out;
  out << "graph D {\n";
  for (std::size_t i = 0; i < g.order(); ++i) {
    out << "  v" << i << " [label=\"";
    if (labels) {
      out << (*labels)[i];
    } else {
      const auto alpha = g.vertex(i);
      out << '(';
      for (std::size_t k = 0; k < alpha.size(); ++k) out << (k ? "," : "") << alpha[k];
      out << ')';
    }
    out << "\"];\n";
  }
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j)
      if (g.adjacent(i, j)) out << "  v" << i << " -- v" << j << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace divgraph::graph
