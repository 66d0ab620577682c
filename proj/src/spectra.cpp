#include "divgraph/spectra.hpp"

#include <algorithm>
#include <exception>
#include <numeric>

#include "divgraph/error.hpp"

namespace divgraph::spectra {

using arith::FactorizationType;

IntMatrix adjacency_matrix(const FactorizationType& t) {
  return to_int_matrix(graph::DivGraph::build(t).adjacency());
}

IntPolynomial charpoly_of_type(const FactorizationType& t, const exactla::Limits& limits) {
  guard(t.divisor_count() <= limits.charpoly_max_dim,
        "charpoly: type " + t.to_string() + " has more than " + std::to_string(limits.charpoly_max_dim) + " vertices");
  return exactla::charpoly(adjacency_matrix(t), limits);
}

namespace {

IntPolynomial integer_charpoly(std::uint64_t n, const exactla::Limits& limits) {
  return exactla::charpoly(to_int_matrix(graph::build_from_integer(n).graph.adjacency()), limits);
}

// Repeats the divisibility check on concrete integers n and n p q, with the
// vertices in the integer's own order rather than the canonical one.
std::optional<bool> spot_check(const DivisibilityReport& r, const exactla::Limits& limits) {
  constexpr std::uint64_t kMaxSpotVertices = 64;
  if (r.extended.divisor_count() > kMaxSpotVertices) return std::nullopt;
  const auto primes = arith::first_primes(r.base.length() + 2);
  std::uint64_t n = 0;
  try {
    n = arith::instantiate(r.base.parts(), std::span(primes).first(r.base.length()));
  } catch (const GuardError&) {
    return std::nullopt;
  }
  const std::uint64_t npq = n * primes[r.base.length()] * primes[r.base.length() + 1];
  const IntPolynomial f_n = integer_charpoly(n, limits);
  const IntPolynomial f_npq = integer_charpoly(npq, limits);
  const IntPolynomial divisor = r.squared ? f_n * f_n : f_n;
  return f_n == r.f_base && f_npq == r.f_extended && poly_divides(divisor, f_npq).divides;
}

DivisibilityReport divisibility(const FactorizationType& t, bool squared, const exactla::Limits& limits) {
  DivisibilityReport r;
  r.base = t;
  r.extended = t.with_parts({1, 1});
  r.squared = squared;
  r.f_base = charpoly_of_type(r.base, limits);
  r.f_extended = charpoly_of_type(r.extended, limits);
  auto division = poly_divides(squared ? r.f_base * r.f_base : r.f_base, r.f_extended);
  r.divides = division.divides;
  r.quotient = std::move(division.quotient);
  r.integer_spot_check = spot_check(r, limits);
  return r;
}

}  // namespace

DivisibilityReport verify_f_divides(const FactorizationType& t, const exactla::Limits& limits) {
  return divisibility(t, false, limits);
}

DivisibilityReport verify_f_squared_divides(const FactorizationType& t, const exactla::Limits& limits) {
  require(t.has_part_one(), "verify_f_squared_divides: type " + t.to_string() + " has no part equal to 1");
  return divisibility(t, true, limits);
}

std::vector<mpz_class> KernelWitness::canonical_vector() const {
  std::vector<mpz_class> out(vector.size());
  for (std::size_t k = 0; k < vector.size(); ++k) out[to_canonical[k]] = vector[k];
  return out;
}

bool verify_witness(const KernelWitness& w) {
  const auto g = graph::DivGraph::build(w.type);
  if (w.vector.size() != g.order() || w.to_canonical.size() != g.order()) return false;
  std::vector<bool> seen(g.order(), false);
  for (auto c : w.to_canonical) {
    if (c >= g.order() || seen[c]) return false;
    seen[c] = true;
  }
  const auto x = w.canonical_vector();
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) support.push_back(i);
  if (support.empty()) return false;
  // (A x)_i accumulated over the support only.
  mpz_class acc;
  for (std::size_t i = 0; i < g.order(); ++i) {
    acc = 0;
    for (auto j : support)
      if (g.adjacent(i, j)) acc += x[j];
    if (acc != w.eigenvalue * x[i]) return false;
  }
  return true;
}

KernelWitness mobius_eigenvector(std::uint64_t n) {
  require(n >= 1 && arith::mobius(n) == -1 && arith::big_omega(n) >= 2,
          "mobius_eigenvector: need squarefree n with mu(n) = -1 and Omega(n) >= 2");
  const auto ig = graph::build_from_integer(n);
  std::vector<std::size_t> order(ig.labels.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ig.labels[a] < ig.labels[b]; });

  KernelWitness w;
  w.eigenvalue = -2;
  w.type = arith::factorization_type(n);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::uint64_t d = ig.labels[order[k]];
    w.vector.emplace_back(d == 1 || d == n ? 0 : arith::mobius(d));
    w.to_canonical.push_back(ig.to_canonical[order[k]]);
    w.local_labels.push_back(std::to_string(d));
  }
  w.verified = verify_witness(w);
  return w;
}

KernelWitness minus_one_eigenvector(const FactorizationType& t) {
  require(!t.empty(), "minus_one_eigenvector: D_1 has a single vertex");
  const auto g = graph::DivGraph::build(t);
  KernelWitness w;
  w.eigenvalue = -1;
  w.type = t;
  w.vector.assign(g.order(), 0);
  w.vector[g.bottom()] = 1;
  w.vector[g.top()] = -1;
  w.to_canonical.resize(g.order());
  std::iota(w.to_canonical.begin(), w.to_canonical.end(), 0);
  w.verified = verify_witness(w);
  return w;
}

bool SpectrumReport::consistent() const {
  return std::all_of(consistency.begin(), consistency.end(), [](const auto& c) { return c.holds; });
}

SpectrumReport special_multiplicities(const FactorizationType& t, const std::vector<long>& lambdas,
                                      const SpectrumOptions& options) {
  const std::uint64_t v = t.divisor_count();
  guard(v <= options.max_vertices,
        "spectrum: " + std::to_string(v) + " vertices exceed the limit " + std::to_string(options.max_vertices));
  SpectrumReport r;
  r.type = t;
  const auto counts = graph::counts(t.parts());
  r.vertices = counts.vertices;
  r.edges = counts.edges;
  const IntMatrix a = adjacency_matrix(t);
  if (v <= options.determinant_max_vertices) r.determinant = exactla::determinant(a, options.limits);
  for (long lambda : lambdas)
    r.multiplicities[lambda] = exactla::nullity(shifted(a, lambda), options.nullity, options.limits);

  auto has = [&](long lambda) { return r.multiplicities.count(lambda) > 0; };
  auto m = [&](long lambda) { return r.multiplicity(lambda); };
  std::size_t total = 0;
  for (const auto& [lambda, cert] : r.multiplicities) {
    total += cert.nullity;
    r.consistency.push_back({"m_" + std::to_string(lambda) + " basis verified", cert.basis_verified});
  }
  r.consistency.push_back({"sum of multiplicities <= v", total <= v});
  const int mu = t.mobius();
  const unsigned big_omega = t.big_omega();
  if (v >= 2 && has(-1)) r.consistency.push_back({"m_-1 >= 1 since n >= 2", m(-1) >= 1});
  if (mu == -1 && big_omega >= 2) {
    if (has(-2)) r.consistency.push_back({"m_-2 >= 1 since mu(n) = -1 and Omega(n) >= 2", m(-2) >= 1});
    if (has(1)) r.consistency.push_back({"m_1 >= 1 since mu(n) = -1 and Omega(n) >= 2", m(1) >= 1});
  }
  if (mu == -1 && big_omega == 1 && has(1)) {
    // n prime: the Mobius vector vanishes, yet K2 still has eigenvalue 1.
    r.consistency.push_back({"m_1 = 1 for prime n (K2)", m(1) == 1});
  }
  if (mu == 1 && has(0)) r.consistency.push_back({"m_0 >= 1 since mu(n) = 1", m(0) >= 1});
  if (r.determinant && has(0)) r.consistency.push_back({"det = 0 iff m_0 >= 1", (*r.determinant == 0) == (m(0) >= 1)});
  return r;
}

std::vector<TableCell> multiplicity_table(const std::vector<std::pair<unsigned, long>>& cells,
                                          const SpectrumOptions& options) {
  std::vector<TableCell> out(cells.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(cells.size()); ++k) {
    try {
      const auto [omega, lambda] = cells[k];
      const auto t = FactorizationType::squarefree(omega);
      guard(t.divisor_count() <= options.max_vertices, "table: omega " + std::to_string(omega) + " exceeds the limit");
      TableCell cell;
      cell.omega = omega;
      cell.lambda = lambda;
      cell.certificate = exactla::nullity(shifted(adjacency_matrix(t), lambda), options.nullity, options.limits);
      cell.multiplicity = cell.certificate.nullity;
      out[k] = std::move(cell);
    } catch (...) {
#pragma omp critical(divgraph_table_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<TableCell> multiplicity_table(const std::vector<long>& lambdas, unsigned omega_min, unsigned omega_max,
                                          const SpectrumOptions& options) {
  std::vector<std::pair<unsigned, long>> cells;
  for (long lambda : lambdas)
    for (unsigned omega = omega_min; omega <= omega_max; ++omega) cells.emplace_back(omega, lambda);
  return multiplicity_table(cells, options);
}

bool OeisReport::all_hold() const {
  return std::all_of(observations.begin(), observations.end(), [](const auto& o) { return o.holds; });
}

mpz_class catalan(unsigned k) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), 2 * k, k);
  return c / (k + 1);
}

OeisReport oeis_pattern_checks(const std::vector<TableCell>& table) {
  std::map<std::pair<long, unsigned>, std::size_t> m;
  for (const auto& c : table) m[{c.lambda, c.omega}] = c.multiplicity;
  auto lookup = [&](long lambda, unsigned omega) -> std::optional<std::size_t> {
    auto it = m.find({lambda, omega});
    if (it == m.end()) return std::nullopt;
    return it->second;
  };
  unsigned max_omega = 0;
  for (const auto& c : table) max_omega = std::max(max_omega, c.omega);

  OeisReport report;
  auto record = [](PatternObservation& o, unsigned omega, bool ok) {
    o.omegas.push_back(omega);
    if (!ok && o.holds) {
      o.holds = false;
      o.first_mismatch = omega;
    }
  };

  {
    PatternObservation o;
    o.name = "m_-2 at odd omega: x_{k+1} = 4 x_k + 2 from 2";
    std::optional<mpz_class> expected;
    for (unsigned omega = 3; omega <= max_omega; omega += 2) {
      expected = expected ? 4 * *expected + 2 : mpz_class(2);
      if (auto value = lookup(-2, omega)) record(o, omega, *expected == *value);
      else break;
    }
    report.observations.push_back(std::move(o));
  }
  {
    PatternObservation o;
    o.name = "m_1 at omega = 2k + 1 is Catalan(k + 1)";
    for (unsigned omega = 3; omega <= max_omega; omega += 2)
      if (auto value = lookup(1, omega)) record(o, omega, catalan((omega - 1) / 2 + 1) == *value);
    report.observations.push_back(std::move(o));
  }
  {
    PatternObservation o;
    o.name = "m_0 at omega = 2k is Catalan(k)";
    for (unsigned omega = 2; omega <= max_omega; omega += 2)
      if (auto value = lookup(0, omega)) record(o, omega, catalan(omega / 2) == *value);
    report.observations.push_back(std::move(o));
  }
  // Sign patterns, squarefree n with omega >= 2, where mu(n) = (-1)^omega.
  const std::pair<long, const char*> signs[] = {{-2, "m_-2 >= 1 iff mu(n) = -1"},
                                                {1, "m_1 >= 1 iff mu(n) = -1"},
                                                {0, "m_0 >= 1 iff mu(n) = 1"}};
  for (const auto& [lambda, name] : signs) {
    PatternObservation o;
    o.name = name;
    for (unsigned omega = 2; omega <= max_omega; ++omega) {
      auto value = lookup(lambda, omega);
      if (!value) continue;
      const bool mu_negative = omega % 2 == 1;
      const bool predicted = lambda == 0 ? !mu_negative : mu_negative;
      record(o, omega, (*value >= 1) == predicted);
    }
    report.observations.push_back(std::move(o));
  }
  return report;
}

namespace {

// s(alpha) = sum over beta strictly below alpha, or strictly above when `up`.
std::vector<mpz_class> strict_sums(const std::vector<mpz_class>& f, unsigned bits, bool up) {
  std::vector<mpz_class> s = f;
  for (unsigned b = 0; b < bits; ++b) {
    const std::size_t mask = std::size_t{1} << b;
    for (std::size_t x = 0; x < s.size(); ++x) {
      if (up ? !(x & mask) : (x & mask)) s[x] += s[x ^ mask];
    }
  }
  for (std::size_t x = 0; x < s.size(); ++x) s[x] -= f[x];
  return s;
}

}  // namespace

bool satisfies_vm_constraints(unsigned m, const std::vector<mpz_class>& f) {
  const unsigned bits = 2 * m;
  require(f.size() == (std::size_t{1} << bits), "satisfies_vm_constraints: wrong length");
  for (bool up : {false, true}) {
    const auto s = strict_sums(f, bits, up);
    if (std::any_of(s.begin(), s.end(), [](const mpz_class& x) { return x != 0; })) return false;
  }
  return true;
}

VmSpace vm_space(unsigned m, const exactla::NullityOptions& options) {
  require(2 * m <= 12, "vm_space: 2m must be at most 12");
  const std::size_t n = std::size_t{1} << (2 * m);
  IntMatrix constraints(2 * n, n);
  for (std::size_t alpha = 0; alpha < n; ++alpha)
    for (std::size_t beta = 0; beta < n; ++beta) {
      if (beta == alpha) continue;
      if ((beta & alpha) == beta) constraints(alpha, beta) = 1;      // beta below alpha
      if ((beta & alpha) == alpha) constraints(n + alpha, beta) = 1;  // beta above alpha
    }
  exactla::NullityOptions opts = options;
  opts.keep_basis = true;
  const auto cert = exactla::nullity(constraints, opts);

  VmSpace space;
  space.m = m;
  space.dimension = cert.nullity;
  space.basis = cert.basis;
  // The canonical order of type 1^{2m} is the bit order used here.
  const auto g = graph::DivGraph::build(FactorizationType::squarefree(2 * m));
  space.in_nullspace = true;
  for (const auto& f : space.basis) {
    KernelWitness w{0, FactorizationType::squarefree(2 * m), f, {}, {}, false};
    w.to_canonical.resize(n);
    std::iota(w.to_canonical.begin(), w.to_canonical.end(), 0);
    if (!verify_witness(w)) space.in_nullspace = false;
  }
  space.nullspace_dimension = exactla::nullity(to_int_matrix(g.adjacency()), options).nullity;
  return space;
}

TensorInclusionReport vm_tensor_inclusion(unsigned m1, unsigned m2, const exactla::NullityOptions& options) {
  require(2 * (m1 + m2) <= 12, "vm_tensor_inclusion: 2(m1 + m2) must be at most 12");
  const VmSpace a = vm_space(m1, options);
  const VmSpace b = vm_space(m2, options);
  const std::size_t na = std::size_t{1} << (2 * m1);

  TensorInclusionReport r;
  r.m1 = m1;
  r.m2 = m2;
  r.all_included = true;
  std::vector<std::vector<mpq_class>> products;
  for (const auto& f : a.basis)
    for (const auto& g : b.basis) {
      std::vector<mpz_class> fg(na * g.size());
      for (std::size_t j = 0; j < g.size(); ++j)
        for (std::size_t i = 0; i < na; ++i) fg[i + na * j] = f[i] * g[j];
      ++r.pairs_checked;
      if (!satisfies_vm_constraints(m1 + m2, fg)) r.all_included = false;
      products.emplace_back(fg.begin(), fg.end());
    }
  r.tensor_rank = products.empty() ? 0 : exactla::rank_of(products);
  if (m1 + m2 <= 4) r.target_dimension = vm_space(m1 + m2, options).dimension;
  return r;
}

IntMatrix pq_power_matrix(unsigned a) {
  const std::size_t n = 2 * (a + 1);
  IntMatrix m(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      const std::size_t jx = x / (a + 1), ix = x % (a + 1), jy = y / (a + 1), iy = y % (a + 1);
      if ((jx <= jy && ix <= iy) || (jy <= jx && iy <= ix)) m(x, y) = 1;
    }
  return m;
}

IntMatrix reference_m5() {
  return IntMatrix(12, 12,
                   std::vector<std::int64_t>{
                       0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,  //
                       1, 0, 1, 1, 1, 1, 0, 1, 1, 1, 1, 1,  //
                       1, 1, 0, 1, 1, 1, 0, 0, 1, 1, 1, 1,  //
                       1, 1, 1, 0, 1, 1, 0, 0, 0, 1, 1, 1,  //
                       1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 1, 1,  //
                       1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 1,  //
                       1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1,  //
                       1, 1, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1,  //
                       1, 1, 1, 0, 0, 0, 1, 1, 0, 1, 1, 1,  //
                       1, 1, 1, 1, 0, 0, 1, 1, 1, 0, 1, 1,  //
                       1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0, 1,  //
                       1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0,
                   });
}

IntMatrix reference_m5_inverse() {
  return IntMatrix(12, 12,
                   std::vector<std::int64_t>{
                       -2, 1,  2,  1,  -1, -2, -2, -1, 1,  2,  1,  -1,  //
                       1,  -2, -1, 0,  1,  1,  2,  0,  -1, -1, 0,  1,   //
                       2,  -1, -4, -1, 2,  3,  3,  2,  -2, -3, -1, 2,   //
                       1,  0,  -1, -2, 1,  2,  1,  1,  0,  -2, -1, 1,   //
                       -1, 1,  2,  1,  -2, -1, -2, -1, 1,  2,  0,  -1,  //
                       -2, 1,  3,  2,  -1, -4, -3, -2, 1,  3,  2,  -2,  //
                       -2, 2,  3,  1,  -2, -3, -4, -1, 2,  3,  1,  -2,  //
                       -1, 0,  2,  1,  -1, -2, -1, -2, 1,  2,  1,  -1,  //
                       1,  -1, -2, 0,  1,  1,  2,  1,  -2, -1, 0,  1,   //
                       2,  -1, -3, -2, 2,  3,  3,  2,  -1, -4, -1, 2,   //
                       1,  0,  -1, -1, 0,  2,  1,  1,  0,  -1, -2, 1,   //
                       -1, 1,  2,  1,  -1, -2, -2, -1, 1,  2,  1,  -2,
                   });
}

DetSequenceReport det_sequence_pq_power(unsigned a_max) {
  require(a_max <= 60, "det_sequence_pq_power: a_max must be at most 60");
  DetSequenceReport r;
  for (unsigned a = 0; a <= a_max; ++a) r.determinants.push_back(exactla::determinant(pq_power_matrix(a)));

  const long base[] = {-1, 0, 3, 5, 4, 1};
  r.base_matches = true;
  for (std::size_t a = 0; a < std::min<std::size_t>(6, r.determinants.size()); ++a)
    if (r.determinants[a] != base[a]) r.base_matches = false;
  r.periodic = true;
  for (std::size_t a = 0; a + 6 < r.determinants.size(); ++a)
    if (r.determinants[a] != r.determinants[a + 6]) r.periodic = false;

  const IntMatrix m5 = reference_m5(), inv = reference_m5_inverse();
  r.m5_reproduced = pq_power_matrix(5) == m5;
  r.m5_inverse_checked = true;
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < 12; ++k) s += m5(i, k) * inv(k, j);
      if (s != (i == j ? 1 : 0)) r.m5_inverse_checked = false;
    }
  return r;
}

ZeroCriterion zero_iff_mod6(unsigned a, const exactla::NullityOptions& options) {
  require(a <= 40, "zero_iff_mod6: a must be at most 40");
  const FactorizationType t = a == 0 ? FactorizationType({1}) : FactorizationType({1, a});
  ZeroCriterion z;
  z.a = a;
  z.certificate = exactla::nullity(adjacency_matrix(t), options);
  z.has_zero = z.certificate.nullity >= 1;
  z.predicted = a % 6 == 1;
  return z;
}

std::vector<long> pq_block(const std::string& name, unsigned v) {
  require(v % 6 == 1, "pq_block: v must be 1 mod 6");
  struct Template {
    const char* name;
    long block[6];
    long tail[2];
  };
  static const Template kTemplates[] = {
      {"A", {0, 1, 1, 0, -1, -1}, {0, 1}},  {"A'", {-1, 0, 1, 1, 0, -1}, {-1, 0}},
      {"B", {-1, -1, 0, 1, 1, 0}, {-1, -1}}, {"B'", {0, -1, -1, 0, 1, 1}, {0, -1}},
      {"C", {1, 0, -1, -1, 0, 1}, {1, 0}},  {"C'", {1, 1, 0, -1, -1, 0}, {1, 1}},
  };
  for (const auto& t : kTemplates) {
    if (name != t.name) continue;
    std::vector<long> out;
    for (unsigned r = 0; r < (v - 1) / 6; ++r) out.insert(out.end(), std::begin(t.block), std::end(t.block));
    out.insert(out.end(), std::begin(t.tail), std::end(t.tail));
    return out;
  }
  throw PreconditionError("pq_block: unknown block " + name);
}

KernelWitness kernel_vector_two_prime_powers(unsigned u, unsigned v) {
  require(u >= 1 && v >= 1 && u % 6 == 1 && v % 6 == 1, "kernel_vector_two_prime_powers: need u = v = 1 mod 6");
  guard(static_cast<std::uint64_t>(u + 1) * (v + 1) <= 8192, "kernel_vector_two_prime_powers: more than 8192 vertices");

  static const char* kCycle[] = {"A", "A'", "B", "B'", "C", "C'"};
  std::vector<std::string> blocks;
  for (unsigned r = 0; r < (u - 1) / 6; ++r) blocks.insert(blocks.end(), std::begin(kCycle), std::end(kCycle));
  blocks.insert(blocks.end(), {"A", "A'"});

  KernelWitness w;
  w.eigenvalue = 0;
  w.type = FactorizationType({u, v});
  // Canonical coordinate 0 carries the smaller exponent.
  const bool q_first = v <= u;
  for (unsigned j = 0; j <= u; ++j) {
    const auto column = pq_block(blocks[j], v);
    for (unsigned i = 0; i <= v; ++i) {
      w.vector.emplace_back(column[i]);
      w.to_canonical.push_back(q_first ? i + (v + 1) * j : j + (u + 1) * i);
      w.local_labels.push_back("p^" + std::to_string(j) + " q^" + std::to_string(i));
    }
  }
  w.verified = verify_witness(w);
  return w;
}

bool SixCaseReport::ok() const {
  return s == -2 && std::all_of(identities.begin(), identities.end(), [](const auto& i) { return i.holds; });
}

SixCaseReport six_case_identities(unsigned v) {
  require(v % 6 == 1 && v <= 127, "six_case_identities: need v = 1 mod 6 and v <= 127");
  const std::size_t n = v + 1;
  using Vec = std::vector<long>;
  // U is upper triangular with ones on and above the diagonal; V = J - I.
  auto U = [&](const Vec& x) {
    Vec y(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) y[i] += x[j];
    return y;
  };
  auto Ut = [&](const Vec& x) {
    Vec y(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j) y[i] += x[j];
    return y;
  };
  auto V = [&](const Vec& x) {
    const long total = std::accumulate(x.begin(), x.end(), 0L);
    Vec y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = total - x[i];
    return y;
  };
  auto add = [&](const Vec& x, const Vec& y) {
    Vec z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = x[i] + y[i];
    return z;
  };
  auto constant = [&](const Vec& x, long c) { return std::all_of(x.begin(), x.end(), [c](long e) { return e == c; }); };

  const Vec A = pq_block("A", v), Ap = pq_block("A'", v), B = pq_block("B", v), Bp = pq_block("B'", v),
            C = pq_block("C", v), Cp = pq_block("C'", v);
  SixCaseReport r;
  r.v = v;
  r.s = std::accumulate(B.begin() + 1, B.end(), 0L) + std::accumulate(Bp.begin(), Bp.end(), 0L);
  r.identities = {
      {"A + A' + B + B' + C + C' = 0", constant(add(add(add(A, Ap), add(B, Bp)), add(C, Cp)), 0)},
      {"V A + U A' = 0", constant(add(V(A), U(Ap)), 0)},
      {"U^T A + V A' = 0", constant(add(Ut(A), V(Ap)), 0)},
      {"V B + U B' = s", constant(add(V(B), U(Bp)), r.s)},
      {"U^T B + V B' = s", constant(add(Ut(B), V(Bp)), r.s)},
      {"V A' + U B = -2", constant(add(V(Ap), U(B)), -2)},
      {"U^T A' + V B = -2", constant(add(Ut(Ap), V(B)), -2)},
      {"V B' + U C = 0", constant(add(V(Bp), U(C)), 0)},
      {"U^T B' + V C = 0", constant(add(Ut(Bp), V(C)), 0)},
      {"V C + U C' = 2", constant(add(V(C), U(Cp)), 2)},
      {"U^T C + V C' = 2", constant(add(Ut(C), V(Cp)), 2)},
  };
  return r;
}

}  // namespace divgraph::spectra
