#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace divgraph::acceptance {

/// Battery sizes. full() is the release gate; reduced() keeps the same checks
/// on smaller ranges for quick self-tests.
struct Scale {
  unsigned table_omega_max = 10;          // m_0 runs to this omega, the others to one less
  std::uint64_t divisibility_max_vertices = 80;
  unsigned det_a_max = 29;
  unsigned mod6_a_max = 25;
  std::vector<std::pair<unsigned, unsigned>> kernel_pairs{{1, 1}, {1, 7}, {7, 7}, {7, 13}, {13, 13}};
  std::vector<unsigned> six_case_v{1, 7, 13, 19};
  unsigned mobius_omega_max = 9;
  std::uint64_t minus_one_max_vertices = 1024;
  std::uint64_t planarity_max_vertices = 60;
  std::uint64_t structure_exact_max_vertices = 24;
  std::uint64_t structure_formula_max_vertices = 1000;
  unsigned lucas_k_max = 10;
  std::uint64_t spectral_max_vertices = 128;
  unsigned random_posets = 200;
  unsigned random_poset_max_size = 8;
  unsigned squared_posets = 50;
  unsigned squared_poset_max_size = 6;
  std::uint64_t seed = 0x5eed;

  static Scale full() { return {}; }
  static Scale reduced();
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

using Criterion = std::function<CriterionResult(const Scale&)>;

/// The eleven acceptance criteria in order.
std::vector<std::pair<std::string, Criterion>> criteria();

/// Runs every criterion, reporting each one through `on_result` as it finishes.
/// An exception inside a criterion counts as a failure with its message as detail.
std::vector<CriterionResult> run_all(const Scale& scale,
                                     const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  3 name (1.2s) detail"
std::string format(const CriterionResult& r);

}  // namespace divgraph::acceptance
