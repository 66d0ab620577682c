#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace divgraph {

/// Square 0/1 matrix with bit-packed rows. Used for adjacency.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const { return n_; }

  bool test(std::size_t i, std::size_t j) const { return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u; }
  void set(std::size_t i, std::size_t j, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (j % 64);
    auto& w = bits_[i * words_ + j / 64];
    w = value ? (w | mask) : (w & ~mask);
  }
  void set_symmetric(std::size_t i, std::size_t j) {
    set(i, j);
    set(j, i);
  }

  std::span<const std::uint64_t> row(std::size_t i) const { return {bits_.data() + i * words_, words_}; }

  std::size_t row_count(std::size_t i) const {
    std::size_t c = 0;
    for (auto w : row(i)) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  std::size_t total_count() const {
    std::size_t c = 0;
    for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (test(i, j) != test(j, i)) return false;
    return true;
  }

  bool has_zero_diagonal() const {
    for (std::size_t i = 0; i < n_; ++i)
      if (test(i, i)) return false;
    return true;
  }

  /// Rows and columns reordered so that result(perm[i], perm[j]) = (*this)(i, j).
  BitMatrix permuted(std::span<const std::size_t> perm) const {
    BitMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (test(i, j)) out.set(perm[i], perm[j]);
    return out;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace divgraph
