#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "pfbwt/trigger.hpp"

namespace pfbwt {

/// Plain bit vector with constant-time rank and logarithmic select.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size);

  void set(std::size_t i) noexcept { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool get(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1u; }
  std::size_t size() const noexcept { return size_; }

  /// Call after the last set(); rank/select are undefined before.
  void build_rank();

  /// Number of set bits in [0, i).
  std::uint64_t rank1(std::size_t i) const noexcept;
  /// Position of the k-th set bit (0-based).
  std::size_t select1(std::uint64_t k) const noexcept;
  std::uint64_t ones() const noexcept { return cumulative_.empty() ? 0 : cumulative_.back(); }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
  std::vector<std::uint64_t> cumulative_;  // set bits before each word, plus total
};

/// Run-length encoded BWT. Run starts are marked in a bit vector, so
/// pos_to_run is a rank and run_to_pos a select.
class RleBwt {
 public:
  RleBwt() = default;
  explicit RleBwt(ByteView bwt);
  RleBwt(Bytes heads, std::vector<std::uint64_t> lengths);

  std::size_t runs() const noexcept { return heads_.size(); }
  std::uint64_t size() const noexcept { return size_; }
  const Bytes& heads() const noexcept { return heads_; }
  const std::vector<std::uint64_t>& lengths() const noexcept { return lengths_; }

  std::size_t pos_to_run(std::uint64_t i) const noexcept;
  std::uint64_t run_to_pos(std::size_t run) const noexcept;
  std::uint8_t at(std::uint64_t i) const noexcept { return heads_[pos_to_run(i)]; }

  /// Occurrences of c in bwt[0, i); requires i <= size().
  std::uint64_t rank(std::uint8_t c, std::uint64_t i) const noexcept;

 private:
  void build();

  std::uint64_t size_ = 0;
  Bytes heads_;
  std::vector<std::uint64_t> lengths_;
  BitVector starts_;
  // Per character: indices of its runs, and prefix sums of their lengths.
  std::array<std::vector<std::uint32_t>, 256> char_runs_;
  std::array<std::vector<std::uint64_t>, 256> char_cum_;
};

struct SaSample {
  std::uint64_t row;
  std::uint64_t sa;
  friend bool operator==(const SaSample&, const SaSample&) = default;
};

/// Counting-only run-length FM index over BWT(T$).
class RlfmIndex {
 public:
  /// Builds the C array and the run-length encoding with one scan.
  explicit RlfmIndex(ByteView bwt);
  explicit RlfmIndex(RleBwt rle);

  /// BWT length, i.e. |T| + 1.
  std::uint64_t size() const noexcept { return rle_.size(); }
  std::uint64_t text_length() const noexcept { return rle_.size() - 1; }
  std::size_t runs() const noexcept { return rle_.runs(); }
  const RleBwt& rle() const noexcept { return rle_; }

  /// C[c] = number of BWT characters strictly smaller than c; C[256] = size().
  const std::array<std::uint64_t, 257>& c_array() const noexcept { return c_; }
  /// Distinct characters of the BWT in increasing order.
  Bytes alphabet() const;

  /// Throws Error(PositionOutOfRange) if i > size().
  std::uint64_t rank(std::uint8_t c, std::uint64_t i) const;
  std::uint8_t at(std::uint64_t i) const;
  /// LF(i) = C[bwt[i]] + rank_{bwt[i]}(i). Throws for i >= size().
  std::uint64_t lf(std::uint64_t i) const;

  /// Backward search; 0 for patterns that do not occur.
  std::uint64_t count(std::string_view pattern) const;

 private:
  RleBwt rle_;
  std::array<std::uint64_t, 257> c_{};
};

/// Walks LF from the sentinel row (SA value n) through every row, recording
/// (row, SA) at the first and last position of each run. Sorted by row.
/// Throws Error(CycleError) if a row repeats before all n+1 rows are seen.
std::vector<SaSample> backstep_sa_sample(const RlfmIndex& ix);

}  // namespace pfbwt
