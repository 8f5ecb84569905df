#include "pfbwt/index.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "pfbwt/error.hpp"

namespace pfbwt {

BitVector::BitVector(std::size_t size) : size_(size), words_((size + 63) / 64 + 1, 0) {}

void BitVector::build_rank() {
  cumulative_.assign(words_.size() + 1, 0);
  for (std::size_t k = 0; k < words_.size(); ++k) {
    cumulative_[k + 1] = cumulative_[k] + static_cast<std::uint64_t>(std::popcount(words_[k]));
  }
}

std::uint64_t BitVector::rank1(std::size_t i) const noexcept {
  const std::size_t word = i / 64;
  const std::size_t bit = i % 64;
  std::uint64_t r = cumulative_[word];
  if (bit != 0) r += static_cast<std::uint64_t>(std::popcount(words_[word] & ((std::uint64_t{1} << bit) - 1)));
  return r;
}

std::size_t BitVector::select1(std::uint64_t k) const noexcept {
  // Last word whose preceding count is <= k.
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), k);
  const std::size_t word = static_cast<std::size_t>(it - cumulative_.begin()) - 1;
  std::uint64_t bits = words_[word];
  for (std::uint64_t skip = k - cumulative_[word]; skip > 0; --skip) bits &= bits - 1;
  return word * 64 + static_cast<std::size_t>(std::countr_zero(bits));
}

RleBwt::RleBwt(ByteView bwt) : size_(bwt.size()) {
  for (std::size_t i = 0; i < bwt.size(); ++i) {
    if (i == 0 || bwt[i] != bwt[i - 1]) {
      heads_.push_back(bwt[i]);
      lengths_.push_back(0);
    }
    ++lengths_.back();
  }
  build();
}

RleBwt::RleBwt(Bytes heads, std::vector<std::uint64_t> lengths)
    : heads_(std::move(heads)), lengths_(std::move(lengths)) {
  if (heads_.size() != lengths_.size()) {
    throw Error(Errc::MalformedParse, "run heads and run lengths differ in count");
  }
  for (std::size_t k = 0; k < heads_.size(); ++k) {
    if (lengths_[k] == 0) throw Error(Errc::MalformedParse, "zero-length run");
    if (k > 0 && heads_[k] == heads_[k - 1]) throw Error(Errc::MalformedParse, "adjacent runs share a head");
    size_ += lengths_[k];
  }
  build();
}

void RleBwt::build() {
  starts_ = BitVector(size_);
  std::uint64_t pos = 0;
  for (std::size_t k = 0; k < heads_.size(); ++k) {
    starts_.set(pos);
    const std::uint8_t c = heads_[k];
    if (char_cum_[c].empty()) char_cum_[c].push_back(0);
    char_runs_[c].push_back(static_cast<std::uint32_t>(k));
    char_cum_[c].push_back(char_cum_[c].back() + lengths_[k]);
    pos += lengths_[k];
  }
  starts_.build_rank();
}

std::size_t RleBwt::pos_to_run(std::uint64_t i) const noexcept {
  return static_cast<std::size_t>(starts_.rank1(i + 1) - 1);
}

std::uint64_t RleBwt::run_to_pos(std::size_t run) const noexcept { return starts_.select1(run); }

std::uint64_t RleBwt::rank(std::uint8_t c, std::uint64_t i) const noexcept {
  const auto& runs = char_runs_[c];
  if (runs.empty() || i == 0) return 0;
  if (i >= size_) return char_cum_[c].back();
  const std::size_t run = pos_to_run(i);
  const auto before = static_cast<std::size_t>(std::lower_bound(runs.begin(), runs.end(), run) - runs.begin());
  std::uint64_t r = char_cum_[c][before];
  if (heads_[run] == c) r += i - run_to_pos(run);
  return r;
}

RlfmIndex::RlfmIndex(ByteView bwt) : RlfmIndex(RleBwt(bwt)) {}

RlfmIndex::RlfmIndex(RleBwt rle) : rle_(std::move(rle)) {
  std::array<std::uint64_t, 256> counts{};
  for (std::size_t k = 0; k < rle_.runs(); ++k) counts[rle_.heads()[k]] += rle_.lengths()[k];
  c_[0] = 0;
  for (std::size_t c = 0; c < 256; ++c) c_[c + 1] = c_[c] + counts[c];
}

Bytes RlfmIndex::alphabet() const {
  Bytes out;
  for (std::size_t c = 0; c < 256; ++c) {
    if (c_[c + 1] > c_[c]) out.push_back(static_cast<std::uint8_t>(c));
  }
  return out;
}

std::uint64_t RlfmIndex::rank(std::uint8_t c, std::uint64_t i) const {
  if (i > size()) {
    throw Error(Errc::PositionOutOfRange, "rank position " + std::to_string(i) + " beyond " + std::to_string(size()));
  }
  return rle_.rank(c, i);
}

std::uint8_t RlfmIndex::at(std::uint64_t i) const {
  if (i >= size()) throw Error(Errc::PositionOutOfRange, "row " + std::to_string(i) + " out of range");
  return rle_.at(i);
}

std::uint64_t RlfmIndex::lf(std::uint64_t i) const {
  const std::uint8_t c = at(i);
  return c_[c] + rle_.rank(c, i);
}

std::uint64_t RlfmIndex::count(std::string_view pattern) const {
  std::uint64_t lo = 0;
  std::uint64_t hi = size();
  for (auto it = pattern.rbegin(); it != pattern.rend() && lo < hi; ++it) {
    const auto c = static_cast<std::uint8_t>(*it);
    lo = c_[c] + rle_.rank(c, lo);
    hi = c_[c] + rle_.rank(c, hi);
  }
  return hi > lo ? hi - lo : 0;
}

std::vector<SaSample> backstep_sa_sample(const RlfmIndex& ix) {
  const std::uint64_t rows = ix.size();
  const RleBwt& rle = ix.rle();
  std::vector<bool> seen(rows, false);
  std::vector<SaSample> samples;
  std::uint64_t row = 0;
  for (std::uint64_t step = 0; step < rows; ++step) {
    if (seen[row]) {
      throw Error(Errc::CycleError, "row " + std::to_string(row) + " revisited after " +
                                        std::to_string(step) + " of " + std::to_string(rows) + " steps");
    }
    seen[row] = true;
    const std::size_t run = rle.pos_to_run(row);
    const std::uint64_t first = rle.run_to_pos(run);
    if (row == first || row == first + rle.lengths()[run] - 1) {
      samples.push_back({row, rows - 1 - step});
    }
    row = ix.lf(row);
  }
  if (row != 0) throw Error(Errc::CycleError, "LF walk did not return to the sentinel row");
  std::sort(samples.begin(), samples.end(),
            [](const SaSample& a, const SaSample& b) { return a.row < b.row; });
  return samples;
}

}  // namespace pfbwt
