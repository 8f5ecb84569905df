#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pfbwt/trigger.hpp"

namespace pfbwt {

/// Suffix array of `seq` by induced sorting (SA-IS), linear time.
///
/// The last element must be the unique minimum of the sequence; otherwise
/// Error(BadTerminator) is thrown. Symbols may be any value below 2^32 - 1.
std::vector<std::uint32_t> suffix_array(std::span<const std::uint32_t> seq);

/// Generalized suffix array and LCP array over a set of dictionary phrases.
///
/// `concat` is d_0 0x01 d_1 0x01 ... d_{m-1} 0x01 0x00. Every separator is
/// ranked as a distinct symbol (separator of phrase i sorts before that of
/// phrase j when i < j, and all sort below the phrase bytes), so common
/// prefixes never extend across a separator.
struct GsaLcpResult {
  Bytes concat;
  std::vector<std::uint32_t> sa;
  std::vector<std::uint32_t> lcp;        // lcp[0] == 0
  std::vector<std::uint32_t> phrase_of;  // per concat position
  std::vector<std::uint32_t> offset_of;  // per concat position; == |phrase| at its separator
  std::vector<std::uint32_t> phrase_start;

  std::size_t phrase_count() const noexcept { return phrase_start.size(); }
  std::size_t phrase_length(std::uint32_t p) const noexcept;

  /// True when the suffix at concat position `pos` begins with a separator
  /// or the final terminator.
  bool is_boundary(std::uint32_t pos) const noexcept;

  /// Length of the phrase suffix starting at `pos` (0 at boundaries).
  std::uint32_t suffix_length(std::uint32_t pos) const noexcept;
};

GsaLcpResult gsa_lcp(std::span<const Bytes> dict);

}  // namespace pfbwt
