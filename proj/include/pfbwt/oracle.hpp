#pragma once

// Brute-force reference implementations. Quadratic or worse; meant for
// checking the production paths on small inputs only.

#include <cstdint>
#include <string_view>
#include <vector>

#include "pfbwt/trigger.hpp"

namespace pfbwt::oracle {

/// Suffix array by direct comparison sort of all suffixes.
std::vector<std::uint64_t> naive_sa(ByteView text);
std::vector<std::uint64_t> naive_sa(std::span<const std::uint32_t> seq);

/// bwt[i] = text[(sa[i] - 1) mod L]. `text` must end with its unique smallest
/// byte, otherwise Error(BadTerminator).
Bytes naive_bwt(ByteView text);

/// Inverts a BWT whose terminator is its unique smallest byte.
Bytes inverse_bwt(ByteView bwt);

/// Overlapping occurrences of `pattern` in `text`; 0 for an empty pattern.
std::uint64_t naive_count(ByteView text, std::string_view pattern);

}  // namespace pfbwt::oracle
