#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pfbwt/parser.hpp"
#include "pfbwt/sufsort.hpp"

namespace pfbwt {

/// BWT of the parse stored as inverted lists.
///
/// The parse BWT is cyclic: row j corresponds to the parse suffix starting at
/// SA[j] and holds P[SA[j]-1], with P[-1] = P[z-1]. `positions` is the plain
/// concatenation of the inverted lists in rank order; the list of rank r is
/// positions[offsets[r], offsets[r+1]). `wperm[j]` is the W byte of phrase
/// P[SA[j]-2] (again cyclic).
struct ParseBwt {
  std::vector<std::uint32_t> positions;
  std::vector<std::uint64_t> offsets;
  Bytes wperm;

  std::span<const std::uint32_t> ilist(std::uint32_t rank) const noexcept {
    return std::span(positions).subspan(offsets[rank], offsets[rank + 1] - offsets[rank]);
  }
  std::size_t size() const noexcept { return wperm.size(); }
};

ParseBwt bwt_of_parse(const PfpResult& res);

/// One row group of the sorted suffix set: a distinct dictionary suffix longer
/// than w together with every phrase it ends.
struct SuffixGroup {
  std::uint64_t rank = 0;          // lexicographic rank among distinct suffixes
  std::uint64_t frequency = 0;     // BWT characters mapped to this suffix
  std::uint64_t partial_sum = 0;   // BWT offset of the group's first character
  std::uint32_t length = 0;        // suffix length
  std::uint32_t sa_begin = 0;      // range in GsaLcpResult::sa
  std::uint32_t sa_end = 0;
};

/// Groups in lexicographic order with their BWT offsets.
std::vector<SuffixGroup> partial_sums(const PfpResult& res, const GsaLcpResult& gsa);

/// BWT(T$) from the dictionary, frequencies, inverted lists and W. With
/// threads > 1, disjoint group ranges are emitted concurrently into their
/// precomputed output regions; the result is identical to the serial run.
/// Throws Error(LengthMismatch) if the emitted length differs from n + 1.
Bytes merge_bwt(const PfpResult& res, const ParseBwt& pb, const GsaLcpResult& gsa,
                unsigned threads = 1);

/// parse -> BWT(T$), the whole second half of the pipeline.
Bytes bwt_from_parse(const PfpResult& res, unsigned threads = 1);

}  // namespace pfbwt
