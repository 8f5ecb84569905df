#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "pfbwt/trigger.hpp"

namespace pfbwt {

// Reserved byte values. Input text must consist of bytes >= kMinTextByte.
inline constexpr std::uint8_t kDictEnd = 0x00;
inline constexpr std::uint8_t kPhraseSep = 0x01;
inline constexpr std::uint8_t kSentinel = 0x02;
inline constexpr std::uint8_t kMinTextByte = 0x03;

/// Prefix-free parse of sentinel . T . sentinel^w.
///
/// `dict` holds the distinct phrases in strictly increasing lexicographic
/// order; `parse` lists the phrases of the text by 0-based rank; consecutive
/// phrases overlap by exactly w bytes. `lastw[j]` is the byte of phrase
/// `parse[j]` at position w+1 from its end.
struct PfpResult {
  std::size_t w = 0;
  std::vector<Bytes> dict;
  std::vector<std::uint32_t> freq;
  std::vector<std::uint32_t> parse;
  Bytes lastw;

  /// n + 1, computed as sum of freq(d) * (|d| - w).
  std::uint64_t bwt_length() const noexcept;
  std::uint64_t text_length() const noexcept { return bwt_length() - 1; }
  /// Total number of phrase bytes in the dictionary.
  std::uint64_t dict_bytes() const noexcept;

  friend bool operator==(const PfpResult&, const PfpResult&) = default;
};

/// Throws Error(EmptyInput / InputAlphabet) if the text cannot be parsed.
void validate_text(ByteView text);

PfpResult parse_text(ByteView text, const WindowConfig& cfg);

/// Same result as parse_text; the text is split into `chunks` ranges scanned
/// by separate threads that share one dictionary.
PfpResult parse_chunked(ByteView text, const WindowConfig& cfg, std::size_t chunks);

/// Inverse of parse_text. Throws Error(MalformedParse) if overlaps or sentinels
/// are inconsistent.
Bytes reconstruct_text(const PfpResult& res, std::size_t w);

/// Throws Error(MalformedParse) unless every PfpResult invariant holds.
void check_invariants(const PfpResult& res);

/// Insert-or-get map from phrase contents to a provisional id, keyed by the
/// identity fingerprint. Equal fingerprints are verified byte for byte and a
/// mismatch raises Error(FingerprintCollision). Thread safe.
class PhraseDictionary {
 public:
  using Hasher = std::function<std::uint64_t(ByteView)>;

  PhraseDictionary();
  explicit PhraseDictionary(Hasher hasher);

  std::uint32_t insert_or_get(Bytes phrase);
  std::size_t size() const;

  /// Phrases in id order. Call only after all inserts have finished.
  std::vector<Bytes> take_phrases() && { return std::move(phrases_); }

 private:
  Hasher hasher_;
  mutable std::mutex mu_;
  std::unordered_map<std::uint64_t, std::uint32_t> ids_;
  std::vector<Bytes> phrases_;
};

namespace detail {

/// Phrase-end positions: text indices i (i >= w-1) such that the window
/// text[i-w+1..i] is a trigger, restricted to from <= i < to.
std::vector<std::size_t> find_triggers(ByteView text, const WindowConfig& cfg, std::size_t from,
                                       std::size_t to);

/// Sorts the dictionary, rewrites provisional ids as ranks and fills freq/lastw.
PfpResult finalize(std::vector<Bytes> phrases, const std::vector<std::uint32_t>& ids,
                   std::size_t w);

}  // namespace detail

}  // namespace pfbwt
