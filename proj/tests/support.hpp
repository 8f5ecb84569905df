#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "pfbwt/parser.hpp"
#include "pfbwt/trigger.hpp"

namespace pfbwt::testing {

// '$' and '#' in worked-example strings stand for the sentinel byte.
inline Bytes bytes(std::string_view s) {
  Bytes out;
  for (char c : s) out.push_back(c == '$' || c == '#' ? kSentinel : static_cast<std::uint8_t>(c));
  return out;
}

inline std::string str(const Bytes& b) {
  std::string out;
  for (std::uint8_t c : b) out.push_back(c == kSentinel ? '$' : static_cast<char>(c));
  return out;
}

inline const std::string kExampleText = "GATTACAT!GATACAT!GATTAGATA";

inline WindowConfig example_config() { return WindowConfig::explicit_set(2, {"AC", "AG", "T!"}); }

inline Bytes text_bytes(std::string_view s) { return Bytes(s.begin(), s.end()); }

inline Bytes random_text(std::mt19937_64& rng, std::string_view alphabet, std::size_t n) {
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  Bytes out(n);
  for (auto& c : out) c = static_cast<std::uint8_t>(alphabet[pick(rng)]);
  return out;
}

/// Random text with repeated blocks, so that parses reuse phrases.
inline Bytes repetitive_text(std::mt19937_64& rng, std::string_view alphabet, std::size_t n) {
  const Bytes base = random_text(rng, alphabet, std::max<std::size_t>(1, n / 5 + 1));
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::bernoulli_distribution mutate(0.02);
  Bytes out;
  while (out.size() < n) {
    for (std::uint8_t c : base) {
      if (out.size() == n) break;
      out.push_back(mutate(rng) ? static_cast<std::uint8_t>(alphabet[pick(rng)]) : c);
    }
  }
  return out;
}

/// Either a HashMod rule or an explicit set drawn mostly from windows of `text`.
inline WindowConfig random_config(std::mt19937_64& rng, const Bytes& text, std::size_t w, bool explicit_mode,
                                  std::uint64_t p) {
  if (!explicit_mode) return WindowConfig::hash_mod(w, p);
  std::vector<std::string> triggers;
  if (text.size() >= w) {
    std::uniform_int_distribution<std::size_t> start(0, text.size() - w);
    std::uniform_int_distribution<int> how_many(0, 6);
    for (int k = how_many(rng); k > 0; --k) {
      const std::size_t s = start(rng);
      triggers.emplace_back(text.begin() + s, text.begin() + s + w);
    }
  }
  return WindowConfig::explicit_set(w, triggers);
}

inline const std::vector<std::string_view> kAlphabets = {"ab", "ACGT", "abcdefghijklmnopqrstuvwxyz"};

}  // namespace pfbwt::testing
