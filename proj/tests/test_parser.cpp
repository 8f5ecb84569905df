#include <doctest.h>

#include <random>
#include <set>

#include "pfbwt/error.hpp"
#include "pfbwt/parser.hpp"
#include "support.hpp"

using namespace pfbwt;
using namespace pfbwt::testing;

namespace {

Errc error_code(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no pfbwt::Error thrown");
  return Errc::Io;
}

// Trigger windows lying entirely inside the text part of a phrase.
std::vector<std::size_t> internal_trigger_ends(const Bytes& phrase, const WindowConfig& cfg) {
  std::vector<std::size_t> ends;
  RollingWindow win(cfg.w);
  for (std::size_t i = 0; i < phrase.size(); ++i) {
    if (phrase[i] == kSentinel) {
      win.reset();
      continue;
    }
    win.roll(phrase[i]);
    if (win.full() && is_trigger(cfg, win)) ends.push_back(i);
  }
  return ends;
}

}  // namespace

TEST_CASE("worked example parse") {
  const PfpResult res = parse_text(text_bytes(kExampleText), example_config());
  std::vector<std::string> dict;
  for (const auto& d : res.dict) dict.push_back(str(d));
  CHECK(dict == std::vector<std::string>{"$GATTAC", "ACAT!", "AGATA$$", "T!GATAC", "T!GATTAG"});
  CHECK(res.parse == std::vector<std::uint32_t>{0, 1, 3, 1, 4, 2});
  CHECK(res.freq == std::vector<std::uint32_t>{1, 2, 1, 1, 1});
  CHECK(str(res.lastw) == "TATATA");
  CHECK(res.w == 2);
  CHECK(res.bwt_length() == kExampleText.size() + 1);
  CHECK_NOTHROW(check_invariants(res));
  CHECK(str(reconstruct_text(res, 2)) == kExampleText);
}

TEST_CASE("no trigger gives a single phrase") {
  const PfpResult res = parse_text(text_bytes("AAA"), WindowConfig::explicit_set(1, {}));
  REQUIRE(res.dict.size() == 1);
  CHECK(str(res.dict[0]) == "$AAA$");
  CHECK(res.parse == std::vector<std::uint32_t>{0});
  CHECK(res.freq == std::vector<std::uint32_t>{1});
  CHECK(str(reconstruct_text(res, 1)) == "AAA");
}

TEST_CASE("text shorter than the window") {
  const PfpResult res = parse_text(text_bytes("AB"), WindowConfig::hash_mod(5, 1));
  REQUIRE(res.dict.size() == 1);
  CHECK(str(res.dict[0]) == "$AB$$$$$");
  CHECK(res.bwt_length() == 3);
}

TEST_CASE("trigger at the very first window") {
  const PfpResult res = parse_text(text_bytes("ACGGG"), WindowConfig::explicit_set(2, {"AC"}));
  std::vector<std::string> dict;
  for (const auto& d : res.dict) dict.push_back(str(d));
  CHECK(dict == std::vector<std::string>{"$AC", "ACGGG$$"});
  CHECK(res.parse == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("final w text bytes forming a trigger start the last phrase") {
  const PfpResult res = parse_text(text_bytes("GGAC"), WindowConfig::explicit_set(2, {"AC"}));
  std::vector<std::string> dict;
  for (const auto& d : res.dict) dict.push_back(str(d));
  CHECK(dict == std::vector<std::string>{"$GGAC", "AC$$"});
  CHECK(res.parse == std::vector<std::uint32_t>{0, 1});
  CHECK(str(reconstruct_text(res, 2)) == "GGAC");
}

TEST_CASE("every window a trigger") {
  const PfpResult res = parse_text(text_bytes("abab"), WindowConfig::hash_mod(1, 1));
  std::vector<std::string> dict;
  for (const auto& d : res.dict) dict.push_back(str(d));
  // Phrases $a, ab, ba, ab, b$ ; sorted and deduplicated.
  CHECK(dict == std::vector<std::string>{"$a", "ab", "b$", "ba"});
  CHECK(res.parse == std::vector<std::uint32_t>{0, 1, 3, 1, 2});
  CHECK(res.freq == std::vector<std::uint32_t>{1, 2, 1, 1});
}

TEST_CASE("input validation") {
  const WindowConfig cfg = WindowConfig::hash_mod(2, 3);
  CHECK(error_code([&] { parse_text(Bytes{}, cfg); }) == Errc::EmptyInput);
  CHECK(error_code([&] { parse_text(Bytes{'a', 0x02, 'b'}, cfg); }) == Errc::InputAlphabet);
  CHECK(error_code([&] { parse_text(Bytes{0x00}, cfg); }) == Errc::InputAlphabet);
  CHECK(error_code([&] { parse_chunked(Bytes{'a', 0x01}, cfg, 2); }) == Errc::InputAlphabet);
  CHECK_NOTHROW(parse_text(Bytes{0x03, 0xff}, cfg));
}

TEST_CASE("fingerprint collisions abort") {
  PhraseDictionary dict([](ByteView) -> std::uint64_t { return 42; });
  CHECK(dict.insert_or_get(bytes("ABC")) == 0);
  CHECK(dict.insert_or_get(bytes("ABC")) == 0);
  CHECK(error_code([&] { dict.insert_or_get(bytes("ABD")); }) == Errc::FingerprintCollision);

  PhraseDictionary real;
  CHECK(real.insert_or_get(bytes("ABC")) == 0);
  CHECK(real.insert_or_get(bytes("ABD")) == 1);
  CHECK(real.insert_or_get(bytes("ABC")) == 0);
  CHECK(real.size() == 2);
}

TEST_CASE("reconstruct_text rejects inconsistent parses") {
  PfpResult res = parse_text(text_bytes(kExampleText), example_config());
  PfpResult swapped = res;
  std::swap(swapped.parse[1], swapped.parse[2]);
  CHECK(error_code([&] { reconstruct_text(swapped, 2); }) == Errc::MalformedParse);

  PfpResult out_of_range = res;
  out_of_range.parse[0] = 9;
  CHECK(error_code([&] { reconstruct_text(out_of_range, 2); }) == Errc::MalformedParse);
  CHECK(error_code([&] { check_invariants(out_of_range); }) == Errc::MalformedParse);

  PfpResult bad_freq = res;
  bad_freq.freq[1] = 1;
  CHECK(error_code([&] { check_invariants(bad_freq); }) == Errc::MalformedParse);
}

TEST_CASE("round trip and invariants on random texts") {
  std::mt19937_64 rng(101);
  for (int k = 0; k < 200; ++k) {
    const auto alphabet = kAlphabets[k % kAlphabets.size()];
    const std::size_t n = 1 + rng() % 800;
    const Bytes text = k % 2 ? repetitive_text(rng, alphabet, n) : random_text(rng, alphabet, n);
    const std::size_t w = std::vector<std::size_t>{1, 2, 3, 4, 8}[k % 5];
    const WindowConfig cfg = random_config(rng, text, w, k % 3 == 0, std::vector<std::uint64_t>{1, 2, 5, 20, 50}[rng() % 5]);
    const PfpResult res = parse_text(text, cfg);
    REQUIRE_NOTHROW(check_invariants(res));
    REQUIRE(reconstruct_text(res, w) == text);
    REQUIRE(res.bwt_length() == text.size() + 1);

    // Each phrase holds trigger windows only at its two ends.
    for (const auto& d : res.dict) {
      for (std::size_t e : internal_trigger_ends(d, cfg)) {
        const bool at_start = e + 1 == w;
        const bool at_end = e + 1 == d.size();
        REQUIRE((at_start || at_end));
      }
    }
  }
}

TEST_CASE("prefix-free and unique-prefix properties by brute force") {
  std::mt19937_64 rng(202);
  for (int k = 0; k < 60; ++k) {
    const auto alphabet = kAlphabets[k % kAlphabets.size()];
    const Bytes text = repetitive_text(rng, alphabet, 1 + rng() % 200);
    const std::size_t w = 1 + rng() % 4;
    const WindowConfig cfg = random_config(rng, text, w, k % 2 == 0, 1 + rng() % 5);
    const PfpResult res = parse_text(text, cfg);

    std::set<Bytes> suffixes;
    for (const auto& d : res.dict) {
      for (std::size_t off = 0; off + w < d.size(); ++off) suffixes.emplace(d.begin() + off, d.end());
    }
    for (const auto& a : suffixes) {
      for (const auto& b : suffixes) {
        if (a.size() < b.size()) REQUIRE_FALSE(std::equal(a.begin(), a.end(), b.begin()));
      }
    }

    Bytes padded{kSentinel};
    padded.insert(padded.end(), text.begin(), text.end());
    padded.insert(padded.end(), w, kSentinel);
    for (std::size_t x = 0; x + w < padded.size(); ++x) {
      int matches = 0;
      for (const auto& s : suffixes) {
        if (s.size() <= padded.size() - x && std::equal(s.begin(), s.end(), padded.begin() + x)) ++matches;
      }
      REQUIRE(matches == 1);
    }
  }
}

TEST_CASE("chunked parsing is identical to single-threaded parsing") {
  const PfpResult ref = parse_text(text_bytes(kExampleText), example_config());
  CHECK(parse_chunked(text_bytes(kExampleText), example_config(), 1) == ref);
  CHECK(parse_chunked(text_bytes(kExampleText), example_config(), 3) == ref);
  CHECK(parse_chunked(text_bytes(kExampleText), example_config(), 40) == ref);

  std::mt19937_64 rng(303);
  for (int k = 0; k < 100; ++k) {
    const auto alphabet = kAlphabets[k % kAlphabets.size()];
    const Bytes text = repetitive_text(rng, alphabet, 1 + rng() % 3000);
    const std::size_t w = std::vector<std::size_t>{1, 2, 3, 4, 8}[k % 5];
    const WindowConfig cfg = random_config(rng, text, w, k % 4 == 0, std::vector<std::uint64_t>{1, 2, 5, 20, 50}[k % 5]);
    const PfpResult single = parse_text(text, cfg);
    for (std::size_t chunks : {2u, 4u, 8u}) REQUIRE(parse_chunked(text, cfg, chunks) == single);
  }
}
