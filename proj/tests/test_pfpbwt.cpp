#include <doctest.h>

#include <algorithm>
#include <random>

#include "pfbwt/error.hpp"
#include "pfbwt/oracle.hpp"
#include "pfbwt/pfpbwt.hpp"
#include "support.hpp"

using namespace pfbwt;
using namespace pfbwt::testing;

namespace {

Bytes naive(const Bytes& text) {
  Bytes t = text;
  t.push_back(kSentinel);
  return oracle::naive_bwt(t);
}

std::vector<std::uint32_t> parse_bwt_sequence(const ParseBwt& pb) {
  std::vector<std::uint32_t> seq(pb.size());
  for (std::uint32_t r = 0; r + 1 < pb.offsets.size(); ++r) {
    for (std::uint32_t j : pb.ilist(r)) seq[j] = r;
  }
  return seq;
}

}  // namespace

TEST_CASE("parse BWT of the worked example") {
  const PfpResult res = parse_text(text_bytes(kExampleText), example_config());
  const ParseBwt pb = bwt_of_parse(res);
  CHECK(parse_bwt_sequence(pb) == std::vector<std::uint32_t>{2, 0, 3, 4, 1, 1});
  CHECK(std::vector<std::uint32_t>(pb.ilist(1).begin(), pb.ilist(1).end()) == std::vector<std::uint32_t>{4, 5});
  CHECK(std::vector<std::uint32_t>(pb.ilist(0).begin(), pb.ilist(0).end()) == std::vector<std::uint32_t>{1});
  CHECK(str(pb.wperm) == "TAAATT");
}

TEST_CASE("parse BWT of a single phrase") {
  const PfpResult res = parse_text(text_bytes("AAA"), WindowConfig::explicit_set(1, {}));
  const ParseBwt pb = bwt_of_parse(res);
  CHECK(parse_bwt_sequence(pb) == std::vector<std::uint32_t>{0});
  CHECK(pb.wperm == Bytes{res.lastw[0]});
}

TEST_CASE("parse BWT inverted lists match the cyclic brute-force definition") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 80; ++k) {
    const Bytes text = repetitive_text(rng, kAlphabets[k % 3], 1 + rng() % 1500);
    const PfpResult res = parse_text(text, WindowConfig::hash_mod(1 + k % 4, 1 + k % 7));
    const ParseBwt pb = bwt_of_parse(res);
    const std::size_t z = res.parse.size();

    std::vector<std::uint32_t> seq(res.parse.begin(), res.parse.end());
    for (auto& v : seq) ++v;
    seq.push_back(0);
    const auto sa = oracle::naive_sa(std::span<const std::uint32_t>(seq));
    std::vector<std::uint32_t> expected_bwt;
    Bytes expected_w;
    for (std::size_t j = 1; j <= z; ++j) {
      expected_bwt.push_back(res.parse[(sa[j] + z - 1) % z]);
      expected_w.push_back(res.lastw[(sa[j] + 2 * z - 2) % z]);
    }
    REQUIRE(parse_bwt_sequence(pb) == expected_bwt);
    REQUIRE(pb.wperm == expected_w);
    for (std::uint32_t r = 0; r < res.dict.size(); ++r) {
      const auto list = pb.ilist(r);
      REQUIRE(list.size() == res.freq[r]);
      REQUIRE(std::is_sorted(list.begin(), list.end()));
      REQUIRE(std::adjacent_find(list.begin(), list.end()) == list.end());
    }
  }
}

TEST_CASE("partial sums of the worked example") {
  const PfpResult res = parse_text(text_bytes(kExampleText), example_config());
  const auto groups = partial_sums(res, gsa_lcp(res.dict));
  REQUIRE(groups.size() == 23);
  CHECK(groups[0].frequency == 1);
  CHECK(groups[0].partial_sum == 0);
  CHECK(groups[4].frequency == 2);
  CHECK(groups[4].partial_sum == 4);
  CHECK(groups[19].frequency == 2);
  CHECK(groups[19].partial_sum == 22);
  CHECK(groups.back().partial_sum + groups.back().frequency == 27);
}

TEST_CASE("merge of the worked example") {
  const PfpResult res = parse_text(text_bytes(kExampleText), example_config());
  const ParseBwt pb = bwt_of_parse(res);
  const GsaLcpResult gsa = gsa_lcp(res.dict);
  const Bytes bwt = merge_bwt(res, pb, gsa);
  CHECK(str(bwt) == "ATTTTTTCCGGGGAAA!$!AAATATAA");
  CHECK(bwt[17] == kSentinel);
  // TAC: T from phrase 0 precedes A from phrase 3.
  CHECK(str(Bytes(bwt.begin() + 22, bwt.begin() + 24)) == "TA");
  // ACAT! is a whole phrase: both characters come from W.
  CHECK(str(Bytes(bwt.begin() + 4, bwt.begin() + 6)) == "TT");
  CHECK(merge_bwt(res, pb, gsa, 4) == bwt);
}

TEST_CASE("merge detects inconsistent inputs") {
  const PfpResult res = parse_text(text_bytes(kExampleText), example_config());
  PfpResult tampered = res;
  tampered.freq[1] = 3;
  try {
    (void)merge_bwt(tampered, bwt_of_parse(res), gsa_lcp(res.dict));
    FAIL("expected LengthMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LengthMismatch);
  }
}

TEST_CASE("merge equals the brute-force BWT on random inputs") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 150; ++k) {
    const auto alphabet = kAlphabets[k % 3];
    const std::size_t n = 1 + rng() % 2500;
    const Bytes text = k % 2 ? repetitive_text(rng, alphabet, n) : random_text(rng, alphabet, n);
    const std::size_t w = std::vector<std::size_t>{1, 2, 3, 4, 8}[k % 5];
    const WindowConfig cfg = random_config(rng, text, w, k % 3 == 0, std::vector<std::uint64_t>{1, 2, 5, 20, 50}[rng() % 5]);
    const PfpResult res = parse_text(text, cfg);
    const ParseBwt pb = bwt_of_parse(res);
    const GsaLcpResult gsa = gsa_lcp(res.dict);
    const Bytes bwt = merge_bwt(res, pb, gsa);
    REQUIRE(bwt == naive(text));
    REQUIRE(std::count(bwt.begin(), bwt.end(), kSentinel) == 1);
    for (unsigned threads : {2u, 3u, 8u}) REQUIRE(merge_bwt(res, pb, gsa, threads) == bwt);

    // Groups tile the output without gaps.
    std::uint64_t expect = 0;
    for (const auto& g : partial_sums(res, gsa)) {
      REQUIRE(g.partial_sum == expect);
      REQUIRE(g.frequency > 0);
      expect += g.frequency;
    }
    REQUIRE(expect == text.size() + 1);
  }
}

TEST_CASE("extreme byte values") {
  Bytes text;
  for (int k = 0; k < 300; ++k) text.push_back(k % 3 == 0 ? 0x03 : (k % 5 == 0 ? 0xff : 0x80));
  for (std::size_t w : {1u, 2u, 5u}) {
    const PfpResult res = parse_text(text, WindowConfig::hash_mod(w, 3));
    REQUIRE(bwt_from_parse(res) == naive(text));
  }
}
