#include <doctest.h>

#include <algorithm>
#include <random>

#include "pfbwt/error.hpp"
#include "pfbwt/oracle.hpp"
#include "support.hpp"

using namespace pfbwt;
using namespace pfbwt::testing;

TEST_CASE("naive BWT of the worked example") {
  CHECK(str(oracle::naive_bwt(bytes(kExampleText + "$"))) == "ATTTTTTCCGGGGAAA!$!AAATATAA");
  CHECK(str(oracle::naive_bwt(bytes("AAA$"))) == "AAA$");
  CHECK_THROWS_AS(oracle::naive_bwt(bytes("AB")), Error);
  CHECK_THROWS_AS(oracle::naive_bwt(Bytes{}), Error);
}

TEST_CASE("naive BWT is a permutation and inverts") {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 100; ++k) {
    Bytes text = random_text(rng, kAlphabets[k % 3], 1 + rng() % 300);
    text.push_back(kSentinel);
    Bytes bwt = oracle::naive_bwt(text);
    REQUIRE(oracle::inverse_bwt(bwt) == text);
    std::sort(bwt.begin(), bwt.end());
    std::sort(text.begin(), text.end());
    REQUIRE(bwt == text);
  }
}

TEST_CASE("naive count") {
  CHECK(oracle::naive_count(text_bytes(kExampleText), "GAT") == 4);
  CHECK(oracle::naive_count(text_bytes(kExampleText), "") == 0);
  CHECK(oracle::naive_count(text_bytes("AAAA"), "AA") == 3);
  CHECK(oracle::naive_count(text_bytes("A"), "AA") == 0);
}
