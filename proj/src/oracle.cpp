#include "pfbwt/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <numeric>

#include "pfbwt/error.hpp"

namespace pfbwt::oracle {

namespace {

template <class T>
std::vector<std::uint64_t> sort_suffixes(std::span<const T> s) {
  std::vector<std::uint64_t> sa(s.size());
  std::iota(sa.begin(), sa.end(), 0);
  std::sort(sa.begin(), sa.end(), [&](std::uint64_t a, std::uint64_t b) {
    return std::lexicographical_compare(s.begin() + a, s.end(), s.begin() + b, s.end());
  });
  return sa;
}

template <class T>
void require_terminator(std::span<const T> s) {
  if (s.empty()) throw Error(Errc::BadTerminator, "empty text");
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] <= s.back()) throw Error(Errc::BadTerminator, "terminator is not the unique minimum");
  }
}

}  // namespace

std::vector<std::uint64_t> naive_sa(ByteView text) { return sort_suffixes(text); }

std::vector<std::uint64_t> naive_sa(std::span<const std::uint32_t> seq) { return sort_suffixes(seq); }

Bytes naive_bwt(ByteView text) {
  require_terminator(text);
  const std::size_t n = text.size();
  Bytes bwt;
  bwt.reserve(n);
  for (std::uint64_t s : naive_sa(text)) bwt.push_back(text[(s + n - 1) % n]);
  return bwt;
}

Bytes inverse_bwt(ByteView bwt) {
  const std::size_t n = bwt.size();
  if (n == 0) return {};
  std::array<std::uint64_t, 257> first{};
  for (std::uint8_t c : bwt) ++first[c + 1];
  for (std::size_t c = 0; c < 256; ++c) first[c + 1] += first[c];
  std::vector<std::uint64_t> lf(n);
  std::array<std::uint64_t, 256> seen{};
  for (std::size_t i = 0; i < n; ++i) lf[i] = first[bwt[i]] + seen[bwt[i]]++;
  // Row 0 is the terminator suffix; walking LF spells the text backwards.
  Bytes text(n);
  std::uint64_t row = 0;
  for (std::size_t k = n; k-- > 0;) {
    text[(k + n - 1) % n] = bwt[row];
    row = lf[row];
  }
  return text;
}

std::uint64_t naive_count(ByteView text, std::string_view pattern) {
  if (pattern.empty() || pattern.size() > text.size()) return 0;
  std::uint64_t hits = 0;
  for (std::size_t i = 0; i + pattern.size() <= text.size(); ++i) {
    if (std::memcmp(text.data() + i, pattern.data(), pattern.size()) == 0) ++hits;
  }
  return hits;
}

}  // namespace pfbwt::oracle
