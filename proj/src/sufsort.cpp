#include "pfbwt/sufsort.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "pfbwt/error.hpp"
#include "pfbwt/parser.hpp"

namespace pfbwt {

namespace {

using Index = std::uint32_t;
constexpr Index kEmpty = std::numeric_limits<Index>::max();

class InducedSorter {
 public:
  InducedSorter(std::span<const Index> s, std::span<Index> sa, Index alphabet)
      : s_(s), sa_(sa), stype_(s.size()), bkt_(alphabet) {}

  void run() {
    const std::size_t n = s_.size();
    if (n == 1) {
      sa_[0] = 0;
      return;
    }
    classify();

    // Stage 1: sort LMS substrings.
    std::fill(sa_.begin(), sa_.end(), kEmpty);
    bucket_bounds(true);
    for (std::size_t i = 1; i < n; ++i) {
      if (is_lms(i)) sa_[--bkt_[s_[i]]] = static_cast<Index>(i);
    }
    induce();

    // Compact sorted LMS positions into sa[0, m).
    std::size_t m = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (is_lms(sa_[i])) sa_[m++] = sa_[i];
    }
    std::fill(sa_.begin() + m, sa_.end(), kEmpty);

    // Name LMS substrings; names stored at sa[m + pos / 2].
    Index names = 0;
    Index prev = kEmpty;
    for (std::size_t i = 0; i < m; ++i) {
      const Index pos = sa_[i];
      if (prev == kEmpty || !equal_lms(pos, prev)) {
        ++names;
        prev = pos;
      }
      sa_[m + pos / 2] = names - 1;
    }
    for (std::size_t i = n, j = n; i-- > m;) {
      if (sa_[i] != kEmpty) sa_[--j] = sa_[i];
    }

    // Stage 2: sort the reduced string, recursively if names collide.
    std::span<Index> reduced = sa_.subspan(n - m, m);
    std::span<Index> reduced_sa = sa_.subspan(0, m);
    if (names < m) {
      InducedSorter(std::span<const Index>(reduced.data(), m), reduced_sa, names).run();
    } else {
      for (std::size_t i = 0; i < m; ++i) reduced_sa[reduced[i]] = static_cast<Index>(i);
    }

    // Stage 3: induce the full order from the sorted LMS suffixes.
    for (std::size_t i = 1, j = 0; i < n; ++i) {
      if (is_lms(i)) reduced[j++] = static_cast<Index>(i);
    }
    for (std::size_t i = 0; i < m; ++i) reduced_sa[i] = reduced[reduced_sa[i]];
    std::fill(sa_.begin() + m, sa_.end(), kEmpty);
    bucket_bounds(true);
    for (std::size_t i = m; i-- > 0;) {
      const Index j = sa_[i];
      sa_[i] = kEmpty;
      sa_[--bkt_[s_[j]]] = j;
    }
    induce();
  }

 private:
  void classify() {
    const std::size_t n = s_.size();
    stype_[n - 1] = true;
    for (std::size_t i = n - 1; i-- > 0;) {
      stype_[i] = s_[i] < s_[i + 1] || (s_[i] == s_[i + 1] && stype_[i + 1]);
    }
  }

  bool is_lms(std::size_t i) const { return i != kEmpty && i > 0 && stype_[i] && !stype_[i - 1]; }

  bool equal_lms(Index a, Index b) const {
    for (std::size_t d = 0;; ++d) {
      if (s_[a + d] != s_[b + d] || stype_[a + d] != stype_[b + d]) return false;
      if (d > 0 && (is_lms(a + d) || is_lms(b + d))) return is_lms(a + d) && is_lms(b + d);
    }
  }

  void bucket_bounds(bool ends) {
    std::fill(bkt_.begin(), bkt_.end(), 0);
    for (Index c : s_) ++bkt_[c];
    Index sum = 0;
    for (auto& b : bkt_) {
      sum += b;
      b = ends ? sum : sum - b;
    }
  }

  void induce() {
    const std::size_t n = s_.size();
    bucket_bounds(false);
    for (std::size_t i = 0; i < n; ++i) {
      const Index j = sa_[i];
      if (j != kEmpty && j > 0 && !stype_[j - 1]) sa_[bkt_[s_[j - 1]]++] = j - 1;
    }
    bucket_bounds(true);
    for (std::size_t i = n; i-- > 0;) {
      const Index j = sa_[i];
      if (j != kEmpty && j > 0 && stype_[j - 1]) sa_[--bkt_[s_[j - 1]]] = j - 1;
    }
  }

  std::span<const Index> s_;
  std::span<Index> sa_;
  std::vector<bool> stype_;
  std::vector<Index> bkt_;
};

}  // namespace

std::vector<std::uint32_t> suffix_array(std::span<const std::uint32_t> seq) {
  if (seq.empty()) throw Error(Errc::BadTerminator, "empty sequence has no terminator");
  if (seq.size() >= kEmpty) throw Error(Errc::Overflow, "sequence too long for 32-bit suffix array");
  const Index term = seq.back();
  Index max_symbol = 0;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (seq[i] <= term) {
      throw Error(Errc::BadTerminator,
                  "last element is not the unique minimum (position " + std::to_string(i) + ")");
    }
    max_symbol = std::max(max_symbol, seq[i]);
  }
  max_symbol = std::max(max_symbol, term);
  if (max_symbol == kEmpty) throw Error(Errc::Overflow, "symbol value too large");
  std::vector<std::uint32_t> sa(seq.size());
  InducedSorter(seq, sa, max_symbol + 1).run();
  return sa;
}

std::size_t GsaLcpResult::phrase_length(std::uint32_t p) const noexcept {
  const std::size_t next = p + 1 < phrase_start.size() ? phrase_start[p + 1] : concat.size() - 1;
  return next - phrase_start[p] - 1;
}

bool GsaLcpResult::is_boundary(std::uint32_t pos) const noexcept {
  return concat[pos] == kPhraseSep || concat[pos] == kDictEnd;
}

std::uint32_t GsaLcpResult::suffix_length(std::uint32_t pos) const noexcept {
  if (is_boundary(pos)) return 0;
  return static_cast<std::uint32_t>(phrase_length(phrase_of[pos]) - offset_of[pos]);
}

GsaLcpResult gsa_lcp(std::span<const Bytes> dict) {
  if (dict.empty()) throw Error(Errc::MalformedParse, "dictionary is empty");
  GsaLcpResult out;
  std::size_t total = 1;
  for (const auto& d : dict) total += d.size() + 1;
  if (total >= kEmpty || dict.size() > kEmpty - 300) {
    throw Error(Errc::Overflow, "dictionary too large for 32-bit generalized suffix array");
  }

  // Integer encoding: terminator 0, separator of phrase i -> i + 1, byte b -> m + b.
  const auto m = static_cast<Index>(dict.size());
  std::vector<Index> seq;
  seq.reserve(total);
  out.concat.reserve(total);
  out.phrase_of.reserve(total);
  out.offset_of.reserve(total);
  out.phrase_start.reserve(dict.size());
  for (Index p = 0; p < m; ++p) {
    const Bytes& d = dict[p];
    out.phrase_start.push_back(static_cast<Index>(out.concat.size()));
    for (std::size_t k = 0; k <= d.size(); ++k) {
      const bool sep = k == d.size();
      const std::uint8_t c = sep ? kPhraseSep : d[k];
      if (!sep && c < kSentinel) {
        throw Error(Errc::MalformedParse, "phrase " + std::to_string(p) + " contains a reserved byte");
      }
      out.concat.push_back(c);
      seq.push_back(sep ? p + 1 : m + c);
      out.phrase_of.push_back(p);
      out.offset_of.push_back(static_cast<Index>(k));
    }
  }
  out.concat.push_back(kDictEnd);
  seq.push_back(0);
  out.phrase_of.push_back(m > 0 ? m - 1 : 0);
  out.offset_of.push_back(0);

  out.sa = suffix_array(seq);

  // Kasai et al. LCP; unique separators stop every match at phrase ends.
  const std::size_t n = seq.size();
  std::vector<Index> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[out.sa[i]] = static_cast<Index>(i);
  out.lcp.assign(n, 0);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = out.sa[rank[i] - 1];
    while (i + h < n && j + h < n && seq[i + h] == seq[j + h]) ++h;
    out.lcp[rank[i]] = static_cast<Index>(h);
    if (h > 0) --h;
  }
  return out;
}

}  // namespace pfbwt
