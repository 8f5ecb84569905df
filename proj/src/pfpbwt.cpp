#include "pfbwt/pfpbwt.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <thread>

#include "pfbwt/error.hpp"

namespace pfbwt {

ParseBwt bwt_of_parse(const PfpResult& res) {
  const std::size_t z = res.parse.size();
  if (z == 0) throw Error(Errc::MalformedParse, "parse is empty");
  std::vector<std::uint32_t> seq;
  seq.reserve(z + 1);
  for (std::uint32_t r : res.parse) seq.push_back(r + 1);
  seq.push_back(0);
  const std::vector<std::uint32_t> sa = suffix_array(seq);

  ParseBwt pb;
  pb.offsets.assign(res.dict.size() + 1, 0);
  for (std::uint32_t r : res.parse) ++pb.offsets[r + 1];
  for (std::size_t r = 0; r < res.dict.size(); ++r) pb.offsets[r + 1] += pb.offsets[r];

  std::vector<std::uint64_t> fill(pb.offsets.begin(), pb.offsets.end() - 1);
  pb.positions.resize(z);
  pb.wperm.resize(z);
  // Row 0 of sa is the terminator; parse BWT row j is sa row j + 1.
  for (std::size_t j = 0; j < z; ++j) {
    const std::size_t start = sa[j + 1];
    const std::uint32_t prev = res.parse[(start + z - 1) % z];
    pb.positions[fill[prev]++] = static_cast<std::uint32_t>(j);
    pb.wperm[j] = res.lastw[(start + 2 * z - 2) % z];
  }
  return pb;
}

namespace {

// Emits the BWT characters of one group into `out` (exactly g.frequency bytes).
void emit_group(const PfpResult& res, const ParseBwt& pb, const GsaLcpResult& gsa,
                const SuffixGroup& g, std::span<std::uint8_t> out) {
  struct Member {
    std::uint32_t phrase;
    std::uint32_t offset;
  };
  std::vector<Member> members;
  members.reserve(g.sa_end - g.sa_begin);
  bool full_phrase = false;
  bool single_char = true;
  for (std::uint32_t i = g.sa_begin; i < g.sa_end; ++i) {
    const std::uint32_t pos = gsa.sa[i];
    const Member m{gsa.phrase_of[pos], gsa.offset_of[pos]};
    full_phrase |= m.offset == 0;
    if (!members.empty() && m.offset > 0 && members.front().offset > 0) {
      single_char &= gsa.concat[pos - 1] == gsa.concat[gsa.sa[g.sa_begin] - 1];
    }
    members.push_back(m);
  }

  if (!full_phrase && single_char) {
    std::fill(out.begin(), out.end(), gsa.concat[gsa.sa[g.sa_begin] - 1]);
    return;
  }

  // Hard case: merge the inverted lists of all member phrases by parse-BWT
  // position; whole-phrase members read their character from wperm.
  struct Cursor {
    std::uint32_t position;
    std::uint32_t member;
    std::uint64_t next;  // index into pb.positions
    std::uint64_t end;
  };
  const auto later = [](const Cursor& a, const Cursor& b) { return a.position > b.position; };
  std::priority_queue<Cursor, std::vector<Cursor>, decltype(later)> heap(later);
  for (std::uint32_t k = 0; k < members.size(); ++k) {
    const std::uint32_t r = members[k].phrase;
    if (pb.offsets[r] < pb.offsets[r + 1]) {
      heap.push({pb.positions[pb.offsets[r]], k, pb.offsets[r] + 1, pb.offsets[r + 1]});
    }
  }
  std::size_t written = 0;
  const auto mismatch = [&] {
    return Error(Errc::LengthMismatch, "group " + std::to_string(g.rank) + " expects " +
                                           std::to_string(g.frequency) + " characters");
  };
  while (!heap.empty()) {
    Cursor c = heap.top();
    heap.pop();
    const Member& m = members[c.member];
    if (written == out.size()) throw mismatch();
    out[written++] = m.offset == 0 ? pb.wperm[c.position] : res.dict[m.phrase][m.offset - 1];
    if (c.next < c.end) {
      c.position = pb.positions[c.next++];
      heap.push(c);
    }
  }
  if (written != out.size()) throw mismatch();
}

}  // namespace

std::vector<SuffixGroup> partial_sums(const PfpResult& res, const GsaLcpResult& gsa) {
  std::vector<SuffixGroup> groups;
  const std::size_t n = gsa.sa.size();
  std::uint64_t sum = 0;
  std::size_t i = 0;
  while (i < n) {
    const std::uint32_t len = gsa.suffix_length(gsa.sa[i]);
    if (len <= res.w) {
      ++i;
      continue;
    }
    SuffixGroup g;
    g.rank = groups.size();
    g.length = len;
    g.sa_begin = static_cast<std::uint32_t>(i);
    g.partial_sum = sum;
    g.frequency = res.freq[gsa.phrase_of[gsa.sa[i]]];
    // Prefix-freeness: any following suffix sharing these len bytes equals it.
    std::size_t k = i + 1;
    while (k < n && gsa.lcp[k] >= len) {
      if (gsa.suffix_length(gsa.sa[k]) != len) {
        throw Error(Errc::LengthMismatch, "dictionary suffixes are not prefix-free");
      }
      g.frequency += res.freq[gsa.phrase_of[gsa.sa[k]]];
      ++k;
    }
    g.sa_end = static_cast<std::uint32_t>(k);
    sum += g.frequency;
    groups.push_back(g);
    i = k;
  }
  return groups;
}

Bytes merge_bwt(const PfpResult& res, const ParseBwt& pb, const GsaLcpResult& gsa,
                unsigned threads) {
  const std::vector<SuffixGroup> groups = partial_sums(res, gsa);
  const std::uint64_t expected = res.bwt_length();
  const std::uint64_t total = groups.empty() ? 0 : groups.back().partial_sum + groups.back().frequency;
  if (total != expected || pb.size() != res.parse.size()) {
    throw Error(Errc::LengthMismatch, "groups cover " + std::to_string(total) +
                                          " characters, expected " + std::to_string(expected));
  }

  Bytes out(total);
  const auto slot = [&out](const SuffixGroup& g) {
    return std::span<std::uint8_t>(out).subspan(g.partial_sum, g.frequency);
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(groups.size())));
  if (threads == 1) {
    for (const auto& g : groups) emit_group(res, pb, gsa, g, slot(g));
  } else {
    // Split at group boundaries so that each worker gets about total/threads bytes.
    std::vector<std::size_t> cuts{0};
    for (unsigned t = 1; t < threads; ++t) {
      const std::uint64_t target = total * t / threads;
      const auto it = std::lower_bound(groups.begin() + cuts.back(), groups.end(), target,
                                       [](const SuffixGroup& g, std::uint64_t v) { return g.partial_sum < v; });
      cuts.push_back(static_cast<std::size_t>(it - groups.begin()));
    }
    cuts.push_back(groups.size());
    std::vector<std::exception_ptr> errors(threads);
    {
      std::vector<std::jthread> workers;
      for (unsigned t = 0; t < threads; ++t) {
        workers.emplace_back([&, t] {
          try {
            for (std::size_t k = cuts[t]; k < cuts[t + 1]; ++k) {
              emit_group(res, pb, gsa, groups[k], slot(groups[k]));
            }
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  return out;
}

Bytes bwt_from_parse(const PfpResult& res, unsigned threads) {
  const ParseBwt pb = bwt_of_parse(res);
  const GsaLcpResult gsa = gsa_lcp(res.dict);
  return merge_bwt(res, pb, gsa, threads);
}

}  // namespace pfbwt
