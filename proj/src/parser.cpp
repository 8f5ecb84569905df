#include "pfbwt/parser.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

#include "pfbwt/error.hpp"

namespace pfbwt {

namespace {

constexpr std::uint64_t kMaxCount = std::numeric_limits<std::uint32_t>::max();

// Bytes [from, to) of sentinel . text . sentinel^w.
Bytes padded_slice(ByteView text, std::size_t from, std::size_t to) {
  Bytes out;
  out.reserve(to - from);
  for (std::size_t q = from; q < to; ++q) {
    if (q == 0 || q > text.size()) {
      out.push_back(kSentinel);
    } else {
      out.push_back(text[q - 1]);
    }
  }
  return out;
}

// A trigger window ending at text index i closes the phrase at padded index
// i + 2 (exclusive); the next phrase starts w bytes earlier.
std::size_t phrase_end(std::size_t trigger) { return trigger + 2; }
std::size_t next_start(std::size_t trigger, std::size_t w) { return trigger + 2 - w; }

}  // namespace

std::uint64_t PfpResult::bwt_length() const noexcept {
  std::uint64_t total = 0;
  for (std::size_t r = 0; r < dict.size(); ++r) {
    total += static_cast<std::uint64_t>(freq[r]) * (dict[r].size() - w);
  }
  return total;
}

std::uint64_t PfpResult::dict_bytes() const noexcept {
  std::uint64_t total = 0;
  for (const auto& d : dict) total += d.size();
  return total;
}

void validate_text(ByteView text) {
  if (text.empty()) throw Error(Errc::EmptyInput, "input text is empty");
  const auto bad = std::find_if(text.begin(), text.end(), [](std::uint8_t c) { return c < kMinTextByte; });
  if (bad != text.end()) {
    throw Error(Errc::InputAlphabet, "byte " + std::to_string(*bad) + " at offset " +
                                         std::to_string(bad - text.begin()) +
                                         " is reserved (values 0..2)");
  }
}

PhraseDictionary::PhraseDictionary() : PhraseDictionary(identity_hash) {}

PhraseDictionary::PhraseDictionary(Hasher hasher) : hasher_(std::move(hasher)) {}

std::uint32_t PhraseDictionary::insert_or_get(Bytes phrase) {
  const std::uint64_t fp = hasher_(phrase);
  std::lock_guard lock(mu_);
  auto [it, inserted] = ids_.try_emplace(fp, static_cast<std::uint32_t>(phrases_.size()));
  if (!inserted) {
    if (phrases_[it->second] != phrase) {
      throw Error(Errc::FingerprintCollision,
                  "two distinct phrases share fingerprint " + std::to_string(fp));
    }
    return it->second;
  }
  if (phrases_.size() >= kMaxCount - 1) {
    throw Error(Errc::Overflow, "dictionary holds too many distinct phrases");
  }
  phrases_.push_back(std::move(phrase));
  return it->second;
}

std::size_t PhraseDictionary::size() const {
  std::lock_guard lock(mu_);
  return phrases_.size();
}

namespace detail {

std::vector<std::size_t> find_triggers(ByteView text, const WindowConfig& cfg, std::size_t from,
                                       std::size_t to) {
  std::vector<std::size_t> out;
  to = std::min(to, text.size());
  if (from >= to) return out;
  RollingWindow win(cfg.w);
  const std::size_t begin = from >= cfg.w - 1 ? from - (cfg.w - 1) : 0;
  for (std::size_t i = begin; i < to; ++i) {
    win.roll(text[i]);
    if (i >= from && win.full() && is_trigger(cfg, win)) out.push_back(i);
  }
  return out;
}

PfpResult finalize(std::vector<Bytes> phrases, const std::vector<std::uint32_t>& ids,
                   std::size_t w) {
  if (ids.size() > kMaxCount) throw Error(Errc::Overflow, "parse longer than 2^32 - 1 phrases");

  std::vector<std::uint32_t> order(phrases.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return phrases[a] < phrases[b]; });
  std::vector<std::uint32_t> rank_of(phrases.size());
  for (std::uint32_t r = 0; r < order.size(); ++r) rank_of[order[r]] = r;

  PfpResult res;
  res.w = w;
  res.dict.reserve(phrases.size());
  for (std::uint32_t id : order) res.dict.push_back(std::move(phrases[id]));

  std::vector<std::uint64_t> counts(res.dict.size(), 0);
  res.parse.reserve(ids.size());
  res.lastw.reserve(ids.size());
  for (std::uint32_t id : ids) {
    const std::uint32_t r = rank_of[id];
    res.parse.push_back(r);
    ++counts[r];
    const Bytes& d = res.dict[r];
    res.lastw.push_back(d[d.size() - w - 1]);
  }
  res.freq.reserve(counts.size());
  for (std::uint64_t c : counts) {
    if (c > kMaxCount) throw Error(Errc::Overflow, "phrase frequency exceeds 2^32 - 1");
    res.freq.push_back(static_cast<std::uint32_t>(c));
  }
  return res;
}

}  // namespace detail

PfpResult parse_text(ByteView text, const WindowConfig& cfg) {
  cfg.validate();
  validate_text(text);
  const std::size_t w = cfg.w;
  const std::size_t padded = text.size() + 1 + w;

  PhraseDictionary dict;
  std::vector<std::uint32_t> ids;
  std::size_t start = 0;
  for (std::size_t t : detail::find_triggers(text, cfg, 0, text.size())) {
    ids.push_back(dict.insert_or_get(padded_slice(text, start, phrase_end(t))));
    start = next_start(t, w);
  }
  ids.push_back(dict.insert_or_get(padded_slice(text, start, padded)));
  return detail::finalize(std::move(dict).take_phrases(), ids, w);
}

PfpResult parse_chunked(ByteView text, const WindowConfig& cfg, std::size_t chunks) {
  cfg.validate();
  validate_text(text);
  if (chunks == 0) throw Error(Errc::InvalidConfig, "chunk count must be at least 1");
  const std::size_t n = text.size();
  const std::size_t w = cfg.w;

  struct ChunkResult {
    std::vector<std::size_t> triggers;
    std::vector<std::uint32_t> ids;  // phrases strictly between this chunk's triggers
    std::exception_ptr error;
  };
  std::vector<ChunkResult> parts(chunks);
  PhraseDictionary dict;
  {
    std::vector<std::jthread> workers;
    workers.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
      workers.emplace_back([&, c] {
        ChunkResult& part = parts[c];
        try {
          part.triggers = detail::find_triggers(text, cfg, n * c / chunks, n * (c + 1) / chunks);
          for (std::size_t k = 1; k < part.triggers.size(); ++k) {
            part.ids.push_back(dict.insert_or_get(padded_slice(
                text, next_start(part.triggers[k - 1], w), phrase_end(part.triggers[k]))));
          }
        } catch (...) {
          part.error = std::current_exception();
        }
      });
    }
  }
  for (const auto& part : parts) {
    if (part.error) std::rethrow_exception(part.error);
  }

  // Stitch: the phrase spanning a chunk boundary runs from the last trigger
  // seen so far to the first trigger of the next non-empty chunk.
  std::vector<std::uint32_t> ids;
  std::size_t start = 0;
  for (const auto& part : parts) {
    if (part.triggers.empty()) continue;
    ids.push_back(dict.insert_or_get(padded_slice(text, start, phrase_end(part.triggers.front()))));
    ids.insert(ids.end(), part.ids.begin(), part.ids.end());
    start = next_start(part.triggers.back(), w);
  }
  ids.push_back(dict.insert_or_get(padded_slice(text, start, n + 1 + w)));
  return detail::finalize(std::move(dict).take_phrases(), ids, w);
}

Bytes reconstruct_text(const PfpResult& res, std::size_t w) {
  if (res.parse.empty()) throw Error(Errc::MalformedParse, "parse is empty");
  Bytes padded;
  const Bytes* prev = nullptr;
  for (std::uint32_t r : res.parse) {
    if (r >= res.dict.size()) throw Error(Errc::MalformedParse, "rank out of range");
    const Bytes& d = res.dict[r];
    if (d.size() <= w) throw Error(Errc::MalformedParse, "phrase not longer than the window");
    if (prev == nullptr) {
      padded.insert(padded.end(), d.begin(), d.end());
    } else {
      if (!std::equal(d.begin(), d.begin() + w, prev->end() - w)) {
        throw Error(Errc::MalformedParse, "consecutive phrases do not overlap by w bytes");
      }
      padded.insert(padded.end(), d.begin() + w, d.end());
    }
    prev = &d;
  }
  if (padded.size() < w + 2 || padded.front() != kSentinel ||
      std::any_of(padded.end() - w, padded.end(), [](std::uint8_t c) { return c != kSentinel; })) {
    throw Error(Errc::MalformedParse, "parse is not framed by sentinels");
  }
  Bytes text(padded.begin() + 1, padded.end() - w);
  if (std::any_of(text.begin(), text.end(), [](std::uint8_t c) { return c < kMinTextByte; })) {
    throw Error(Errc::MalformedParse, "reserved byte inside the text");
  }
  return text;
}

void check_invariants(const PfpResult& res) {
  const auto fail = [](const std::string& what) { throw Error(Errc::MalformedParse, what); };
  if (res.w == 0) fail("window length is zero");
  if (res.dict.empty()) fail("empty dictionary");
  if (res.freq.size() != res.dict.size()) fail("frequency table size differs from dictionary");
  if (res.lastw.size() != res.parse.size()) fail("last-character array size differs from parse");
  for (std::size_t r = 0; r < res.dict.size(); ++r) {
    if (res.dict[r].size() <= res.w) fail("phrase " + std::to_string(r) + " not longer than w");
    if (r > 0 && !(res.dict[r - 1] < res.dict[r])) fail("dictionary not strictly sorted");
  }
  std::vector<std::uint64_t> counts(res.dict.size(), 0);
  for (std::size_t j = 0; j < res.parse.size(); ++j) {
    const std::uint32_t r = res.parse[j];
    if (r >= res.dict.size()) fail("rank out of range at parse position " + std::to_string(j));
    ++counts[r];
    const Bytes& d = res.dict[r];
    if (res.lastw[j] != d[d.size() - res.w - 1]) fail("last-character mismatch at " + std::to_string(j));
  }
  for (std::size_t r = 0; r < counts.size(); ++r) {
    if (counts[r] != res.freq[r]) fail("frequency mismatch for phrase " + std::to_string(r));
  }
}

}  // namespace pfbwt
