#include "pfbwt/io.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "pfbwt/error.hpp"

namespace pfbwt::io {

namespace {

template <class T>
void put_le(Bytes& out, T value) {
  for (std::size_t k = 0; k < sizeof(T); ++k) {
    out.push_back(static_cast<std::uint8_t>(static_cast<std::uint64_t>(value) >> (8 * k)));
  }
}

class Reader {
 public:
  explicit Reader(ByteView data) : data_(data) {}

  template <class T>
  T le() {
    need(sizeof(T));
    std::uint64_t v = 0;
    for (std::size_t k = 0; k < sizeof(T); ++k) v |= static_cast<std::uint64_t>(data_[pos_ + k]) << (8 * k);
    pos_ += sizeof(T);
    return static_cast<T>(v);
  }

  ByteView bytes(std::uint64_t count) {
    need(count);
    ByteView out = data_.subspan(pos_, count);
    pos_ += count;
    return out;
  }

  bool done() const noexcept { return pos_ == data_.size(); }

 private:
  void need(std::uint64_t count) const {
    if (count > data_.size() - pos_) {
      throw Error(Errc::TruncatedFile, "needed " + std::to_string(count) + " bytes at offset " +
                                           std::to_string(pos_) + ", file has " + std::to_string(data_.size()));
    }
  }

  ByteView data_;
  std::size_t pos_ = 0;
};

}  // namespace

Bytes read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(Errc::Io, "read failed for " + path.string());
  return data;
}

void write_file(const fs::path& path, ByteView data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::Io, "cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw Error(Errc::Io, "write failed for " + path.string());
}

Bytes encode_dict(const std::vector<Bytes>& dict) {
  Bytes out;
  for (const auto& d : dict) {
    out.insert(out.end(), d.begin(), d.end());
    out.push_back(kPhraseSep);
  }
  out.push_back(kDictEnd);
  return out;
}

std::vector<Bytes> decode_dict(ByteView data) {
  if (data.empty() || data.back() != kDictEnd) throw Error(Errc::TruncatedFile, "dictionary lacks the end marker");
  std::vector<Bytes> dict;
  Bytes cur;
  for (std::size_t i = 0; i + 1 < data.size(); ++i) {
    const std::uint8_t c = data[i];
    if (c == kPhraseSep) {
      dict.push_back(std::move(cur));
      cur.clear();
    } else if (c == kDictEnd) {
      throw Error(Errc::MalformedParse, "end marker inside the dictionary");
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) throw Error(Errc::TruncatedFile, "last phrase lacks its separator");
  return dict;
}

Bytes encode_u32s(const std::vector<std::uint32_t>& values) {
  Bytes out;
  out.reserve(values.size() * 4);
  for (std::uint32_t v : values) put_le(out, v);
  return out;
}

std::vector<std::uint32_t> decode_u32s(ByteView data) {
  if (data.size() % 4 != 0) throw Error(Errc::TruncatedFile, "size is not a multiple of 4 bytes");
  Reader rd(data);
  std::vector<std::uint32_t> out(data.size() / 4);
  for (auto& v : out) v = rd.le<std::uint32_t>();
  return out;
}

Bytes encode_parse(const std::vector<std::uint32_t>& ranks) {
  std::vector<std::uint32_t> shifted(ranks.size());
  std::transform(ranks.begin(), ranks.end(), shifted.begin(), [](std::uint32_t r) { return r + 1; });
  return encode_u32s(shifted);
}

std::vector<std::uint32_t> decode_parse(ByteView data) {
  std::vector<std::uint32_t> ranks = decode_u32s(data);
  for (auto& r : ranks) {
    if (r == 0) throw Error(Errc::MalformedParse, "parse entry 0 is reserved");
    --r;
  }
  return ranks;
}

Bytes encode_rlfm(const RlfmIndex& ix) {
  const Bytes alpha = ix.alphabet();
  const RleBwt& rle = ix.rle();
  Bytes out(std::begin(kRlfmMagic), std::end(kRlfmMagic));
  put_le(out, kRlfmVersion);
  put_le(out, ix.size());
  put_le(out, static_cast<std::uint64_t>(rle.runs()));
  put_le(out, static_cast<std::uint16_t>(alpha.size()));
  out.insert(out.end(), alpha.begin(), alpha.end());
  out.insert(out.end(), rle.heads().begin(), rle.heads().end());
  for (std::uint64_t len : rle.lengths()) put_le(out, len);
  for (std::uint8_t c : alpha) put_le(out, ix.c_array()[c]);
  put_le(out, ix.size());
  return out;
}

RlfmHeader read_rlfm_header(ByteView data) {
  if (data.size() < 4 || std::memcmp(data.data(), kRlfmMagic, 4) != 0) {
    throw Error(Errc::BadMagic, "not an RLFM index");
  }
  Reader rd(data.subspan(4));
  RlfmHeader h{};
  h.version = rd.le<std::uint32_t>();
  if (h.version != kRlfmVersion) {
    throw Error(Errc::VersionMismatch, "index version " + std::to_string(h.version) + ", expected " +
                                           std::to_string(kRlfmVersion));
  }
  h.n = rd.le<std::uint64_t>();
  h.r = rd.le<std::uint64_t>();
  h.sigma = rd.le<std::uint16_t>();
  return h;
}

RlfmIndex decode_rlfm(ByteView data) {
  const RlfmHeader h = read_rlfm_header(data);
  constexpr std::size_t kHeaderSize = 4 + 4 + 8 + 8 + 2;
  Reader rd(data.subspan(kHeaderSize));
  if (h.sigma > 256) throw Error(Errc::MalformedParse, "alphabet larger than 256");
  if (h.r > data.size()) throw Error(Errc::TruncatedFile, "run count exceeds file size");
  const ByteView alpha = rd.bytes(h.sigma);
  const ByteView heads = rd.bytes(h.r);
  std::vector<std::uint64_t> lengths(h.r);
  for (auto& len : lengths) len = rd.le<std::uint64_t>();
  std::vector<std::uint64_t> c(h.sigma + 1u);
  for (auto& v : c) v = rd.le<std::uint64_t>();
  if (!rd.done()) throw Error(Errc::MalformedParse, "trailing bytes after the C array");

  RlfmIndex ix(RleBwt(Bytes(heads.begin(), heads.end()), std::move(lengths)));
  if (ix.size() != h.n || ix.alphabet() != Bytes(alpha.begin(), alpha.end())) {
    throw Error(Errc::MalformedParse, "header disagrees with the stored runs");
  }
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (ix.c_array()[alpha[k]] != c[k]) throw Error(Errc::MalformedParse, "C array disagrees with the runs");
  }
  if (c.back() != h.n) throw Error(Errc::MalformedParse, "C array total differs from n");
  return ix;
}

void write_pfp(const PrefixPaths& paths, const PfpResult& res) {
  write_file(paths.dict(), encode_dict(res.dict));
  write_file(paths.occ(), encode_u32s(res.freq));
  write_file(paths.parse(), encode_parse(res.parse));
  write_file(paths.last(), res.lastw);
}

PfpResult read_pfp(const PrefixPaths& paths, std::size_t expected_w) {
  PfpResult res;
  res.dict = decode_dict(read_file(paths.dict()));
  res.freq = decode_u32s(read_file(paths.occ()));
  res.parse = decode_parse(read_file(paths.parse()));
  res.lastw = read_file(paths.last());
  if (res.parse.empty() || res.dict.empty()) throw Error(Errc::MalformedParse, "empty parse or dictionary");
  if (res.parse.back() >= res.dict.size()) throw Error(Errc::MalformedParse, "rank out of range");

  const Bytes& tail = res.dict[res.parse.back()];
  const auto w = static_cast<std::size_t>(
      std::find_if(tail.rbegin(), tail.rend(), [](std::uint8_t c) { return c != kSentinel; }) - tail.rbegin());
  if (w == 0) throw Error(Errc::MalformedParse, "final phrase does not end with sentinels");
  if (expected_w != 0 && expected_w != w) {
    throw Error(Errc::MalformedParse, "parse was built with w=" + std::to_string(w) + ", not " +
                                          std::to_string(expected_w));
  }
  res.w = w;
  check_invariants(res);
  return res;
}

void save_rlfm(const fs::path& path, const RlfmIndex& ix) { write_file(path, encode_rlfm(ix)); }

RlfmIndex load_rlfm(const fs::path& path) { return decode_rlfm(read_file(path)); }

}  // namespace pfbwt::io
