#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "pfbwt/index.hpp"
#include "pfbwt/parser.hpp"

namespace pfbwt::io {

namespace fs = std::filesystem;

// All integers are fixed-width little endian.
inline constexpr char kRlfmMagic[4] = {'R', 'L', 'F', 'M'};
inline constexpr std::uint32_t kRlfmVersion = 1;

/// File names derived from an output prefix.
struct PrefixPaths {
  fs::path prefix;

  fs::path dict() const { return with(".dict"); }
  fs::path occ() const { return with(".occ"); }
  fs::path parse() const { return with(".parse"); }
  fs::path last() const { return with(".last"); }
  fs::path bwt() const { return with(".bwt"); }
  fs::path rlfm() const { return with(".rlfm"); }

 private:
  fs::path with(const char* ext) const { return fs::path(prefix.string() + ext); }
};

Bytes read_file(const fs::path& path);
void write_file(const fs::path& path, ByteView data);

// In-memory codecs. Decoders throw Error(TruncatedFile) or
// Error(MalformedParse) on inconsistent input.

/// Phrases each followed by 0x01; a final 0x00.
Bytes encode_dict(const std::vector<Bytes>& dict);
std::vector<Bytes> decode_dict(ByteView data);

/// u32 per value.
Bytes encode_u32s(const std::vector<std::uint32_t>& values);
std::vector<std::uint32_t> decode_u32s(ByteView data);

/// Ranks stored as rank + 1.
Bytes encode_parse(const std::vector<std::uint32_t>& ranks);
std::vector<std::uint32_t> decode_parse(ByteView data);

/// "RLFM", version u32, n u64, r u64, sigma u16, alphabet, run heads,
/// run lengths u64, sigma + 1 C entries u64. n is the BWT length.
Bytes encode_rlfm(const RlfmIndex& ix);
RlfmIndex decode_rlfm(ByteView data);

struct RlfmHeader {
  std::uint32_t version;
  std::uint64_t n;
  std::uint64_t r;
  std::uint16_t sigma;
};
RlfmHeader read_rlfm_header(ByteView data);

/// Writes .dict, .occ, .parse and .last.
void write_pfp(const PrefixPaths& paths, const PfpResult& res);

/// Loads .dict, .occ, .parse, .last. The window length is recovered from the
/// number of trailing sentinels of the final phrase; if `expected_w` is
/// non-zero it must match. The result is checked with check_invariants.
PfpResult read_pfp(const PrefixPaths& paths, std::size_t expected_w = 0);

void save_rlfm(const fs::path& path, const RlfmIndex& ix);
RlfmIndex load_rlfm(const fs::path& path);

}  // namespace pfbwt::io
