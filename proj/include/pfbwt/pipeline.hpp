#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "pfbwt/index.hpp"
#include "pfbwt/parser.hpp"

namespace pfbwt::pipeline {

namespace fs = std::filesystem;

struct PipelineConfig {
  fs::path input;
  fs::path output;  // prefix for every produced file; defaults to input
  std::size_t w = 10;
  std::uint64_t p = 100;
  std::optional<fs::path> triggers;  // one trigger string per line; switches to explicit mode
  unsigned threads = 1;
  bool check = false;
  bool dna_filter = false;
  bool remap = false;
  bool keep = false;

  fs::path prefix() const { return output.empty() ? input : output; }
  void validate() const;
  WindowConfig window() const;
};

struct ParseReport {
  std::uint64_t text_length = 0;
  std::uint64_t dict_bytes = 0;
  std::uint64_t dict_phrases = 0;
  std::uint64_t parse_length = 0;

  /// (|D| + 4|P|) / |T|.
  double ratio() const noexcept;
};

ParseReport make_report(const PfpResult& res);

/// Drops every byte outside {A, C, G, T, N}.
Bytes dna_filter(ByteView text);

/// Order-preserving relabelling of the used alphabet into bytes >= 0x03.
/// Returns a 256-entry table (old byte -> new byte). Throws
/// Error(InputAlphabet) when more than 253 distinct bytes occur.
Bytes remap_table(ByteView text);

/// Reads the input, applies the filters in `cfg`, and writes .dict, .occ,
/// .parse and .last under the prefix.
ParseReport cmd_parse(const PipelineConfig& cfg, std::ostream& log);

/// Reads only the four parse files and writes .bwt. Never touches the input.
/// With cfg.check the text is rebuilt from the parse and compared against
/// the brute-force BWT (or an inverse-BWT round trip above 1 MB).
std::uint64_t cmd_bwt(const PipelineConfig& cfg, std::ostream& log);

/// .bwt -> .rlfm. Returns the built index.
RlfmIndex cmd_index(const PipelineConfig& cfg, std::ostream& log);

/// Prints one count per line of `patterns` to `out`.
void cmd_count(const fs::path& index, const fs::path& patterns, std::ostream& out);

/// parse + bwt + index under the prefix, then verifies the BWT against the
/// brute-force oracle and a handful of counts against direct scanning.
/// Intermediate parse files are removed unless cfg.keep.
void cmd_check(const PipelineConfig& cfg, std::ostream& log);

}  // namespace pfbwt::pipeline
