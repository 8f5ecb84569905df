#include "pfbwt/pipeline.hpp"

#include <sys/resource.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <random>
#include <string>

#include "pfbwt/error.hpp"
#include "pfbwt/io.hpp"
#include "pfbwt/oracle.hpp"
#include "pfbwt/pfpbwt.hpp"

namespace pfbwt::pipeline {

namespace {

constexpr std::uint64_t kNaiveCheckLimit = 1 << 20;

// Prints wall time and peak resident set size when a stage ends.
class StageTimer {
 public:
  StageTimer(std::ostream& log, std::string name)
      : log_(log), name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}

  ~StageTimer() {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
    rusage usage{};
    getrusage(RUSAGE_SELF, &usage);
    log_ << "[" << name_ << "] " << std::fixed << std::setprecision(3) << elapsed.count()
         << " s, peak RSS " << usage.ru_maxrss / 1024 << " MiB\n";
    log_.unsetf(std::ios::floatfield);
  }

 private:
  std::ostream& log_;
  std::string name_;
  std::chrono::steady_clock::time_point start_;
};

std::vector<std::string> read_triggers(const fs::path& path) {
  const Bytes data = io::read_file(path);
  std::vector<std::string> out;
  std::string line;
  for (std::uint8_t c : data) {
    if (c == '\n') {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) out.push_back(line);
      line.clear();
    } else {
      line.push_back(static_cast<char>(c));
    }
  }
  if (!line.empty()) out.push_back(line);
  return out;
}

Bytes load_text(const PipelineConfig& cfg) {
  Bytes text = io::read_file(cfg.input);
  if (cfg.dna_filter) text = dna_filter(text);
  if (cfg.remap) {
    const Bytes table = remap_table(text);
    for (auto& c : text) c = table[c];
    io::write_file(fs::path(cfg.prefix().string() + ".remap"), table);
  }
  validate_text(text);
  return text;
}

PfpResult parse_with(const PipelineConfig& cfg, ByteView text) {
  const WindowConfig window = cfg.window();
  return cfg.threads > 1 ? parse_chunked(text, window, cfg.threads) : parse_text(text, window);
}

Bytes terminated(Bytes text) {
  text.push_back(kSentinel);
  return text;
}

void verify_bwt(ByteView text, ByteView bwt, std::ostream& log) {
  const Bytes expected = terminated(Bytes(text.begin(), text.end()));
  if (text.size() <= kNaiveCheckLimit) {
    if (oracle::naive_bwt(expected) != Bytes(bwt.begin(), bwt.end())) {
      throw Error(Errc::CheckFailed, "BWT differs from the brute-force BWT");
    }
    log << "check: BWT matches the brute-force suffix sort\n";
  } else {
    if (oracle::inverse_bwt(bwt) != expected) throw Error(Errc::CheckFailed, "BWT does not invert to the text");
    log << "check: BWT inverts to the text\n";
  }
}

}  // namespace

void PipelineConfig::validate() const {
  if (w == 0) throw Error(Errc::InvalidConfig, "-w must be at least 1");
  if (p == 0) throw Error(Errc::InvalidConfig, "-p must be at least 1");
  if (threads == 0) throw Error(Errc::InvalidConfig, "-t must be at least 1");
}

WindowConfig PipelineConfig::window() const {
  validate();
  if (triggers) return WindowConfig::explicit_set(w, read_triggers(*triggers));
  return WindowConfig::hash_mod(w, p);
}

double ParseReport::ratio() const noexcept {
  if (text_length == 0) return 0.0;
  return static_cast<double>(dict_bytes + 4 * parse_length) / static_cast<double>(text_length);
}

ParseReport make_report(const PfpResult& res) {
  return {res.text_length(), res.dict_bytes(), res.dict.size(), res.parse.size()};
}

Bytes dna_filter(ByteView text) {
  Bytes out;
  out.reserve(text.size());
  std::copy_if(text.begin(), text.end(), std::back_inserter(out), [](std::uint8_t c) {
    return c == 'A' || c == 'C' || c == 'G' || c == 'T' || c == 'N';
  });
  return out;
}

Bytes remap_table(ByteView text) {
  std::array<bool, 256> used{};
  for (std::uint8_t c : text) used[c] = true;
  Bytes table(256);
  std::size_t next = kMinTextByte;
  for (std::size_t c = 0; c < 256; ++c) {
    table[c] = static_cast<std::uint8_t>(std::min<std::size_t>(next, 255));
    if (used[c]) {
      if (next > 255) throw Error(Errc::InputAlphabet, "more than 253 distinct bytes; cannot remap");
      ++next;
    }
  }
  return table;
}

ParseReport cmd_parse(const PipelineConfig& cfg, std::ostream& log) {
  cfg.validate();
  const io::PrefixPaths paths{cfg.prefix()};
  PfpResult res;
  {
    StageTimer timer(log, "parse");
    const Bytes text = load_text(cfg);
    res = parse_with(cfg, text);
  }
  {
    StageTimer timer(log, "write parse files");
    io::write_pfp(paths, res);
  }
  const ParseReport report = make_report(res);
  log << "text length " << report.text_length << ", dictionary " << report.dict_phrases << " phrases / "
      << report.dict_bytes << " bytes, parse " << report.parse_length << " phrases, (|D|+4|P|)/|T| = "
      << std::setprecision(4) << report.ratio() << "\n";
  return report;
}

std::uint64_t cmd_bwt(const PipelineConfig& cfg, std::ostream& log) {
  const io::PrefixPaths paths{cfg.prefix()};
  PfpResult res;
  {
    StageTimer timer(log, "read parse files");
    res = io::read_pfp(paths);
  }
  Bytes bwt;
  {
    StageTimer timer(log, "bwt");
    bwt = bwt_from_parse(res, cfg.threads);
  }
  io::write_file(paths.bwt(), bwt);
  log << "BWT length " << bwt.size() << " written to " << paths.bwt().string() << "\n";
  if (cfg.check) {
    StageTimer timer(log, "check");
    verify_bwt(reconstruct_text(res, res.w), bwt, log);
  }
  return bwt.size();
}

RlfmIndex cmd_index(const PipelineConfig& cfg, std::ostream& log) {
  const io::PrefixPaths paths{cfg.prefix()};
  StageTimer timer(log, "index");
  RlfmIndex ix(io::read_file(paths.bwt()));
  io::save_rlfm(paths.rlfm(), ix);
  log << "index: n = " << ix.size() << ", r = " << ix.runs() << ", sigma = " << ix.alphabet().size()
      << " written to " << paths.rlfm().string() << "\n";
  return ix;
}

void cmd_count(const fs::path& index, const fs::path& patterns, std::ostream& out) {
  const RlfmIndex ix = io::load_rlfm(index);
  const Bytes data = io::read_file(patterns);
  std::string line;
  const auto flush = [&] {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out << ix.count(line) << "\n";
    line.clear();
  };
  for (std::uint8_t c : data) {
    if (c == '\n') {
      flush();
    } else {
      line.push_back(static_cast<char>(c));
    }
  }
  if (!line.empty()) flush();
}

void cmd_check(const PipelineConfig& cfg, std::ostream& log) {
  cmd_parse(cfg, log);
  PipelineConfig bwt_cfg = cfg;
  bwt_cfg.check = true;
  cmd_bwt(bwt_cfg, log);
  const RlfmIndex ix = cmd_index(cfg, log);

  const Bytes text = load_text(cfg);
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::size_t> start(0, text.size() - 1);
  std::uniform_int_distribution<std::size_t> length(1, 12);
  for (int k = 0; k < 200; ++k) {
    const std::size_t s = start(rng);
    const std::size_t len = std::min(length(rng), text.size() - s);
    const std::string pattern(text.begin() + s, text.begin() + s + len);
    if (ix.count(pattern) != oracle::naive_count(text, pattern)) {
      throw Error(Errc::CheckFailed, "count mismatch for a pattern of length " + std::to_string(len));
    }
  }
  log << "check: 200 counts match direct scanning\n";

  if (!cfg.keep) {
    const io::PrefixPaths paths{cfg.prefix()};
    for (const auto& p : {paths.dict(), paths.occ(), paths.parse(), paths.last()}) fs::remove(p);
  }
}

}  // namespace pfbwt::pipeline
