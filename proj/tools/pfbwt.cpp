// pfbwt: BWT construction by prefix-free parsing, plus a run-length FM index
// for counting queries.
//
//   pfbwt parse INPUT [-w 10] [-p 100] [--triggers FILE] [-o PREFIX] [-t N]
//   pfbwt bwt PREFIX [-t N] [--check]
//   pfbwt index PREFIX
//   pfbwt count INDEX PATTERNS
//   pfbwt check INPUT [-w 10] [-p 100] [-o PREFIX] [--keep]
//
// Exit codes: 0 success, 1 usage, 2 data error, 3 internal inconsistency.

#include <iostream>

#include <CLI11.hpp>

#include "pfbwt/error.hpp"
#include "pfbwt/pipeline.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

void add_window_options(CLI::App* cmd, pfbwt::pipeline::PipelineConfig& cfg) {
  cmd->add_option("-w,--window", cfg.w, "window length")->capture_default_str();
  cmd->add_option("-p,--mod", cfg.p, "a window ends a phrase when its hash is 0 modulo p")
      ->capture_default_str();
  cmd->add_option("--triggers", cfg.triggers, "file with one trigger string of length w per line")
      ->check(CLI::ExistingFile);
  cmd->add_option("-o,--output", cfg.output, "output prefix (default: the input path)");
  cmd->add_option("-t,--threads", cfg.threads, "worker threads")->capture_default_str();
  cmd->add_flag("--dna-filter", cfg.dna_filter, "drop bytes other than A, C, G, T, N");
  cmd->add_flag("--remap", cfg.remap, "relabel the alphabet so that bytes 0..2 become usable");
}

}  // namespace

int main(int argc, char** argv) {
  using pfbwt::pipeline::PipelineConfig;

  CLI::App app{"BWT construction by prefix-free parsing"};
  app.require_subcommand(1);

  PipelineConfig cfg;
  std::filesystem::path index_path;
  std::filesystem::path patterns_path;

  auto* parse = app.add_subcommand("parse", "write dictionary, frequencies, parse and W of INPUT");
  parse->add_option("input", cfg.input, "text file")->required()->check(CLI::ExistingFile);
  add_window_options(parse, cfg);

  auto* bwt = app.add_subcommand("bwt", "compute PREFIX.bwt from the parse files only");
  bwt->add_option("prefix", cfg.output, "prefix used by `parse`")->required();
  bwt->add_option("-t,--threads", cfg.threads, "worker threads")->capture_default_str();
  bwt->add_flag("--check", cfg.check, "verify against a brute-force BWT of the rebuilt text");

  auto* index = app.add_subcommand("index", "build PREFIX.rlfm from PREFIX.bwt");
  index->add_option("prefix", cfg.output, "prefix used by `bwt`")->required();

  auto* count = app.add_subcommand("count", "print the occurrence count of every pattern line");
  count->add_option("index", index_path, ".rlfm file")->required()->check(CLI::ExistingFile);
  count->add_option("patterns", patterns_path, "one pattern per line")->required()->check(CLI::ExistingFile);

  auto* check = app.add_subcommand("check", "run every stage on INPUT and verify against brute force");
  check->add_option("input", cfg.input, "text file")->required()->check(CLI::ExistingFile);
  add_window_options(check, cfg);
  check->add_flag("--keep", cfg.keep, "keep the intermediate parse files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*parse) {
      pfbwt::pipeline::cmd_parse(cfg, std::cerr);
    } else if (*bwt) {
      pfbwt::pipeline::cmd_bwt(cfg, std::cerr);
    } else if (*index) {
      pfbwt::pipeline::cmd_index(cfg, std::cerr);
    } else if (*count) {
      pfbwt::pipeline::cmd_count(index_path, patterns_path, std::cout);
    } else if (*check) {
      pfbwt::pipeline::cmd_check(cfg, std::cerr);
    }
  } catch (const pfbwt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == pfbwt::Errc::InvalidConfig) return kExitUsage;
    return pfbwt::is_internal(e.code()) ? kExitInternal : kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return 0;
}
