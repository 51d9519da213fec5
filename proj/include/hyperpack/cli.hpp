#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hyperpack/decide.hpp"

namespace hyperpack {

// Exit codes: 0 YES or valid output, 1 NO (or a corpus disagreement),
// 2 PRECONDITION_UNMET, 3 usage or input error.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUnmet = 2;
inline constexpr int kExitUsage = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

// One manifest entry with its instance loaded or generated.
struct CorpusEntry {
  std::string name;
  std::string pipeline;  // pm, pack or oracle
  Hypergraph graph;
  Pattern pattern;
  PipelineConfig config;
  std::optional<std::string> expect;
};

// Manifest: {"instances": [{"name", "file" | "gen", "pipeline", "pattern",
// "l", "delta", "gamma", "expect"}]}. Paths are relative to the manifest;
// per-entry values override base.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& manifest,
                                     const PipelineConfig& base);
Decision run_corpus_entry(const CorpusEntry& entry);

}  // namespace hyperpack
