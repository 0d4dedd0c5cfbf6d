#pragma once

// Extension description files and the subcommands of the command-line
// tool, as library functions returning structured reports.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cartierlab/cartier.hpp"
#include "cartierlab/extension.hpp"
#include "cartierlab/laurent.hpp"

namespace cartierlab {

inline constexpr const char* kToolVersion = "0.1.0";

struct RingSpec {
  Field field;
  std::vector<std::string> vars;
  std::vector<std::string> relations;
  Ideal ideal() const;
};

struct ExtensionFile {
  std::string name;                  // file name without directories
  std::string digest;                // sha256 of the raw bytes
  std::optional<RingSpec> a, b;
  std::vector<std::string> images;
  nlohmann::json hints = nlohmann::json::object();  // raw [hints]
  std::optional<RankData> rankdata;
  nlohmann::json meta = nlohmann::json::object();
};

/// Reads and validates a description file; throws InputError.
ExtensionFile load_extension_file(const std::string& path);
ExtensionFile parse_extension_text(const std::string& text, const std::string& name);
/// Throws MathError("NotWellDefined"/"NotInjective") or InputError.
Extension build_extension(const ExtensionFile& file, bool assume_injective = false);
/// A finite algebra from a file with a [ring] section.
Base load_base_file(const std::string& path, std::string* digest = nullptr);

std::string sha256_hex(const std::string& bytes);

struct CliOptions {
  unsigned bound = 6;
  std::uint64_t pair_budget = 100000;
  std::string primes;                // "x,y;x-1,y-1"
  bool generic = false;
  bool json = false;
  std::string method = "auto";
  bool assume_injective = false;
  unsigned n = 0;
  std::string base;
  std::string laurent;
};

struct CommandResult {
  nlohmann::json report;
  std::string text;
  int exit_code = 0;
};

/// Splits "--primes" text into generator lists parsed in `ring`.
std::vector<std::vector<Polynomial>> parse_primes(const std::string& text, const Ring& ring);

CommandResult cmd_check(const std::string& file, const CliOptions& opts);
CommandResult cmd_stalks(const std::string& file, const CliOptions& opts);
CommandResult cmd_li(const std::string& file, const CliOptions& opts);
CommandResult cmd_closure(const std::string& file, WitnessKind kind, const CliOptions& opts);
CommandResult cmd_terms(const CliOptions& opts);
CommandResult cmd_units(const CliOptions& opts);
/// Runs every case of <dir>/expected.json and compares.
CommandResult cmd_corpus(const std::string& dir, const CliOptions& opts);

/// Dispatches by subcommand name; maps errors to exit codes 2 (input),
/// 3 (resource limit) and 4 (internal).
CommandResult run_command(const std::string& command, const std::string& file, const CliOptions& opts);

/// The report as printed: indented JSON or text.
std::string render(const CommandResult& r, bool json);

}  // namespace cartierlab
