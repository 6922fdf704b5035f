#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "scp/verify.hpp"

namespace scp::cli {

enum class Subcommand { kConstruct, kMate, kVerify, kCorrelate, kTable1, kSweep };
enum class Format { kDefault, kJson, kCsv };

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct CommandConfig {
  Subcommand subcommand = Subcommand::kConstruct;

  // Parameter source: --params file, --pair file, or inline flags.
  std::optional<std::string> params_file;
  std::optional<std::string> pair_file;
  std::optional<int> q;
  std::optional<int> m;
  std::optional<int> t;
  std::vector<int> perm;
  std::optional<std::vector<int>> restricted;
  std::vector<int> d;
  std::vector<int> g;
  bool random_g = false;

  std::optional<std::string> out;
  Format format = Format::kDefault;
  std::uint64_t seed = kDefaultSeed;

  std::optional<std::size_t> claimed_zcz;
  std::string kind = "aacs";  // correlate

  std::vector<int> q_set{2, 4};  // sweep
  int m_min = 1;
  int m_max = 5;
  unsigned workers = 0;
  bool timing = false;
  bool skip_ordering = false;
};

// Parses argv. On --help or a usage error, prints to out/err and returns
// nullopt with `status` set.
std::optional<CommandConfig> parse_command_line(int argc, const char* const* argv,
                                                std::ostream& out, std::ostream& err,
                                                int& status);

// Runs one subcommand. Artifacts go to config.out, or to `out` when unset.
// Diagnostics go to `err`.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

int main(int argc, const char* const* argv);

}  // namespace scp::cli
