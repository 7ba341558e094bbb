#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mmu::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kBudget = 3 };

enum class Format { text, json };

/// Options shared by every subcommand. Unused fields are ignored.
struct RunConfig {
  int n = 2;
  int q = 2;
  std::optional<int> r;
  std::optional<int> corank;
  int m = 1;
  std::vector<int> samples;
  std::uint64_t budget = 0;  // 0: MMU_BUDGET or the library default
  Format format = Format::text;
  std::string output;
  std::string input;
  std::string suite = "all";
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  int bound = 6;
  int vectors = 20;
};

/// Enumeration cap: explicit flag, then MMU_BUDGET, then the library default.
std::uint64_t effective_budget(const RunConfig& cfg);

/// Parses args (without the program name) and runs one subcommand.
/// Output goes to out (or the --output file), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_unit(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_kovacs(const RunConfig& cfg, std::ostream& out);
int cmd_lemmas(const RunConfig& cfg, std::ostream& out);
int cmd_simples(const RunConfig& cfg, std::ostream& out);
int cmd_schurweyl(const RunConfig& cfg, std::ostream& out);
int cmd_classes(const RunConfig& cfg, std::ostream& out);
int cmd_multiplicity(const RunConfig& cfg, std::ostream& out);

}  // namespace mmu::cli
