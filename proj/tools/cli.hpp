#ifndef HYBRID_TOOLS_CLI_HPP
#define HYBRID_TOOLS_CLI_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hybrid/lambda_ol.hpp"

namespace hybrid::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kLawViolation = 1;
inline constexpr int kUsage = 2;
inline constexpr int kDomain = 3;

struct CliResult {
  int code = kOk;
  std::string out;
  std::string err;
};

// Runs one command; `args` excludes the program name.
CliResult run_cli(const std::vector<std::string>& args);

// HOAS text as printed by to_hoas: `CON c`, `VAR n`, `ERR`, `s $$ t`,
// `LAM x. body`, parentheses. Throws ParseError.
Expr parse_hoas(std::string_view text);

// Accepts either the canonical s-expression form or HOAS text.
Expr parse_term(std::string_view text);

enum class Mutant { None, VarBlindEquality };

struct SweepConfig {
  std::size_t depth = 3;
  std::uint64_t seed = 1;
  std::size_t count = 500;
  Mutant mutant = Mutant::None;
};

struct SweepReport {
  bool ok = true;
  std::string text;
};

// Runs the law suites: exhaustive up to min(depth, 3), plus `count` random
// samples of depth depth + 3.
SweepReport run_sweep(const SweepConfig& config);

}  // namespace hybrid::cli

#endif  // HYBRID_TOOLS_CLI_HPP
