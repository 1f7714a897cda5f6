#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mdsgrs/construct.hpp"
#include "mdsgrs/verify.hpp"

namespace mdsgrs {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitNoCode = 2,
  kExitVerifyFailed = 3,
};

struct VerifyOptions {
  /// Exact when C(N, k) fits the budget, randomized otherwise.
  bool auto_mds = true;
  MdsOptions mds;
  bool dual_identity = false;
};

/// Runs generator consistency (when a stored generator is given), self-dual,
/// MDS and optionally the dual identity on a parsed code.
VerificationReport verify_code(const GrsCode& code, const std::optional<MatrixGF>& generator,
                               const VerifyOptions& options);

struct SweepCell {
  Family family;
  ConstructionRequest request;
  std::uint64_t q = 0;
  std::size_t n = 0;
};

/// The grid of (family, parameters) cells exercised by `sweep` with no family.
std::vector<SweepCell> default_sweep_grid();

/// Entry point of the `mdsgrs` tool; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mdsgrs
