#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mdsgrs/grs.hpp"
#include "mdsgrs/linalg.hpp"

namespace mdsgrs {

enum class CheckStatus { Pass, Fail, Skipped };
enum class CheckMode { Exact, Randomized, Structural };

std::string_view to_string(CheckStatus status) noexcept;
std::string_view to_string(CheckMode mode) noexcept;

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  CheckMode mode = CheckMode::Exact;
  std::string detail;
  std::optional<std::uint64_t> seed;

  bool passed() const noexcept { return status == CheckStatus::Pass; }
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  /// True iff no check failed. Skipped checks do not fail the report.
  bool overall() const noexcept;
  void add(CheckResult result) { checks.push_back(std::move(result)); }
};

/// How MDS-ness is established:
///  - Exact: every k-subset of generator columns is tested for nonsingularity.
///  - Randomized: `samples` uniformly drawn k-subsets from a seeded generator.
///  - Structural: distinct points and nonzero multipliers, relying on GRS theory.
enum class MdsMode { Exact, Randomized, Structural };

struct MdsOptions {
  MdsMode mode = MdsMode::Exact;
  std::uint64_t budget = 1'000'000;  // max subsets in exact mode
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 0;
};

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Pass iff N = 2k, rank(G) = k and G * G^T = 0.
CheckResult check_self_dual(const MatrixGF& generator);
CheckResult check_self_dual(const GrsCode& code);

/// Exact mode throws BudgetExceeded when C(N, k) exceeds the budget.
/// Structural mode is skipped for a bare matrix.
CheckResult check_mds(const MatrixGF& generator, const MdsOptions& options);
CheckResult check_mds(const GrsCode& code, const MdsOptions& options);

/// Rowspace of GRS_{n-k}(alpha, u) equals the nullspace of the generator of
/// GRS_k(alpha, 1). Skipped outside 1 <= k <= n-1.
CheckResult check_dual_identity(const Field& field, std::span<const Felt> alpha, std::size_t k);

/// sum_i f(alpha_i) u_i g(alpha_i) for explicit polynomials f and g.
Felt orthogonality_sum(const Field& field, std::span<const Felt> alpha, std::span<const Felt> u,
                       std::span<const Felt> f, std::span<const Felt> g);
/// The orthogonality sum vanishes for every monomial pair x^i, x^j with
/// i < k and j < n - k (hence for all admissible f, g by bilinearity).
CheckResult check_orthogonality(const Field& field, std::span<const Felt> alpha, std::size_t k);

struct CharacterSumCheck {
  CheckResult result;
  std::uint64_t count = 0;  // N
  double expected = 0;      // q / 2^{n-1}
  double radius = 0;        // right-hand side of the bound
};

/// Counts N = #{b : chi(b - a) = 1 for every a in T} by enumeration and
/// tests |N - q/2^{n-1}| <= ((n-3)/2 + 1/2^{n-1}) sqrt(q) + (n-1)/2 with
/// n = |T| + 1. The comparison is done in exact integer arithmetic.
/// Throws EvenCharacteristic, DuplicatePoints, or InvalidArgument (empty T).
CharacterSumCheck check_character_sum_bound(const Field& field, std::span<const Felt> t);

/// Minimum Hamming weight over all nonzero codewords of the row space.
/// Throws BudgetExceeded when q^k exceeds max_words.
std::size_t minimum_distance(const MatrixGF& generator, std::uint64_t max_words = 100'000);

}  // namespace mdsgrs
