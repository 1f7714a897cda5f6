#include "mdsgrs/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "mdsgrs/error.hpp"

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

namespace mdsgrs {

std::string_view to_string(CheckStatus status) noexcept {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

std::string_view to_string(CheckMode mode) noexcept {
  switch (mode) {
    case CheckMode::Exact: return "exact";
    case CheckMode::Randomized: return "randomized";
    case CheckMode::Structural: return "structural";
  }
  return "unknown";
}

bool VerificationReport::overall() const noexcept {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(acc);
}

namespace {

CheckResult make_result(std::string name, bool ok, CheckMode mode, std::string detail) {
  return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, mode, std::move(detail),
          std::nullopt};
}

// Rank test of the k x k submatrix on `cols`, reusing `scratch`.
bool columns_independent(const MatrixGF& g, std::span<const std::size_t> cols,
                         std::vector<Felt>& scratch) {
  const FieldCtx& f = g.ctx();
  const std::size_t k = g.rows();
  scratch.resize(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) scratch[i * k + j] = g(i, cols[j]);

  for (std::size_t c = 0; c < k; ++c) {
    std::size_t pivot = c;
    while (pivot < k && scratch[pivot * k + c].index == 0) ++pivot;
    if (pivot == k) return false;
    if (pivot != c)
      std::swap_ranges(scratch.begin() + pivot * k, scratch.begin() + pivot * k + k,
                       scratch.begin() + c * k);
    const Felt inv = f.inv(scratch[c * k + c]);
    for (std::size_t i = c + 1; i < k; ++i) {
      const Felt factor = f.mul(scratch[i * k + c], inv);
      if (factor.index == 0) continue;
      for (std::size_t j = c; j < k; ++j)
        scratch[i * k + j] = f.sub(scratch[i * k + j], f.mul(factor, scratch[c * k + j]));
    }
  }
  return true;
}

std::string describe_subset(std::span<const std::size_t> cols) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i] + 1;
  os << '}';
  return os.str();
}

// Uniform value in [0, bound) by rejection; identical across platforms.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

}  // namespace

CheckResult check_self_dual(const MatrixGF& generator) {
  const std::size_t k = generator.rows(), n = generator.cols();
  std::ostringstream os;
  os << "[" << n << "," << k << "]";
  if (n != 2 * k) {
    os << ": length is not twice the dimension";
    return make_result("self_dual", false, CheckMode::Exact, os.str());
  }
  const std::size_t r = rank(generator);
  if (r != k) {
    os << ": generator rank " << r << " < " << k;
    return make_result("self_dual", false, CheckMode::Exact, os.str());
  }
  const MatrixGF gram = multiply(generator, transpose(generator));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (gram(i, j).index != 0) {
        os << ": rows " << i + 1 << " and " << j + 1 << " are not orthogonal";
        return make_result("self_dual", false, CheckMode::Exact, os.str());
      }
  os << ": G*G^T = 0 and rank = k";
  return make_result("self_dual", true, CheckMode::Exact, os.str());
}

CheckResult check_self_dual(const GrsCode& code) { return check_self_dual(generator_matrix(code)); }

CheckResult check_mds(const MatrixGF& generator, const MdsOptions& options) {
  const std::size_t k = generator.rows(), n = generator.cols();
  std::vector<Felt> scratch;

  if (options.mode == MdsMode::Structural) {
    return {"mds", CheckStatus::Skipped, CheckMode::Structural,
            "structural certification needs the GRS parameters", std::nullopt};
  }

  if (options.mode == MdsMode::Exact) {
    const std::uint64_t total = binomial(n, k);
    if (total > options.budget)
      throw Error(ErrorKind::BudgetExceeded, "C(" + std::to_string(n) + "," + std::to_string(k) +
                                                 ") subsets exceed the exact budget of " +
                                                 std::to_string(options.budget));
    std::vector<std::size_t> cols(k);
    std::iota(cols.begin(), cols.end(), 0);
    std::uint64_t tested = 0;
    while (true) {
      ++tested;
      if (!columns_independent(generator, cols, scratch))
        return make_result("mds", false, CheckMode::Exact,
                           "columns " + describe_subset(cols) + " are dependent; d < N - k + 1");
      // Next k-combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && cols[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++cols[i - 1];
      for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
    }
    return make_result("mds", true, CheckMode::Exact,
                       "all " + std::to_string(tested) + " column " + std::to_string(k) +
                           "-subsets nonsingular; d = " + std::to_string(n - k + 1));
  }

  std::mt19937_64 rng(options.seed);
  std::vector<std::size_t> perm(n), cols(k);
  for (std::uint64_t s = 0; s < options.samples; ++s) {
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = 0; i < k; ++i) std::swap(perm[i], perm[i + bounded(rng, n - i)]);
    std::copy_n(perm.begin(), k, cols.begin());
    std::sort(cols.begin(), cols.end());
    if (!columns_independent(generator, cols, scratch)) {
      CheckResult r = make_result("mds", false, CheckMode::Randomized,
                                  "sample " + std::to_string(s + 1) + ": columns " +
                                      describe_subset(cols) + " are dependent");
      r.seed = options.seed;
      return r;
    }
  }
  CheckResult r = make_result("mds", true, CheckMode::Randomized,
                              std::to_string(options.samples) + " sampled " + std::to_string(k) +
                                  "-subsets of " + std::to_string(n) +
                                  " columns nonsingular, 0 singular");
  r.seed = options.seed;
  return r;
}

CheckResult check_mds(const GrsCode& code, const MdsOptions& options) {
  if (options.mode != MdsMode::Structural) return check_mds(generator_matrix(code), options);
  const FieldCtx& f = code.ctx();
  Vec sorted = code.alpha();
  std::sort(sorted.begin(), sorted.end());
  const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  const bool nonzero =
      std::none_of(code.v().begin(), code.v().end(), [](Felt x) { return x.index == 0; });
  const std::size_t n = code.length(), k = code.k();
  std::ostringstream os;
  os << (code.extended() ? "extended " : "") << "GRS over GF(" << f.q() << ") with "
     << (distinct ? "distinct" : "repeated") << " points and " << (nonzero ? "nonzero" : "zero")
     << " multipliers; d = " << n - k + 1;
  return make_result("mds", distinct && nonzero, CheckMode::Structural, os.str());
}

CheckResult check_dual_identity(const Field& field, std::span<const Felt> alpha, std::size_t k) {
  const std::size_t n = alpha.size();
  if (k < 1 || k + 1 > n)
    return {"dual_identity", CheckStatus::Skipped, CheckMode::Exact,
            "k = " + std::to_string(k) + " outside [1, n-1] with n = " + std::to_string(n),
            std::nullopt};

  const Vec alpha_vec(alpha.begin(), alpha.end());
  const Vec u = dual_coefficients(field, alpha);
  const GrsCode code(field, alpha_vec, Vec(n, field->one()), k);
  const GrsCode dual(field, alpha_vec, u, n - k);
  const MatrixGF g = generator_matrix(code);
  const MatrixGF h = generator_matrix(dual);

  if (!is_zero(multiply(g, transpose(h))))
    return make_result("dual_identity", false, CheckMode::Exact,
                       "GRS_{n-k}(a,u) is not orthogonal to GRS_k(a,1)");
  const auto kernel = nullspace(g);
  if (kernel.size() != n - k || rank(h) != n - k)
    return make_result("dual_identity", false, CheckMode::Exact, "dimension count fails");
  // Every kernel vector must already lie in the rowspace of h.
  for (const Vec& b : kernel) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < h.rows(); ++i) rows.emplace_back(h.row(i).begin(), h.row(i).end());
    rows.push_back(b);
    if (rank(MatrixGF::from_rows(field, rows)) != n - k)
      return make_result("dual_identity", false, CheckMode::Exact,
                         "nullspace vector outside the dual rowspace");
  }
  return make_result("dual_identity", true, CheckMode::Exact,
                     "rowspace(GRS_" + std::to_string(n - k) + "(a,u)) = nullspace(GRS_" +
                         std::to_string(k) + "(a,1)), dimension " + std::to_string(n - k));
}

Felt orthogonality_sum(const Field& field, std::span<const Felt> alpha, std::span<const Felt> u,
                       std::span<const Felt> f, std::span<const Felt> g) {
  const FieldCtx& ctx = *field;
  if (alpha.size() != u.size()) throw Error(ErrorKind::LengthMismatch, "alpha and u differ");
  Felt acc = ctx.zero();
  for (std::size_t i = 0; i < alpha.size(); ++i)
    acc = ctx.add(acc, ctx.mul(ctx.mul(evaluate(ctx, f, alpha[i]), u[i]),
                               evaluate(ctx, g, alpha[i])));
  return acc;
}

CheckResult check_orthogonality(const Field& field, std::span<const Felt> alpha, std::size_t k) {
  const std::size_t n = alpha.size();
  if (k < 1 || k + 1 > n)
    return {"orthogonality", CheckStatus::Skipped, CheckMode::Exact,
            "k outside [1, n-1]", std::nullopt};
  const FieldCtx& f = *field;
  const Vec u = dual_coefficients(field, alpha);
  // Monomial pairs only depend on i + j, which ranges over [0, n-2].
  for (std::size_t s = 0; s + 2 <= n; ++s) {
    Felt acc = f.zero();
    for (std::size_t i = 0; i < n; ++i)
      acc = f.add(acc, f.mul(u[i], f.pow(alpha[i], static_cast<std::int64_t>(s))));
    if (acc.index != 0)
      return make_result("orthogonality", false, CheckMode::Exact,
                         "sum u_i a_i^" + std::to_string(s) + " is nonzero");
  }
  return make_result("orthogonality", true, CheckMode::Exact,
                     "sum u_i a_i^s = 0 for 0 <= s <= " + std::to_string(n - 2));
}

CharacterSumCheck check_character_sum_bound(const Field& field, std::span<const Felt> t) {
  const FieldCtx& f = *field;
  if (f.p() == 2)
    throw Error(ErrorKind::EvenCharacteristic, "the character sum bound needs q odd");
  if (t.empty()) throw Error(ErrorKind::InvalidArgument, "T must be nonempty");
  if (t.size() > 40) throw Error(ErrorKind::InvalidArgument, "|T| > 40 is out of range");
  Vec sorted(t.begin(), t.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::DuplicatePoints, "T must consist of distinct elements");

  std::vector<int> chi(f.q());
  for (std::uint32_t i = 0; i < f.q(); ++i) chi[i] = f.quadratic_character(Felt{i});
  std::uint64_t count = 0;
  for (std::uint32_t b = 0; b < f.q(); ++b) {
    const bool hit = std::all_of(t.begin(), t.end(),
                                 [&](Felt a) { return chi[f.sub(Felt{b}, a).index] == 1; });
    if (hit) ++count;
  }

  // Scaled by 2^m with m = |T| = n - 1:
  //   |2^m N - q| <= c sqrt(q) + m 2^{m-1},   c = (m - 2) 2^{m-1} + 1 >= 0.
  const std::int64_t m = static_cast<std::int64_t>(t.size());
  const i128 half = i128{1} << (m - 1);
  const i128 q = f.q();
  i128 deviation = (half * 2) * static_cast<i128>(count) - q;
  if (deviation < 0) deviation = -deviation;
  const i128 slack = deviation - m * half;
  const i128 c = (m - 2) * half + 1;
  const bool ok = slack <= 0 || slack * slack <= c * c * q;

  CharacterSumCheck out;
  out.count = count;
  out.expected = static_cast<double>(f.q()) / std::ldexp(1.0, static_cast<int>(m));
  out.radius = ((static_cast<double>(m) - 2) / 2 + std::ldexp(1.0, -static_cast<int>(m))) *
                   std::sqrt(static_cast<double>(f.q())) +
               static_cast<double>(m) / 2;
  std::ostringstream os;
  os.precision(6);
  os << "N = " << count << ", q/2^" << m << " = " << out.expected << ", radius = " << out.radius;
  out.result = make_result("character_sum_bound", ok, CheckMode::Exact, os.str());
  return out;
}

std::size_t minimum_distance(const MatrixGF& generator, std::uint64_t max_words) {
  const FieldCtx& f = generator.ctx();
  const std::size_t k = generator.rows(), n = generator.cols();
  std::uint64_t words = 1;
  for (std::size_t i = 0; i < k; ++i) {
    words *= f.q();
    if (words > max_words)
      throw Error(ErrorKind::BudgetExceeded, "q^k exceeds the enumeration budget");
  }

  // prefix[level] = sum of the first `level` scaled rows.
  std::vector<Vec> prefix(k + 1, Vec(n, f.zero()));
  std::vector<std::uint32_t> digits(k, 0);
  std::size_t best = n + 1;
  std::size_t level = 0;
  while (true) {
    while (level < k) {
      const Felt s{digits[level]};
      for (std::size_t j = 0; j < n; ++j)
        prefix[level + 1][j] = f.add(prefix[level][j], f.mul(s, generator(level, j)));
      ++level;
    }
    if (std::any_of(digits.begin(), digits.end(), [](std::uint32_t d) { return d != 0; })) {
      const auto weight = static_cast<std::size_t>(std::count_if(
          prefix[k].begin(), prefix[k].end(), [](Felt x) { return x.index != 0; }));
      best = std::min(best, weight);
    }
    // Odometer step, last digit fastest.
    std::size_t i = k;
    while (i > 0 && digits[i - 1] + 1 == f.q()) digits[--i] = 0;
    if (i == 0) break;
    ++digits[i - 1];
    level = i - 1;
  }
  return best;
}

}  // namespace mdsgrs
