#include <doctest.h>

#include <cmath>
#include <random>

#include "mdsgrs/grs.hpp"
#include "mdsgrs/verify.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace mdsgrs;
using support::expect_error;
using support::ints;

namespace {

Vec ones(std::size_t n) { return Vec(n, Felt{1}); }

// All subsets of `pool` with the given size, in lexicographic order of positions.
template <class Fn>
void for_each_subset(const Vec& pool, std::size_t size, Fn&& fn) {
  std::vector<std::size_t> pos(size);
  for (std::size_t i = 0; i < size; ++i) pos[i] = i;
  if (size > pool.size()) return;
  while (true) {
    Vec subset;
    for (auto i : pos) subset.push_back(pool[i]);
    fn(subset);
    std::size_t i = size;
    while (i > 0 && pos[i - 1] == pool.size() - size + i - 1) --i;
    if (i == 0) return;
    ++pos[i - 1];
    for (std::size_t j = i; j < size; ++j) pos[j] = pos[j - 1] + 1;
  }
}

// Independent count with the naive field and its table of squares.
std::uint64_t naive_count(const oracle::NaiveField& naive, const Vec& t) {
  const auto squares = naive.nonzero_squares();
  std::uint64_t n = 0;
  for (std::uint32_t b = 0; b < naive.q(); ++b) {
    bool all = true;
    for (Felt a : t) all = all && squares.count(naive.sub(b, a.index));
    n += all;
  }
  return n;
}

}  // namespace

TEST_CASE("check_self_dual examples") {
  const Field f5 = make_field(5, 1);
  CHECK(check_self_dual(MatrixGF::from_rows(f5, {ints({2, 1})})).passed());
  const CheckResult bad = check_self_dual(MatrixGF::from_rows(f5, {ints({1, 1})}));
  CHECK(bad.status == CheckStatus::Fail);
  CHECK(bad.name == "self_dual");
  // Wrong shape and rank deficiency fail too.
  CHECK_FALSE(check_self_dual(MatrixGF::from_rows(f5, {ints({2, 1, 0})})).passed());
  CHECK_FALSE(check_self_dual(MatrixGF::from_rows(f5, {ints({2, 1, 0, 0}), ints({4, 2, 0, 0})})).passed());
  CHECK(check_self_dual(GrsCode(f5, ints({0, 1}), ints({2, 1}), 1)).passed());
}

TEST_CASE("check_mds examples") {
  const Field f5 = make_field(5, 1);
  const GrsCode rs(f5, ints({0, 1, 2, 3}), ones(4), 2);
  CHECK(check_mds(rs, {}).passed());
  CHECK(check_mds(rs, {}).mode == CheckMode::Exact);
  const MatrixGF id = MatrixGF::from_rows(f5, {ints({1, 0, 0}), ints({0, 1, 0})});
  CHECK(check_mds(id, {}).status == CheckStatus::Fail);

  MdsOptions randomized{.mode = MdsMode::Randomized, .samples = 500, .seed = 9};
  const CheckResult r = check_mds(rs, randomized);
  CHECK(r.passed());
  CHECK(r.seed == std::optional<std::uint64_t>{9});
  CHECK(check_mds(id, randomized).status == CheckStatus::Fail);

  MdsOptions structural{.mode = MdsMode::Structural};
  CHECK(check_mds(rs, structural).passed());
  CHECK(check_mds(id, structural).status == CheckStatus::Skipped);

  MdsOptions tiny{.budget = 5};
  expect_error(ErrorKind::BudgetExceeded, [&] { check_mds(rs, tiny); });
}

TEST_CASE("randomized MDS check is reproducible from its seed") {
  const Field f13 = make_field(13, 1);
  // Almost MDS: the only singular pairs involve the repeated column.
  const MatrixGF g = MatrixGF::from_rows(f13, {ints({1, 1, 1, 1, 1, 1, 1, 0}),
                                               ints({0, 1, 2, 3, 4, 5, 6, 0})});
  MdsOptions opts{.mode = MdsMode::Randomized, .samples = 200, .seed = 42};
  const CheckResult a = check_mds(g, opts), b = check_mds(g, opts);
  CHECK(a.status == b.status);
  CHECK(a.detail == b.detail);
}

TEST_CASE("exact MDS agrees with minimum distance by enumeration") {
  std::mt19937 rng(31);
  for (std::uint64_t q : {3u, 4u, 5u, 7u, 8u, 9u}) {
    const Field f = make_field_of_order(q);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t cols = 2 + rng() % 5;
      const std::size_t k = 1 + rng() % std::min<std::size_t>(cols - 1, 3);
      MatrixGF g(f, k, cols);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < cols; ++j) g(i, j) = support::random_vec(f, 1, rng)[0];
      if (rank(g) < k) continue;
      const bool mds = check_mds(g, {}).passed();
      CHECK(mds == (minimum_distance(g) == cols - k + 1));
    }
  }
  const Field f5 = make_field(5, 1);
  CHECK(minimum_distance(generator_matrix(GrsCode(f5, ints({0, 1, 2, 3}), ones(4), 2))) == 3);
  CHECK(minimum_distance(MatrixGF::from_rows(f5, {ints({1, 0, 0}), ints({0, 1, 0})})) == 1);
  expect_error(ErrorKind::BudgetExceeded,
               [&] { minimum_distance(generator_matrix(GrsCode(f5, ints({0, 1, 2, 3}), ones(4), 3)), 100); });
}

TEST_CASE("check_dual_identity examples") {
  const Field f5 = make_field(5, 1);
  CHECK(check_dual_identity(f5, ints({0, 1, 2}), 1).passed());
  const Vec u = dual_coefficients(f5, ints({0, 1, 2}));
  CHECK(f5->add(f5->add(u[0], u[1]), u[2]) == f5->zero());
  CHECK(check_dual_identity(f5, ints({0, 1, 2}), 3).status == CheckStatus::Skipped);
  CHECK(check_dual_identity(f5, ints({0, 1, 2}), 0).status == CheckStatus::Skipped);
}

TEST_CASE("check_dual_identity holds for every point set of size at most 5 over GF(9)") {
  const Field f9 = make_field(3, 2);
  int checked = 0;
  for (std::size_t size = 2; size <= 5; ++size)
    for_each_subset(f9->elements(), size, [&](const Vec& a) {
      for (std::size_t k = 1; k < size; ++k) {
        REQUIRE(check_dual_identity(f9, a, k).passed());
        REQUIRE(check_orthogonality(f9, a, k).passed());
        ++checked;
      }
    });
  CHECK(checked > 0);
}

TEST_CASE("check_dual_identity on random instances over GF(25) and GF(9)") {
  std::mt19937 rng(25);
  const Field f25 = make_field(5, 2), f9 = make_field(3, 2);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng() % 10;
    const Vec a = support::random_points(f25, n, rng);
    CHECK(check_dual_identity(f25, a, 1 + rng() % (n - 1)).passed());
  }
  for (int trial = 0; trial < 200; ++trial)
    CHECK(check_dual_identity(f9, support::random_points(f9, 4, rng), 2).passed());
}

TEST_CASE("orthogonality_sum") {
  const Field f5 = make_field(5, 1);
  const Vec a = ints({0, 1, 2});
  const Vec u = dual_coefficients(f5, a);
  CHECK(orthogonality_sum(f5, a, u, ints({1}), ints({1})) == f5->zero());
  CHECK(orthogonality_sum(f5, a, u, ints({3, 2}), ints({0})) == f5->zero());
  // Degree total n-1 is outside the identity's range.
  CHECK(orthogonality_sum(f5, a, u, ints({0, 1}), ints({0, 1})) != f5->zero());
}

TEST_CASE("check_character_sum_bound examples") {
  const Field f13 = make_field(13, 1);
  const auto two = check_character_sum_bound(f13, ints({1, 2}));
  CHECK(two.count == 2);
  CHECK(two.result.passed());
  CHECK(two.expected == doctest::Approx(13.0 / 4));
  CHECK(two.radius == doctest::Approx(std::sqrt(13.0) / 4 + 1));

  // Equality case: |6 - 6.5| = 0.5 = radius.
  const auto one = check_character_sum_bound(f13, ints({0}));
  CHECK(one.count == 6);
  CHECK(one.result.passed());

  expect_error(ErrorKind::DuplicatePoints, [&] { check_character_sum_bound(f13, ints({1, 1})); });
  expect_error(ErrorKind::InvalidArgument, [&] { check_character_sum_bound(f13, Vec{}); });
  expect_error(ErrorKind::EvenCharacteristic,
               [] { check_character_sum_bound(make_field(2, 3), ints({1})); });
}

TEST_CASE("character-sum bound holds for all subsets of size at most 3") {
  for (std::uint64_t q : {13u, 17u, 25u, 29u}) {
    const Field f = make_field_of_order(q);
    const auto pe = *prime_power(q);
    const oracle::NaiveField naive{pe.first, pe.second, f->modulus()};
    CAPTURE(q);
    for (std::size_t size = 1; size <= 3; ++size)
      for_each_subset(f->elements(), size, [&](const Vec& t) {
        const auto res = check_character_sum_bound(f, t);
        REQUIRE(res.result.passed());
        REQUIRE(res.count == naive_count(naive, t));
      });
  }
}

TEST_CASE("character-sum bound holds on random subsets of size 4 and 5") {
  std::mt19937 rng(37);
  for (std::uint64_t q : {29u, 37u}) {
    const Field f = make_field_of_order(q);
    const oracle::NaiveField naive{static_cast<std::uint32_t>(q), 1, f->modulus()};
    for (std::size_t size : {4u, 5u})
      for (int trial = 0; trial < 100; ++trial) {
        const Vec t = support::random_points(f, size, rng);
        const auto res = check_character_sum_bound(f, t);
        CHECK(res.result.passed());
        CHECK(res.count == naive_count(naive, t));
        // Floating restatement of the bound, with slack for the equality case.
        CHECK(std::abs(static_cast<double>(res.count) - res.expected) <= res.radius + 1e-9);
      }
  }
}

TEST_CASE("binomial and report plumbing") {
  CHECK(binomial(18, 9) == 48620);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(200, 100) == UINT64_MAX);

  VerificationReport report;
  report.add({.name = "a", .status = CheckStatus::Pass});
  report.add({.name = "b", .status = CheckStatus::Skipped});
  CHECK(report.overall());
  report.add({.name = "c", .status = CheckStatus::Fail});
  CHECK_FALSE(report.overall());
}
