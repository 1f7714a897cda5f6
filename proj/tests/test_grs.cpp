#include <doctest.h>

#include <random>

#include "mdsgrs/error.hpp"
#include "mdsgrs/grs.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace mdsgrs;
using support::expect_error;
using support::ints;

namespace {

Vec ones(std::size_t n) { return Vec(n, Felt{1}); }

// Row space of `a` contained in the row space of `b` and of equal rank.
bool same_row_space(const MatrixGF& a, const MatrixGF& b) {
  return a.cols() == b.cols() && row_equivalent(rref(a), rref(b));
}

MatrixGF basis_matrix(const Field& f, const std::vector<Vec>& rows, std::size_t cols) {
  if (rows.empty()) return MatrixGF(f, 0, cols);
  return MatrixGF::from_rows(f, rows);
}

}  // namespace

TEST_CASE("dual_coefficients examples") {
  const Field f5 = make_field(5, 1);
  CHECK(dual_coefficients(f5, ints({0, 1})) == ints({4, 1}));
  CHECK(dual_coefficients(f5, ints({0, 1, 2})) == ints({3, 4, 3}));
  CHECK(dual_coefficients(f5, ints({0, 1, 2, 3, 4})) == ints({4, 4, 4, 4, 4}));
  expect_error(ErrorKind::DuplicatePoints, [&] { dual_coefficients(f5, ints({1, 1})); });
}

TEST_CASE("dual coefficients agree with a schoolbook product") {
  std::mt19937 rng(5);
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{5, 1}, {3, 2}, {13, 1}, {5, 2}, {2, 3}}) {
    const Field f = make_field(p, e);
    const oracle::NaiveField naive{p, e, f->modulus()};
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t n = 2 + rng() % (f->q() - 1);
      const Vec a = support::random_points(f, n, rng);
      const Vec u = dual_coefficients(f, a);
      for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t prod = 1;
        for (std::size_t j = 0; j < n; ++j)
          if (j != i) prod = naive.mul(prod, naive.sub(a[i].index, a[j].index));
        CHECK(u[i].index == naive.inv(prod));
      }
    }
  }
}

TEST_CASE("generator_matrix examples") {
  const Field f5 = make_field(5, 1);
  CHECK(generator_matrix(GrsCode(f5, ints({0, 1}), ints({2, 1}), 1)) ==
        MatrixGF::from_rows(f5, {ints({2, 1})}));
  CHECK(generator_matrix(GrsCode(f5, ints({0, 1, 2}), ones(3), 2, true)) ==
        MatrixGF::from_rows(f5, {ints({1, 1, 1, 0}), ints({0, 1, 2, 1})}));

  std::mt19937 rng(8);
  for (std::uint64_t q : {5u, 8u, 9u, 13u}) {
    const Field f = make_field_of_order(q);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 1 + rng() % q;
      const bool ext = trial % 2 == 1;
      const std::size_t k = 1 + rng() % (n + (ext ? 1 : 0));
      const GrsCode code(f, support::random_points(f, n, rng), support::random_vec(f, n, rng, true), k, ext);
      const MatrixGF g = generator_matrix(code);
      CHECK(g.rows() == k);
      CHECK(g.cols() == code.length());
      CHECK(rank(g) == k);
    }
  }
}

TEST_CASE("GrsCode rejects invalid data") {
  const Field f5 = make_field(5, 1);
  expect_error(ErrorKind::DuplicatePoints, [&] { GrsCode(f5, ints({1, 1}), ones(2), 1); });
  expect_error(ErrorKind::LengthMismatch, [&] { GrsCode(f5, ints({0, 1}), ones(3), 1); });
  expect_error(ErrorKind::InvalidArgument, [&] { GrsCode(f5, ints({0, 1}), ints({1, 0}), 1); });
  expect_error(ErrorKind::InvalidArgument, [&] { GrsCode(f5, ints({0, 1}), ones(2), 3); });
  expect_error(ErrorKind::InvalidArgument, [&] { GrsCode(f5, ints({0, 1}), ones(2), 0); });
  CHECK_NOTHROW(GrsCode(f5, ints({0, 1}), ones(2), 3, true));
}

TEST_CASE("encode examples") {
  const Field f5 = make_field(5, 1);
  const GrsCode plain(f5, ints({0, 1, 2, 3}), ones(4), 2);
  CHECK(encode(plain, ints({0, 1})) == ints({0, 1, 2, 3}));
  CHECK(encode(plain, ints({0, 0})) == ints({0, 0, 0, 0}));
  const GrsCode ext(f5, ints({0, 1, 2}), ones(3), 2, true);
  CHECK(encode(ext, ints({0, 1})) == ints({0, 1, 2, 1}));
  expect_error(ErrorKind::LengthMismatch, [&] { encode(plain, ints({1})); });
}

TEST_CASE("encode is linear and matches the generator matrix") {
  std::mt19937 rng(21);
  for (std::uint64_t q : {7u, 9u, 16u, 25u}) {
    const Field f = make_field_of_order(q);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 2 + rng() % (q - 1);
      const bool ext = trial % 3 == 0;
      const std::size_t k = 1 + rng() % n;
      const GrsCode code(f, support::random_points(f, n, rng), support::random_vec(f, n, rng, true), k, ext);
      const MatrixGF g = generator_matrix(code);
      const Vec a = support::random_vec(f, k, rng), b = support::random_vec(f, k, rng);
      Vec sum(k);
      for (std::size_t i = 0; i < k; ++i) sum[i] = f->add(a[i], b[i]);
      const Vec ca = encode(code, a), cb = encode(code, b), cs = encode(code, sum);
      for (std::size_t j = 0; j < code.length(); ++j) CHECK(cs[j] == f->add(ca[j], cb[j]));
      CHECK(mdsgrs::apply(transpose(g), a) == ca);
    }
  }
}

TEST_CASE("dual_code examples") {
  const Field f5 = make_field(5, 1);
  const GrsCode d = dual_code(GrsCode(f5, ints({0, 1}), ones(2), 1));
  CHECK(d.k() == 1);
  CHECK(d.alpha() == ints({0, 1}));
  CHECK(d.v() == ints({4, 1}));

  const GrsCode ext(f5, f5->elements(), ones(5), 2, true);
  const GrsCode de = dual_code(ext);
  CHECK(de.extended());
  CHECK(de.k() == 4);
  CHECK(de.alpha() == f5->elements());
  CHECK(de.v() == ones(5));

  expect_error(ErrorKind::ExtendedDualUnsupported,
               [&] { dual_code(GrsCode(f5, ints({0, 1, 2}), ones(3), 2, true)); });
  expect_error(ErrorKind::ExtendedDualUnsupported,
               [&] { dual_code(GrsCode(f5, f5->elements(), ints({1, 1, 1, 1, 2}), 2, true)); });
  expect_error(ErrorKind::ExtendedDualUnsupported,
               [&] { dual_code(GrsCode(f5, f5->elements(), ones(5), 6, true)); });
}

TEST_CASE("plain dual is the nullspace of the generator matrix, for any nonzero v") {
  std::mt19937 rng(77);
  for (std::uint64_t q : {5u, 8u, 9u, 13u, 25u, 27u}) {
    const Field f = make_field_of_order(q);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 2 + rng() % std::min<std::uint64_t>(q - 1, 10);
      const std::size_t k = 1 + rng() % (n - 1);
      const GrsCode code(f, support::random_points(f, n, rng), support::random_vec(f, n, rng, true), k);
      const GrsCode dual = dual_code(code);
      const MatrixGF g = generator_matrix(code), h = generator_matrix(dual);
      CHECK(dual.k() == n - k);
      CHECK(is_zero(multiply(g, transpose(h))));
      CHECK(same_row_space(h, basis_matrix(f, nullspace(g), n)));
      // Biduality.
      CHECK(same_row_space(generator_matrix(dual_code(dual)), g));
    }
  }
}

TEST_CASE("extended dual inner products vanish") {
  for (std::uint64_t q : {3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u}) {
    const Field f = make_field_of_order(q);
    const Vec all = f->elements();
    // Power sums over the whole field: zero below q-1, -1 at q-1.
    for (std::uint64_t s = 1; s <= q - 1; ++s) {
      Felt sum = f->zero();
      for (Felt x : all) sum = f->add(sum, f->pow(x, static_cast<std::int64_t>(s)));
      CHECK(sum == (s == q - 1 ? f->from_int(-1) : f->zero()));
    }
    for (std::size_t k = 1; k + 1 <= q; ++k) {
      const GrsCode code(f, all, ones(q), k, true);
      const GrsCode dual = dual_code(code);
      CHECK(dual.k() == q - k + 1);
      CHECK(is_zero(multiply(generator_matrix(code), transpose(generator_matrix(dual)))));
    }
  }
}

TEST_CASE("orthogonality sum vanishes on 1000 random instances") {
  std::mt19937 rng(1000);
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields{{5, 1}, {3, 2}, {13, 1}, {5, 2}};
  int instances = 0;
  for (int trial = 0; trial < 250; ++trial)
    for (auto [p, e] : fields) {
      const Field f = make_field(p, e);
      const oracle::NaiveField naive{p, e, f->modulus()};
      const std::size_t n = 2 + rng() % (f->q() - 1);
      const std::size_t k = 1 + rng() % (n - 1);
      const Vec a = support::random_points(f, n, rng);
      const Vec u = dual_coefficients(f, a);
      const Vec fp = support::random_vec(f, k, rng), gp = support::random_vec(f, n - k, rng);
      auto eval = [&](const Vec& poly, std::uint32_t x) {
        std::uint32_t acc = 0, power = 1;
        for (Felt c : poly) {
          acc = naive.add(acc, naive.mul(c.index, power));
          power = naive.mul(power, x);
        }
        return acc;
      };
      std::uint32_t sum = 0;
      for (std::size_t i = 0; i < n; ++i)
        sum = naive.add(sum, naive.mul(naive.mul(eval(fp, a[i].index), u[i].index), eval(gp, a[i].index)));
      CHECK(sum == 0);
      ++instances;
    }
  CHECK(instances == 1000);
}
