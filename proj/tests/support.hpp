#pragma once

#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <random>

#include "mdsgrs/error.hpp"
#include "mdsgrs/gf.hpp"
#include "mdsgrs/linalg.hpp"

namespace support {

template <class Fn>
void expect_error(mdsgrs::ErrorKind kind, Fn&& fn) {
  try {
    fn();
    FAIL("expected " << mdsgrs::to_string(kind));
  } catch (const mdsgrs::Error& err) {
    CHECK(err.kind() == kind);
  }
}

inline mdsgrs::Vec ints(std::initializer_list<std::uint32_t> idx) {
  mdsgrs::Vec out;
  for (auto i : idx) out.push_back(mdsgrs::Felt{i});
  return out;
}

/// n distinct points of the field, uniformly at random.
inline mdsgrs::Vec random_points(const mdsgrs::Field& f, std::size_t n, std::mt19937& rng) {
  mdsgrs::Vec all = f->elements();
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(n);
  return all;
}

inline mdsgrs::Vec random_vec(const mdsgrs::Field& f, std::size_t n, std::mt19937& rng,
                              bool nonzero = false) {
  std::uniform_int_distribution<std::uint32_t> pick(nonzero ? 1 : 0, f->q() - 1);
  mdsgrs::Vec out(n);
  for (auto& x : out) x = mdsgrs::Felt{pick(rng)};
  return out;
}

}  // namespace support
