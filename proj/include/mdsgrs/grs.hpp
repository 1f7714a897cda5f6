#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mdsgrs/gf.hpp"
#include "mdsgrs/linalg.hpp"

namespace mdsgrs {

/// Generalized Reed-Solomon code GRS_k(alpha, v): codewords
/// (v_1 f(alpha_1), ..., v_n f(alpha_n)) for deg f < k. When `extended` is
/// set the coefficient f_{k-1} is appended as a last coordinate, so the block
/// length is n + 1.
class GrsCode {
 public:
  /// Throws DuplicatePoints, InvalidArgument (zero multiplier, bad k) or
  /// LengthMismatch (|v| != |alpha|).
  GrsCode(Field field, Vec alpha, Vec v, std::size_t k, bool extended = false);

  const Field& field() const noexcept { return field_; }
  const FieldCtx& ctx() const noexcept { return *field_; }
  const Vec& alpha() const noexcept { return alpha_; }
  const Vec& v() const noexcept { return v_; }
  std::size_t k() const noexcept { return k_; }
  bool extended() const noexcept { return extended_; }
  /// Number of evaluation points.
  std::size_t n() const noexcept { return alpha_.size(); }
  /// Block length N = n (+1 when extended).
  std::size_t length() const noexcept { return alpha_.size() + (extended_ ? 1 : 0); }

 private:
  Field field_;
  Vec alpha_;
  Vec v_;
  std::size_t k_;
  bool extended_;
};

/// u_i = prod_{j != i} (alpha_i - alpha_j)^{-1}.
Vec dual_coefficients(const Field& field, std::span<const Felt> alpha);

MatrixGF generator_matrix(const GrsCode& code);

/// `message` holds the k coefficients of f, constant term first.
Vec encode(const GrsCode& code, std::span<const Felt> message);

/// Plain codes: GRS_{n-k}(alpha, u / v). Extended codes with v = 1 and alpha
/// covering all of GF(q): the extended GRS_{q-k+1}(alpha, 1).
GrsCode dual_code(const GrsCode& code);

/// Horner evaluation of a coefficient vector (constant term first).
Felt evaluate(const FieldCtx& f, std::span<const Felt> poly, Felt x);

}  // namespace mdsgrs
