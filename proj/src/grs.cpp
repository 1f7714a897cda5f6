#include "mdsgrs/grs.hpp"

#include <algorithm>
#include <string>

#include "mdsgrs/error.hpp"

namespace mdsgrs {

namespace {

void require_distinct(std::span<const Felt> points) {
  Vec sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::DuplicatePoints, "evaluation points must be distinct");
}

}  // namespace

GrsCode::GrsCode(Field field, Vec alpha, Vec v, std::size_t k, bool extended)
    : field_(std::move(field)), alpha_(std::move(alpha)), v_(std::move(v)), k_(k),
      extended_(extended) {
  if (alpha_.empty()) throw Error(ErrorKind::InvalidArgument, "a code needs evaluation points");
  if (alpha_.size() != v_.size())
    throw Error(ErrorKind::LengthMismatch, "alpha and v must have equal length");
  for (Felt x : alpha_)
    if (x.index >= field_->q()) throw Error(ErrorKind::InvalidArgument, "point outside the field");
  for (Felt x : v_) {
    if (x.index >= field_->q())
      throw Error(ErrorKind::InvalidArgument, "multiplier outside the field");
    if (x.index == 0) throw Error(ErrorKind::InvalidArgument, "column multipliers must be nonzero");
  }
  require_distinct(alpha_);
  if (k_ < 1 || k_ > length())
    throw Error(ErrorKind::InvalidArgument,
                "dimension " + std::to_string(k_) + " outside [1, " + std::to_string(length()) + "]");
}

Vec dual_coefficients(const Field& field, std::span<const Felt> alpha) {
  if (alpha.size() < 2) throw Error(ErrorKind::InvalidArgument, "need at least two points");
  require_distinct(alpha);
  const FieldCtx& f = *field;
  Vec u(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    Felt prod = f.one();
    for (std::size_t j = 0; j < alpha.size(); ++j)
      if (j != i) prod = f.mul(prod, f.sub(alpha[i], alpha[j]));
    u[i] = f.inv(prod);
  }
  return u;
}

MatrixGF generator_matrix(const GrsCode& code) {
  const FieldCtx& f = code.ctx();
  MatrixGF g(code.field(), code.k(), code.length());
  for (std::size_t j = 0; j < code.n(); ++j) {
    Felt entry = code.v()[j];
    for (std::size_t i = 0; i < code.k(); ++i) {
      g(i, j) = entry;
      entry = f.mul(entry, code.alpha()[j]);
    }
  }
  if (code.extended()) g(code.k() - 1, code.n()) = f.one();
  return g;
}

Felt evaluate(const FieldCtx& f, std::span<const Felt> poly, Felt x) {
  Felt acc = f.zero();
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
  return acc;
}

Vec encode(const GrsCode& code, std::span<const Felt> message) {
  if (message.size() != code.k())
    throw Error(ErrorKind::LengthMismatch,
                "message needs exactly k = " + std::to_string(code.k()) + " coefficients");
  const FieldCtx& f = code.ctx();
  Vec word(code.length());
  for (std::size_t i = 0; i < code.n(); ++i)
    word[i] = f.mul(code.v()[i], evaluate(f, message, code.alpha()[i]));
  if (code.extended()) word[code.n()] = message.back();
  return word;
}

GrsCode dual_code(const GrsCode& code) {
  const FieldCtx& f = code.ctx();
  if (!code.extended()) {
    if (code.k() == code.n())
      throw Error(ErrorKind::InvalidArgument, "the dual of a full-length code is the zero code");
    const Vec u = dual_coefficients(code.field(), code.alpha());
    Vec w(code.n());
    for (std::size_t i = 0; i < code.n(); ++i) w[i] = f.div(u[i], code.v()[i]);
    return GrsCode(code.field(), code.alpha(), std::move(w), code.n() - code.k());
  }

  const bool unit_v =
      std::all_of(code.v().begin(), code.v().end(), [&](Felt x) { return x == f.one(); });
  if (!unit_v)
    throw Error(ErrorKind::ExtendedDualUnsupported, "extended dual needs all-one multipliers");
  if (code.n() != f.q())
    throw Error(ErrorKind::ExtendedDualUnsupported,
                "extended dual needs every field element as an evaluation point");
  if (code.k() < 1 || code.k() > f.q() - 1)
    throw Error(ErrorKind::ExtendedDualUnsupported, "extended dual needs 1 <= k <= q - 1");
  return GrsCode(code.field(), code.alpha(), code.v(), f.q() - code.k() + 1, true);
}

}  // namespace mdsgrs
