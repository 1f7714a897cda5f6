#include "mdsgrs/gf.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mdsgrs/error.hpp"

namespace mdsgrs {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::BadSubfield: return "BadSubfield";
    case ErrorKind::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorKind::NonResidue: return "NonResidue";
    case ErrorKind::BadOrder: return "BadOrder";
    case ErrorKind::DuplicatePoints: return "DuplicatePoints";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::ExtendedDualUnsupported: return "ExtendedDualUnsupported";
    case ErrorKind::NoSubfieldSolution: return "NoSubfieldSolution";
    case ErrorKind::NotSelfDualizable: return "NotSelfDualizable";
    case ErrorKind::OddLength: return "OddLength";
    case ErrorKind::LengthTooLong: return "LengthTooLong";
    case ErrorKind::BadResidueClass: return "BadResidueClass";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  const auto factors = prime_factors(q);
  if (factors.size() != 1 || factors[0] > UINT32_MAX) return std::nullopt;
  std::uint32_t e = 0;
  while (q > 1) {
    q /= factors[0];
    ++e;
  }
  return std::pair{static_cast<std::uint32_t>(factors[0]), e};
}

namespace {

// Remainder of poly modulo a monic divisor, coefficients constant first.
std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> poly,
                                    std::span<const std::uint32_t> divisor, std::uint32_t p) {
  const std::size_t d = divisor.size() - 1;
  for (std::size_t top = poly.size(); top-- > d;) {
    const std::uint32_t lead = poly[top];
    if (lead == 0) continue;
    for (std::size_t i = 0; i <= d; ++i) {
      const std::uint64_t sub = static_cast<std::uint64_t>(lead) * divisor[i] % p;
      auto& c = poly[top - d + i];
      c = static_cast<std::uint32_t>((c + p - sub) % p);
    }
  }
  poly.resize(std::min(poly.size(), d));
  return poly;
}

}  // namespace

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
  if (poly.size() < 2 || poly.back() != 1) return false;
  const std::size_t deg = poly.size() - 1;
  std::vector<std::uint32_t> poly_vec(poly.begin(), poly.end());
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    // Enumerate every monic divisor candidate of degree d.
    std::vector<std::uint32_t> divisor(d + 1, 0);
    divisor[d] = 1;
    while (true) {
      const auto rem = poly_mod(poly_vec, divisor, p);
      if (std::all_of(rem.begin(), rem.end(), [](std::uint32_t c) { return c == 0; }))
        return false;
      std::size_t i = 0;
      while (i < d && ++divisor[i] == p) divisor[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t e) : p_(p), e_(e) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (e < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxFieldOrder)
      throw Error(ErrorKind::TooLarge, "field order exceeds " + std::to_string(kMaxFieldOrder));
  }
  q_ = static_cast<std::uint32_t>(q);

  place_.resize(e);
  place_[0] = 1;
  for (std::uint32_t i = 1; i < e; ++i) place_[i] = place_[i - 1] * p;

  if (e == 1) {
    modulus_ = {0, 1};
  } else {
    // Lexicographic order with the constant term most significant.
    modulus_.assign(e + 1, 0);
    modulus_[e] = 1;
    for (std::uint32_t n = 0; n < q_; ++n) {
      std::uint32_t rest = n;
      for (std::uint32_t i = e; i-- > 0;) {
        modulus_[i] = rest % p;
        rest /= p;
      }
      if (is_irreducible(modulus_, p)) break;
    }
  }

  const auto factors = prime_factors(q_ - 1);
  primitive_ = one();
  for (std::uint32_t idx = 1; idx < q_; ++idx) {
    const Felt g{idx};
    const bool generates = std::all_of(factors.begin(), factors.end(), [&](std::uint64_t f) {
      return pow_poly(g, (q_ - 1) / f) != one();
    });
    if (generates) {
      primitive_ = g;
      break;
    }
  }

  exp_.resize(2 * static_cast<std::size_t>(q_ - 1));
  log_.assign(q_, 0);
  Felt cur = one();
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    exp_[i] = exp_[i + q_ - 1] = cur.index;
    log_[cur.index] = i;
    cur = mul_poly(cur, primitive_);
  }

  nonresidue_ = zero();
  if (p_ != 2) {
    for (std::uint32_t idx = 2; idx < q_; ++idx) {
      if (quadratic_character(Felt{idx}) == -1) {
        nonresidue_ = Felt{idx};
        break;
      }
    }
  }
}

Felt FieldCtx::from_int(std::int64_t value) const noexcept {
  std::int64_t r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Felt{static_cast<std::uint32_t>(r)};
}

Felt FieldCtx::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != e_)
    throw Error(ErrorKind::LengthMismatch, "element needs " + std::to_string(e_) + " coefficients");
  std::uint32_t idx = 0;
  for (std::uint32_t i = 0; i < e_; ++i) {
    if (coeffs[i] >= p_)
      throw Error(ErrorKind::InvalidArgument, "coefficient out of range [0, p)");
    idx += coeffs[i] * place_[i];
  }
  return Felt{idx};
}

Felt FieldCtx::from_index(std::uint64_t index) const {
  if (index >= q_) throw Error(ErrorKind::InvalidArgument, "element index out of range");
  return Felt{static_cast<std::uint32_t>(index)};
}

std::vector<std::uint32_t> FieldCtx::coeffs(Felt x) const {
  std::vector<std::uint32_t> out(e_);
  std::uint32_t rest = x.index;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out[i] = rest % p_;
    rest /= p_;
  }
  return out;
}

Felt FieldCtx::add(Felt x, Felt y) const noexcept {
  if (p_ == 2) return Felt{x.index ^ y.index};
  if (e_ == 1) {
    const std::uint32_t s = x.index + y.index;
    return Felt{s >= p_ ? s - p_ : s};
  }
  std::uint32_t a = x.index, b = y.index, out = 0;
  for (std::uint32_t i = 0; i < e_; ++i) {
    std::uint32_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    out += s * place_[i];
    a /= p_;
    b /= p_;
  }
  return Felt{out};
}

Felt FieldCtx::neg(Felt x) const noexcept {
  if (p_ == 2) return x;
  if (e_ == 1) return Felt{x.index == 0 ? 0 : p_ - x.index};
  std::uint32_t a = x.index, out = 0;
  for (std::uint32_t i = 0; i < e_; ++i) {
    const std::uint32_t d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * place_[i];
    a /= p_;
  }
  return Felt{out};
}

Felt FieldCtx::sub(Felt x, Felt y) const noexcept { return add(x, neg(y)); }

Felt FieldCtx::mul(Felt x, Felt y) const noexcept {
  if (x.index == 0 || y.index == 0) return zero();
  return Felt{exp_[log_[x.index] + log_[y.index]]};
}

Felt FieldCtx::inv(Felt x) const {
  if (x.index == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const std::uint32_t l = log_[x.index];
  return Felt{exp_[l == 0 ? 0 : q_ - 1 - l]};
}

Felt FieldCtx::div(Felt x, Felt y) const { return mul(x, inv(y)); }

Felt FieldCtx::pow(Felt x, std::int64_t exponent) const {
  std::uint64_t mag;
  if (exponent < 0) {
    if (x.index == 0) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
    x = inv(x);
    mag = static_cast<std::uint64_t>(-(exponent + 1)) + 1;
  } else {
    mag = static_cast<std::uint64_t>(exponent);
  }
  Felt result = one();
  while (mag > 0) {
    if (mag & 1) result = mul(result, x);
    x = mul(x, x);
    mag >>= 1;
  }
  return result;
}

Felt FieldCtx::frobenius(Felt x, std::uint32_t times) const {
  for (std::uint32_t i = 0; i < times; ++i) x = pow(x, p_);
  return x;
}

std::uint64_t FieldCtx::order(Felt x) const {
  if (x.index == 0) throw Error(ErrorKind::InvalidArgument, "zero has no multiplicative order");
  const std::uint64_t n = q_ - 1;
  return n / std::gcd<std::uint64_t>(log_[x.index], n);
}

void FieldCtx::require_subfield(std::uint64_t r) const {
  std::uint64_t power = p_;
  for (std::uint32_t d = 1; d <= e_; ++d, power *= p_) {
    if (power == r) {
      if (e_ % d == 0) return;
      break;
    }
  }
  throw Error(ErrorKind::BadSubfield, "GF(" + std::to_string(r) + ") is not a subfield of GF(" +
                                          std::to_string(q_) + ")");
}

bool FieldCtx::in_subfield(Felt x, std::uint64_t r) const {
  require_subfield(r);
  return pow(x, static_cast<std::int64_t>(r)) == x;
}

int FieldCtx::quadratic_character(Felt x) const {
  if (p_ == 2)
    throw Error(ErrorKind::EvenCharacteristic, "quadratic character is undefined for q even");
  if (x.index == 0) return 0;
  return pow(x, (q_ - 1) / 2) == one() ? 1 : -1;
}

bool FieldCtx::is_square(Felt x) const {
  return p_ == 2 || quadratic_character(x) != -1;
}

Felt FieldCtx::canonical_nonresidue() const {
  if (p_ == 2) throw Error(ErrorKind::EvenCharacteristic, "every element is a square for q even");
  return nonresidue_;
}

Felt FieldCtx::sqrt(Felt x) const {
  if (x.index == 0) return zero();
  if (p_ == 2) return pow(x, q_ / 2);
  if (quadratic_character(x) != 1) throw Error(ErrorKind::NonResidue, "element is not a square");

  // Tonelli-Shanks over GF(q): q - 1 = 2^s * t with t odd.
  std::uint64_t t = q_ - 1;
  std::uint32_t s = 0;
  while (t % 2 == 0) {
    t /= 2;
    ++s;
  }
  Felt c = pow(nonresidue_, static_cast<std::int64_t>(t));
  Felt y = pow(x, static_cast<std::int64_t>((t + 1) / 2));
  Felt b = pow(x, static_cast<std::int64_t>(t));
  std::uint32_t m = s;
  while (b != one()) {
    std::uint32_t i = 0;
    for (Felt b2 = b; b2 != one(); b2 = mul(b2, b2)) ++i;
    Felt w = c;
    for (std::uint32_t j = 0; j + i + 1 < m; ++j) w = mul(w, w);
    y = mul(y, w);
    c = mul(w, w);
    b = mul(b, c);
    m = i;
  }
  return std::min(y, neg(y));
}

std::vector<Felt> FieldCtx::roots_of_unity(std::uint64_t m) const {
  if (m == 0 || (q_ - 1) % m != 0)
    throw Error(ErrorKind::BadOrder,
                std::to_string(m) + " does not divide q - 1 = " + std::to_string(q_ - 1));
  const Felt g = pow(primitive_, static_cast<std::int64_t>((q_ - 1) / m));
  std::vector<Felt> out;
  out.reserve(m);
  Felt cur = one();
  for (std::uint64_t i = 0; i < m; ++i) {
    out.push_back(cur);
    cur = mul(cur, g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Felt> FieldCtx::elements() const {
  std::vector<Felt> out(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out[i] = Felt{i};
  return out;
}

std::vector<Felt> FieldCtx::subfield_elements(std::uint64_t r) const {
  require_subfield(r);
  std::vector<Felt> out;
  out.reserve(r);
  for (std::uint32_t i = 0; i < q_; ++i)
    if (pow(Felt{i}, static_cast<std::int64_t>(r)) == Felt{i}) out.push_back(Felt{i});
  return out;
}

Felt FieldCtx::mul_poly(Felt x, Felt y) const {
  const auto a = coeffs(x);
  const auto b = coeffs(y);
  std::vector<std::uint32_t> prod(2 * e_ - 1, 0);
  for (std::uint32_t i = 0; i < e_; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < e_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p_);
  }
  if (e_ > 1) prod = poly_mod(std::move(prod), modulus_, p_);
  prod.resize(e_, 0);
  return from_coeffs(prod);
}

Felt FieldCtx::pow_poly(Felt x, std::uint64_t exponent) const {
  Felt result = one();
  while (exponent > 0) {
    if (exponent & 1) result = mul_poly(result, x);
    x = mul_poly(x, x);
    exponent >>= 1;
  }
  return result;
}

Field make_field(std::uint32_t p, std::uint32_t e) { return std::make_shared<const FieldCtx>(p, e); }

Field make_field_of_order(std::uint64_t q) {
  const auto pe = prime_power(q);
  if (!pe) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  return make_field(pe->first, pe->second);
}

}  // namespace mdsgrs
