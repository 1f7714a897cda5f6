#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace mdsgrs {

/// Largest field order accepted by make_field.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

/// A field element, addressed by its canonical index sum(coeffs[i] * p^i).
/// Index 0 is zero and index 1 is one in every field.
struct Felt {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(const Felt&, const Felt&) = default;
};

bool is_prime(std::uint64_t n);
/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// (p, e) with q = p^e, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

/// GF(p^e) represented as GF(p)[x] / (modulus), with log/antilog tables
/// built at construction. Immutable afterwards and safe to share.
class FieldCtx {
 public:
  FieldCtx(std::uint32_t p, std::uint32_t e);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t e() const noexcept { return e_; }
  std::uint32_t q() const noexcept { return q_; }
  /// e+1 coefficients, constant term first. For e = 1 this is x.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Felt zero() const noexcept { return Felt{0}; }
  Felt one() const noexcept { return Felt{1}; }
  /// Image of an integer in the prime subfield.
  Felt from_int(std::int64_t value) const noexcept;
  Felt from_coeffs(std::span<const std::uint32_t> coeffs) const;
  Felt from_index(std::uint64_t index) const;
  std::vector<std::uint32_t> coeffs(Felt x) const;

  Felt add(Felt x, Felt y) const noexcept;
  Felt sub(Felt x, Felt y) const noexcept;
  Felt neg(Felt x) const noexcept;
  Felt mul(Felt x, Felt y) const noexcept;
  Felt inv(Felt x) const;
  Felt div(Felt x, Felt y) const;
  /// Square-and-multiply; negative exponents invert first.
  Felt pow(Felt x, std::int64_t exponent) const;
  /// x -> x^p applied `times` times.
  Felt frobenius(Felt x, std::uint32_t times = 1) const;

  /// Multiplicative order of a nonzero element.
  std::uint64_t order(Felt x) const;
  Felt primitive_element() const noexcept { return primitive_; }

  /// True iff x^r = x. Throws BadSubfield unless r = p^d with d | e.
  bool in_subfield(Felt x, std::uint64_t r) const;
  void require_subfield(std::uint64_t r) const;

  /// -1, 0 or +1. Throws EvenCharacteristic when p = 2.
  int quadratic_character(Felt x) const;
  bool is_square(Felt x) const;
  /// Root with the smaller index. Throws NonResidue when none exists.
  Felt sqrt(Felt x) const;
  /// Smallest-index element of character -1 (odd q only).
  Felt canonical_nonresidue() const;

  /// The m-th roots of unity sorted by index. Throws BadOrder unless m | q-1.
  std::vector<Felt> roots_of_unity(std::uint64_t m) const;
  std::vector<Felt> elements() const;
  /// Elements of GF(r) inside this field, in index order.
  std::vector<Felt> subfield_elements(std::uint64_t r) const;

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) noexcept {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.modulus_ == b.modulus_;
  }

 private:
  Felt mul_poly(Felt x, Felt y) const;
  Felt pow_poly(Felt x, std::uint64_t exponent) const;

  std::uint32_t p_;
  std::uint32_t e_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> place_;  // p^i
  Felt primitive_;
  Felt nonresidue_;  // zero when q is even
  std::vector<std::uint32_t> exp_;  // exp_[i] = index of primitive^i, length 2(q-1)
  std::vector<std::uint32_t> log_;  // log_[index], log_[0] unused
};

using Field = std::shared_ptr<const FieldCtx>;

/// Throws NotPrime or TooLarge. The modulus is the lexicographically smallest
/// (constant term first) monic irreducible polynomial of degree e.
Field make_field(std::uint32_t p, std::uint32_t e);
/// Convenience for a prime-power order q.
Field make_field_of_order(std::uint64_t q);

/// Monic irreducible test over GF(p) by trial division with every monic
/// polynomial of degree at most deg/2. Coefficients constant term first.
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);

}  // namespace mdsgrs
