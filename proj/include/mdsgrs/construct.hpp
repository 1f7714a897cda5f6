#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "mdsgrs/grs.hpp"

namespace mdsgrs {

enum class Family {
  EvenChar,        // "even-char": first n points of GF(2^e)
  Extended,        // "extended": all of GF(q) plus the point at infinity
  SquareSet,       // "square-set": pairwise differences are squares, q = 1 mod 4
  SubfieldPoints,  // "subfield-points": n points of GF(r) inside GF(r^2)
  RootsOfUnity,    // "roots-of-unity": {0} with the (n-1)-th roots of unity in GF(r^2)
  CosetUnion,      // "theorem-3-5": 2t translates a*beta + GF(r) in GF(r^2), r = 3 mod 4
  Auto,
};

std::string_view to_string(Family family) noexcept;
std::optional<Family> family_from_string(std::string_view name) noexcept;

/// Intermediate witnesses of a construction. lambda * u_i = v_i^2 for the
/// plain families; the extended family leaves u empty.
struct Certificate {
  Vec u;
  Felt lambda{1};
  std::optional<Vec> w;
  std::optional<Felt> beta;
  std::optional<Felt> gamma;
  Vec alpha_set;
};

struct ConstructionResult {
  GrsCode code;
  Family family;
  Certificate certificate;
};

struct ConstructionRequest {
  Family family = Family::Auto;
  std::optional<std::uint64_t> q{};
  std::optional<std::uint64_t> r{};
  std::optional<std::uint64_t> t{};
  std::optional<std::size_t> n{};
  std::optional<std::uint64_t> node_budget{};  // square-set search only
};

/// w = u / u_1 when every w_i lies in GF(r), r^2 = q. Throws
/// NoSubfieldSolution otherwise and BadSubfield when e is odd.
Vec find_subfield_scaling(const Field& field, std::span<const Felt> u);

/// Whether A_a and its entrywise r-th power are row equivalent.
bool has_subfield_solution(const Field& field, std::span<const Felt> alpha);

/// Picks nonzero v with v_i^2 = lambda u_i so that GRS_{n/2}(alpha, v) is
/// self-dual. Throws OddLength or NotSelfDualizable.
ConstructionResult selfdualize(const Field& field, std::span<const Felt> alpha);

ConstructionResult construct_even_char(std::uint64_t q, std::size_t n);
ConstructionResult construct_extended(std::uint64_t q);

/// Lexicographically first {0, 1, ...} set of n elements whose pairwise
/// differences are nonzero squares, by depth-first backtracking in index
/// order. Throws BadResidueClass unless q = 1 mod 4, NotFound after
/// exhausting the space, BudgetExceeded when the node budget runs out.
Vec search_square_difference_set(const Field& field, std::size_t n,
                                 std::optional<std::uint64_t> node_budget = std::nullopt);

ConstructionResult construct_square_set(std::uint64_t q, std::size_t n,
                                        std::optional<std::uint64_t> node_budget = std::nullopt);
ConstructionResult construct_subfield_points(std::uint64_t r, std::size_t n);
ConstructionResult construct_roots_of_unity(std::uint64_t q, std::size_t n);

/// [2tr, tr] code over GF(r^2) on the points a_l * beta + a_k, l = 1..2t,
/// k = 1..r, where a_1..a_r is GF(r) in index order and beta =
/// gamma^{(r+1)/2} for the primitive element gamma.
ConstructionResult construct_coset_union(std::uint64_t r, std::uint64_t t);

/// The identities the coset-union construction relies on, checked for every
/// point: beta^{r-1} - 1 = -2, each within-block product lies in GF(r), and
/// each cross-block product equals (a_l0 - a_l) beta (beta^{r-1} - 1).
struct CosetUnionIdentities {
  bool beta_identity = false;
  bool within_block_in_subfield = false;
  bool cross_block_formula = false;

  bool all() const noexcept { return beta_identity && within_block_in_subfield && cross_block_formula; }
};
CosetUnionIdentities check_coset_union_identities(const Field& field, std::uint64_t r,
                                                  std::uint64_t t, Felt beta);

/// Tries coset-union, roots-of-unity, subfield-points, square-set, extended
/// and even-char in that order and returns the first success.
ConstructionResult construct_auto(std::uint64_t q, std::size_t n);

ConstructionResult construct(const ConstructionRequest& request);

}  // namespace mdsgrs
