#include "mdsgrs/construct.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "mdsgrs/error.hpp"
#include "mdsgrs/linalg.hpp"
#include "mdsgrs/verify.hpp"

namespace mdsgrs {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 7> kFamilyNames{{
    {Family::EvenChar, "even-char"},
    {Family::Extended, "extended"},
    {Family::SquareSet, "square-set"},
    {Family::SubfieldPoints, "subfield-points"},
    {Family::RootsOfUnity, "roots-of-unity"},
    {Family::CosetUnion, "theorem-3-5"},
    {Family::Auto, "auto"},
}};

std::uint64_t subfield_order(const FieldCtx& f) {
  if (f.e() % 2 != 0)
    throw Error(ErrorKind::BadSubfield,
                "GF(" + std::to_string(f.q()) + ") is not a square field");
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < f.e() / 2; ++i) r *= f.p();
  return r;
}

void require_even_length(std::size_t n) {
  if (n % 2 != 0) throw Error(ErrorKind::OddLength, "self-dual codes need even length");
  if (n < 2) throw Error(ErrorKind::RangeError, "length must be at least 2");
}

Field square_field(std::uint64_t r) {
  const auto pe = prime_power(r);
  if (!pe) throw Error(ErrorKind::NotPrime, std::to_string(r) + " is not a prime power");
  return make_field(pe->first, 2 * pe->second);
}

// Every construction must come out self-dual; anything else is a bug.
ConstructionResult finish(ConstructionResult result) {
  const CheckResult check = check_self_dual(result.code);
  if (!check.passed())
    throw std::logic_error("construction produced a non-self-dual code: " + check.detail);
  return result;
}

// v_i = sqrt(lambda * u_i) for a scalar that makes every product a square.
ConstructionResult scaled_code(const Field& field, std::span<const Felt> alpha, Vec u, Felt lambda,
                               std::optional<Vec> w, Family family) {
  const FieldCtx& f = *field;
  Vec v(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) v[i] = f.sqrt(f.mul(lambda, u[i]));
  Vec alpha_vec(alpha.begin(), alpha.end());
  Certificate cert{std::move(u), lambda, std::move(w), std::nullopt, std::nullopt, alpha_vec};
  GrsCode code(field, std::move(alpha_vec), std::move(v), alpha.size() / 2);
  return finish({std::move(code), family, std::move(cert)});
}

}  // namespace

std::string_view to_string(Family family) noexcept {
  for (const auto& [f, name] : kFamilyNames)
    if (f == family) return name;
  return "unknown";
}

std::optional<Family> family_from_string(std::string_view name) noexcept {
  for (const auto& [f, n] : kFamilyNames)
    if (n == name) return f;
  return std::nullopt;
}

Vec find_subfield_scaling(const Field& field, std::span<const Felt> u) {
  const FieldCtx& f = *field;
  const std::uint64_t r = subfield_order(f);
  if (u.empty()) throw Error(ErrorKind::InvalidArgument, "empty coefficient vector");
  if (std::any_of(u.begin(), u.end(), [](Felt x) { return x.index == 0; }))
    throw Error(ErrorKind::InvalidArgument, "dual coefficients must be nonzero");
  const Felt scale = f.inv(u[0]);
  Vec w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    w[i] = f.mul(u[i], scale);
    if (!f.in_subfield(w[i], r))
      throw Error(ErrorKind::NoSubfieldSolution,
                  "w_" + std::to_string(i + 1) + " = u_" + std::to_string(i + 1) +
                      "/u_1 is not in GF(" + std::to_string(r) + ")");
  }
  return w;
}

bool has_subfield_solution(const Field& field, std::span<const Felt> alpha) {
  const std::uint64_t r = subfield_order(*field);
  const MatrixGF a = vandermonde_system(field, alpha);
  return row_equivalent(a, entrywise_power(a, r));
}

ConstructionResult selfdualize(const Field& field, std::span<const Felt> alpha) {
  require_even_length(alpha.size());
  const FieldCtx& f = *field;
  Vec u = dual_coefficients(field, alpha);

  if (f.p() == 2) return scaled_code(field, alpha, std::move(u), f.one(), std::nullopt, Family::Auto);

  const int first = f.quadratic_character(u[0]);
  const bool uniform = std::all_of(u.begin(), u.end(),
                                   [&](Felt x) { return f.quadratic_character(x) == first; });
  if (uniform) {
    const Felt lambda = first == 1 ? f.one() : f.canonical_nonresidue();
    return scaled_code(field, alpha, std::move(u), lambda, std::nullopt, Family::Auto);
  }
  if (f.e() % 2 == 0) {
    try {
      Vec w = find_subfield_scaling(field, u);
      const Felt lambda = f.inv(u[0]);
      return scaled_code(field, alpha, std::move(u), lambda, std::move(w), Family::Auto);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::NoSubfieldSolution) throw;
    }
  }
  throw Error(ErrorKind::NotSelfDualizable,
              "dual coefficients have mixed quadratic characters and no subfield scaling");
}

ConstructionResult construct_even_char(std::uint64_t q, std::size_t n) {
  const auto pe = prime_power(q);
  if (!pe || pe->first != 2)
    throw Error(ErrorKind::InvalidArgument, std::to_string(q) + " is not a power of 2");
  require_even_length(n);
  if (n > q) throw Error(ErrorKind::LengthTooLong, "n must not exceed q");
  const Field field = make_field(2, pe->second);
  const Vec all = field->elements();
  const Vec alpha(all.begin(), all.begin() + static_cast<long>(n));
  ConstructionResult result = selfdualize(field, alpha);
  result.family = Family::EvenChar;
  return result;
}

ConstructionResult construct_extended(std::uint64_t q) {
  const Field field = make_field_of_order(q);
  if (field->p() == 2)
    throw Error(ErrorKind::EvenCharacteristic, "the extended family needs q odd");
  Vec alpha = field->elements();
  Certificate cert{{}, field->one(), std::nullopt, std::nullopt, std::nullopt, alpha};
  GrsCode code(field, std::move(alpha), Vec(q, field->one()), (q + 1) / 2, true);
  return finish({std::move(code), Family::Extended, std::move(cert)});
}

Vec search_square_difference_set(const Field& field, std::size_t n,
                                 std::optional<std::uint64_t> node_budget) {
  const FieldCtx& f = *field;
  if (f.q() % 4 != 1)
    throw Error(ErrorKind::BadResidueClass, "the square-difference search needs q = 1 mod 4");
  if (n < 2) throw Error(ErrorKind::RangeError, "set size must be at least 2");

  std::vector<bool> square(f.q(), false);
  for (std::uint32_t i = 1; i < f.q(); ++i) square[i] = f.quadratic_character(Felt{i}) == 1;
  const auto first_square = static_cast<std::uint32_t>(
      std::find(square.begin(), square.end(), true) - square.begin());

  Vec chosen{f.zero(), Felt{first_square}};
  if (n == 2) return chosen;

  // candidates[d] holds the elements compatible with chosen[0..d-1] and above chosen[d-1].
  std::vector<std::vector<std::uint32_t>> candidates(n);
  std::vector<std::size_t> cursor(n, 0);
  auto refine = [&](const std::vector<std::uint32_t>& from, Felt added, std::uint32_t above) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t c : from)
      if (c > above && square[f.sub(Felt{c}, added).index]) out.push_back(c);
    return out;
  };
  {
    std::vector<std::uint32_t> all;
    for (std::uint32_t c = first_square + 1; c < f.q(); ++c)
      if (square[c]) all.push_back(c);
    candidates[2] = refine(all, chosen[1], first_square);
  }

  std::uint64_t nodes = 0;
  std::size_t depth = 2;  // index of the next slot to fill
  while (depth >= 2) {
    if (cursor[depth] == candidates[depth].size() ||
        candidates[depth].size() - cursor[depth] < n - depth) {
      cursor[depth] = 0;
      --depth;
      chosen.pop_back();
      if (depth < 2) break;
      continue;
    }
    if (node_budget && ++nodes > *node_budget)
      throw Error(ErrorKind::BudgetExceeded,
                  "search node budget of " + std::to_string(*node_budget) + " exhausted");
    const std::uint32_t pick = candidates[depth][cursor[depth]++];
    chosen.push_back(Felt{pick});
    if (chosen.size() == n) return chosen;
    candidates[depth + 1] = refine(candidates[depth], Felt{pick}, pick);
    cursor[depth + 1] = 0;
    ++depth;
  }
  throw Error(ErrorKind::NotFound, "no " + std::to_string(n) +
                                       "-element square-difference set in GF(" +
                                       std::to_string(f.q()) + ")");
}

ConstructionResult construct_square_set(std::uint64_t q, std::size_t n,
                                        std::optional<std::uint64_t> node_budget) {
  const Field field = make_field_of_order(q);
  if (q % 4 != 1)
    throw Error(ErrorKind::BadResidueClass, "the square-set family needs q = 1 mod 4");
  require_even_length(n);
  const Vec alpha = search_square_difference_set(field, n, node_budget);
  Vec u = dual_coefficients(field, alpha);
  if (!std::all_of(u.begin(), u.end(), [&](Felt x) { return field->quadratic_character(x) == 1; }))
    throw std::logic_error("square-difference set produced a nonsquare dual coefficient");
  return scaled_code(field, alpha, std::move(u), field->one(), std::nullopt, Family::SquareSet);
}

ConstructionResult construct_subfield_points(std::uint64_t r, std::size_t n) {
  const Field field = square_field(r);
  require_even_length(n);
  if (n > r) throw Error(ErrorKind::LengthTooLong, "n must not exceed r");
  const Vec sub = field->subfield_elements(r);
  const Vec alpha(sub.begin(), sub.begin() + static_cast<long>(n));
  Vec u = dual_coefficients(field, alpha);
  Vec w = u;
  return scaled_code(field, alpha, std::move(u), field->one(), std::move(w),
                     Family::SubfieldPoints);
}

ConstructionResult construct_roots_of_unity(std::uint64_t q, std::size_t n) {
  const Field field = make_field_of_order(q);
  if (field->p() == 2)
    throw Error(ErrorKind::EvenCharacteristic, "the roots-of-unity family needs q odd");
  subfield_order(*field);
  require_even_length(n);
  Vec alpha{field->zero()};
  const Vec roots = field->roots_of_unity(n - 1);
  alpha.insert(alpha.end(), roots.begin(), roots.end());

  Vec u = dual_coefficients(field, alpha);
  Vec w = find_subfield_scaling(field, u);
  const Felt lambda = field->inv(u[0]);
  return scaled_code(field, alpha, std::move(u), lambda, std::move(w), Family::RootsOfUnity);
}

CosetUnionIdentities check_coset_union_identities(const Field& field, std::uint64_t r,
                                                  std::uint64_t t, Felt beta) {
  const FieldCtx& f = *field;
  const Vec labels = f.subfield_elements(r);
  const auto rr = static_cast<std::int64_t>(r);
  const Felt beta_factor = f.sub(f.pow(beta, rr - 1), f.one());

  CosetUnionIdentities out;
  out.beta_identity = beta_factor == f.from_int(-2);
  out.within_block_in_subfield = true;
  out.cross_block_formula = true;
  for (std::size_t l0 = 0; l0 < 2 * t; ++l0)
    for (std::size_t k0 = 0; k0 < r; ++k0) {
      const Felt point = f.add(f.mul(labels[l0], beta), labels[k0]);
      for (std::size_t l = 0; l < 2 * t; ++l) {
        Felt prod = f.one();
        for (std::size_t k = 0; k < r; ++k) {
          if (l == l0 && k == k0) continue;
          prod = f.mul(prod, f.sub(point, f.add(f.mul(labels[l], beta), labels[k])));
        }
        if (l == l0) {
          out.within_block_in_subfield = out.within_block_in_subfield && f.in_subfield(prod, r);
        } else {
          const Felt expected = f.mul(f.mul(f.sub(labels[l0], labels[l]), beta), beta_factor);
          out.cross_block_formula = out.cross_block_formula && prod == expected;
        }
      }
    }
  return out;
}

ConstructionResult construct_coset_union(std::uint64_t r, std::uint64_t t) {
  if (!prime_power(r)) throw Error(ErrorKind::NotPrime, std::to_string(r) + " is not a prime power");
  if (r % 4 != 3) throw Error(ErrorKind::BadResidueClass, "the coset-union family needs r = 3 mod 4");
  if (t < 1 || t > (r - 1) / 2)
    throw Error(ErrorKind::RangeError, "t must lie in [1, " + std::to_string((r - 1) / 2) + "]");
  const Field field = square_field(r);
  const FieldCtx& f = *field;

  const Felt gamma = f.primitive_element();
  const Felt beta = f.pow(gamma, static_cast<std::int64_t>((r + 1) / 2));
  const Vec labels = f.subfield_elements(r);
  Vec alpha;
  alpha.reserve(2 * t * r);
  for (std::size_t l = 0; l < 2 * t; ++l)
    for (std::size_t k = 0; k < r; ++k) alpha.push_back(f.add(f.mul(labels[l], beta), labels[k]));

  if (!check_coset_union_identities(field, r, t, beta).all())
    throw std::logic_error("coset-union identities failed");

  Vec u = dual_coefficients(field, alpha);
  if (!std::all_of(u.begin(), u.end(), [&](Felt x) { return f.quadratic_character(x) == 1; }))
    throw std::logic_error("coset-union produced a nonsquare dual coefficient");
  ConstructionResult result =
      scaled_code(field, alpha, std::move(u), f.one(), std::nullopt, Family::CosetUnion);
  result.certificate.beta = beta;
  result.certificate.gamma = gamma;
  return result;
}

ConstructionResult construct_auto(std::uint64_t q, std::size_t n) {
  const auto pe = prime_power(q);
  if (!pe) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  std::optional<std::uint64_t> r;
  if (pe->second % 2 == 0) {
    r = 1;
    for (std::uint32_t i = 0; i < pe->second / 2; ++i) *r *= pe->first;
  }

  std::string tried;
  auto attempt = [&](auto&& build) -> std::optional<ConstructionResult> {
    try {
      return build();
    } catch (const Error& err) {
      tried += tried.empty() ? "" : "; ";
      tried += err.what();
      return std::nullopt;
    }
  };

  if (r && *r % 4 == 3 && n % (2 * *r) == 0) {
    if (auto res = attempt([&] { return construct_coset_union(*r, n / (2 * *r)); })) return *res;
  }
  if (r && pe->first != 2) {
    if (auto res = attempt([&] { return construct_roots_of_unity(q, n); })) return *res;
  }
  if (r) {
    if (auto res = attempt([&] { return construct_subfield_points(*r, n); })) return *res;
  }
  if (q % 4 == 1) {
    if (auto res = attempt([&] { return construct_square_set(q, n); })) return *res;
  }
  if (pe->first != 2 && n == q + 1) {
    if (auto res = attempt([&] { return construct_extended(q); })) return *res;
  }
  if (pe->first == 2) {
    if (auto res = attempt([&] { return construct_even_char(q, n); })) return *res;
  }
  throw Error(ErrorKind::NotSelfDualizable,
              "no family produced a [" + std::to_string(n) + "," + std::to_string(n / 2) +
                  "] self-dual code over GF(" + std::to_string(q) + ")" +
                  (tried.empty() ? std::string() : " (" + tried + ")"));
}

ConstructionResult construct(const ConstructionRequest& req) {
  auto need = [](const auto& value, const char* name) {
    if (!value) throw Error(ErrorKind::InvalidArgument, std::string("missing parameter ") + name);
    return *value;
  };
  auto field_order = [&]() -> std::uint64_t {
    if (req.q) return *req.q;
    if (req.r) return *req.r * *req.r;
    throw Error(ErrorKind::InvalidArgument, "missing parameter q (or r)");
  };

  switch (req.family) {
    case Family::EvenChar: return construct_even_char(field_order(), need(req.n, "n"));
    case Family::Extended: return construct_extended(field_order());
    case Family::SquareSet:
      return construct_square_set(field_order(), need(req.n, "n"), req.node_budget);
    case Family::SubfieldPoints: return construct_subfield_points(need(req.r, "r"), need(req.n, "n"));
    case Family::RootsOfUnity: return construct_roots_of_unity(field_order(), need(req.n, "n"));
    case Family::CosetUnion: return construct_coset_union(need(req.r, "r"), need(req.t, "t"));
    case Family::Auto: return construct_auto(field_order(), need(req.n, "n"));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown family");
}

}  // namespace mdsgrs
