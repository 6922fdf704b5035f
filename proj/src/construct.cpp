#include "scp/construct.hpp"

#include <algorithm>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace scp {

namespace {

int max_restricted(const ScpParams& p) {
  return p.t == 0 ? 0 : *std::max_element(p.perm.begin(), p.perm.begin() + p.t);
}

SparseSequence restricted_sequence(const GeneralizedBooleanFunction& f, const ScpParams& p) {
  const auto r = p.restriction();
  return truncate(restrict_function(f, r), truncation_bounds(r, p.m));
}

}  // namespace

std::size_t ScpParams::length() const {
  std::size_t sum = 1;
  for (int a = t; a < m; ++a) sum += std::size_t{1} << (perm[a] - 1);
  return sum;
}

std::size_t ScpParams::zcz_width() const {
  std::size_t sum = 1;
  for (int a = 0; a < t; ++a) sum += std::size_t{1} << (perm[a] - 1);
  return sum;
}

Sparsity ScpParams::sparsity() const {
  const std::size_t len = length();
  return {len - (std::size_t{1} << (m - t)), len};
}

Restriction ScpParams::restriction() const {
  return {std::vector<int>(perm.begin(), perm.begin() + t), d};
}

void validate_shape(const ScpParams& p) {
  require_even_alphabet(p.q);
  if (p.m < 1 || p.m > kMaxSequenceVariables) {
    throw ParameterError(fmt::format("m = {} must lie in 1..{}", p.m, kMaxSequenceVariables));
  }
  if (p.t < 0 || p.t > p.m - 1) {
    throw ParameterError(fmt::format("t = {} violates 0 <= t <= m - 1 = {}", p.t, p.m - 1));
  }
  if (p.perm.size() != static_cast<std::size_t>(p.m)) {
    throw ParameterError(fmt::format("permutation has {} entries, expected m = {}",
                                     p.perm.size(), p.m));
  }
  auto sorted = p.perm;
  std::sort(sorted.begin(), sorted.end());
  for (int a = 0; a < p.m; ++a) {
    if (sorted[a] != a + 1) {
      throw ParameterError(
          fmt::format("[{}] is not a permutation of 1..{}", fmt::join(p.perm, ","), p.m));
    }
  }
  if (p.d.size() != static_cast<std::size_t>(p.t)) {
    throw ParameterError(fmt::format("d has {} entries, expected t = {}", p.d.size(), p.t));
  }
  if (std::any_of(p.d.begin(), p.d.end(), [](std::uint8_t v) { return v > 1; })) {
    throw ParameterError("d must be binary");
  }
  if (p.g.size() != static_cast<std::size_t>(p.m) + 1) {
    throw ParameterError(
        fmt::format("g has {} entries, expected m + 1 = {}", p.g.size(), p.m + 1));
  }
}

void validate_scp(const ScpParams& p) {
  validate_shape(p);
  if (p.t > 0 && p.perm[p.m - 1] <= max_restricted(p)) {
    throw ParameterError(fmt::format(
        "constraint pi(m) > pi(alpha) for 1 <= alpha <= t violated: pi({}) = {} but a restricted "
        "variable x{} is larger",
        p.m, p.perm[p.m - 1], max_restricted(p)));
  }
}

void validate_mate(const ScpParams& p) {
  validate_scp(p);
  if (p.t > p.m - 2) {
    throw ParameterError(
        fmt::format("mate constraint 0 <= t <= m - 2 violated: t = {}, m = {}", p.t, p.m));
  }
  if (p.t > 0 && p.perm[p.m - 2] <= max_restricted(p)) {
    throw ParameterError(fmt::format(
        "mate constraint pi(m-1) > pi(alpha) for 1 <= alpha <= t violated: pi({}) = {} but a "
        "restricted variable x{} is larger",
        p.m - 1, p.perm[p.m - 2], max_restricted(p)));
  }
}

bool mate_applicable(const ScpParams& p) {
  try {
    validate_mate(p);
    return true;
  } catch (const ParameterError&) {
    return false;
  }
}

ScpParams with_defaults(ScpParams p) {
  if (p.d.empty() && p.t > 0) p.d.assign(static_cast<std::size_t>(p.t), 0);
  if (p.g.empty()) p.g.assign(static_cast<std::size_t>(p.m) + 1, 0);
  return p;
}

ScpParams params_from_restricted_set(int m, int q, std::vector<int> restricted,
                                     std::vector<std::uint8_t> d, std::vector<int> g) {
  std::sort(restricted.begin(), restricted.end());
  ScpParams p;
  p.q = q;
  p.m = m;
  p.t = static_cast<int>(restricted.size());
  Restriction{restricted, std::vector<std::uint8_t>(restricted.size(), 0)}.validate(m);
  p.perm = restricted;
  for (int v : Restriction{restricted, {}}.unrestricted(m)) p.perm.push_back(v);
  p.d = std::move(d);
  p.g = std::move(g);
  p = with_defaults(std::move(p));
  validate_scp(p);
  return p;
}

GeneralizedBooleanFunction scp_function(const ScpParams& p, ConstraintCheck check) {
  if (check == ConstraintCheck::kEnforce) {
    validate_scp(p);
  } else {
    validate_shape(p);
  }
  const int half = p.q / 2;
  std::vector<Monomial> terms;

  int d_chain = 0;
  for (int l = 0; l + 1 < p.t; ++l) d_chain += p.d[l] * p.d[l + 1];
  if ((half * d_chain) % p.q != 0) terms.push_back({(half * d_chain) % p.q, {}});

  for (int l = p.t; l + 1 < p.m; ++l) terms.push_back({half, {p.perm[l], p.perm[l + 1]}});

  if (p.t > 0 && p.d[p.t - 1] != 0) terms.push_back({half, {p.perm[p.t]}});

  for (int l = 1; l <= p.m; ++l) {
    if (p.g[l] % p.q != 0) terms.push_back({p.g[l], {l}});
  }
  if (p.g[0] % p.q != 0) terms.push_back({p.g[0], {}});
  return {p.q, p.m, std::move(terms)};
}

ScpPair construct_scp(const ScpParams& p, ConstraintCheck check) {
  const auto f = scp_function(p, check);
  const int half = p.q / 2;
  const auto f1 = f.plus(half, {p.perm[p.t]});
  return {restricted_sequence(f, p), restricted_sequence(f1, p), p};
}

ScpPair construct_mate(const ScpParams& p) {
  validate_mate(p);
  const auto f = scp_function(p);
  const int half = p.q / 2;
  const auto s0 = f.plus(half, {p.perm[p.m - 1]});
  const auto s1 = s0.plus(half, {p.perm[p.t]});
  return {restricted_sequence(s0, p), restricted_sequence(s1, p), p};
}

}  // namespace scp
