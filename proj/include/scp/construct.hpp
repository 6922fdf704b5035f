#pragma once

#include <cstdint>
#include <vector>

#include "scp/rgbf.hpp"

namespace scp {

// Construction parameters. All index vectors are 1-based variable indices.
//
//   perm[a - 1] = pi(a), a = 1..m; perm[0..t-1] are the restricted variables.
//   d[a - 1]    = value of x_{pi(a)}, a = 1..t.
//   g[l]        = coefficient of x_l (g[0] is the constant), length m + 1.
struct ScpParams {
  int q = 2;
  int m = 1;
  int t = 0;
  std::vector<int> perm;
  std::vector<std::uint8_t> d;
  std::vector<int> g;

  // L = sum_{a > t} 2^(pi(a)-1) + 1
  std::size_t length() const;
  // Z = sum_{a <= t} 2^(pi(a)-1) + 1
  std::size_t zcz_width() const;
  Sparsity sparsity() const;
  Restriction restriction() const;

  friend bool operator==(const ScpParams&, const ScpParams&) = default;
};

// Checks q, m, t, that perm is a permutation of 1..m, |d| = t, |g| = m + 1.
void validate_shape(const ScpParams& p);
// validate_shape plus pi(m) > pi(a) for every restricted a.
void validate_scp(const ScpParams& p);
// validate_scp plus t <= m - 2 and pi(m-1) > pi(a) for every restricted a.
void validate_mate(const ScpParams& p);
bool mate_applicable(const ScpParams& p);

// Fills d and g with zeros when empty.
ScpParams with_defaults(ScpParams p);

// Canonical permutation: restricted indices ascending, then the rest
// ascending. d and g default to zero when empty.
ScpParams params_from_restricted_set(int m, int q, std::vector<int> restricted,
                                     std::vector<std::uint8_t> d = {}, std::vector<int> g = {});

enum class ConstraintCheck { kEnforce, kSkipOrdering };

// The unrestricted function
//   q/2 (sum_{l<t} d_l d_{l+1} + sum_{l=t+1}^{m-1} x_pi(l) x_pi(l+1) + d_t x_pi(t+1))
//   + sum_l g_l x_l + g_0
// whose restriction to X = d gives the first sequence of the pair.
GeneralizedBooleanFunction scp_function(const ScpParams& p,
                                        ConstraintCheck check = ConstraintCheck::kEnforce);

struct ScpPair {
  SparseSequence c0;
  SparseSequence c1;
  ScpParams params;
};

// (f|X=d, (f + q/2 x_pi(t+1))|X=d), truncated to length L.
ScpPair construct_scp(const ScpParams& p, ConstraintCheck check = ConstraintCheck::kEnforce);

// ((f + q/2 x_pi(m))|X=d, (f + q/2 x_pi(t+1) + q/2 x_pi(m))|X=d), truncated.
ScpPair construct_mate(const ScpParams& p);

}  // namespace scp
