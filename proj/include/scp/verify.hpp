#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scp/construct.hpp"
#include "scp/correlate.hpp"

namespace scp {

// One checked condition over a contiguous shift range. On failure,
// `counterexample` holds the offending shift with the smallest |u| (positive
// shift first on ties).
struct Claim {
  std::string id;
  std::string description;
  long min_shift = 0;
  long max_shift = 0;
  bool pass = true;
  std::optional<long> counterexample;
};

struct VerificationReport {
  std::string kind;  // "scp", "mate" or "structure"
  std::size_t length = 0;
  std::size_t claimed_zcz = 0;
  // scp: widest Z' with all auto/cross zone conditions holding for 0 < |u| < Z'.
  // mate: same for the four pairwise cross-correlations.
  std::size_t measured_zcz = 0;
  Sparsity sparsity;
  std::vector<Claim> claims;

  bool pass() const;
  const Claim* first_failure() const;
};

// Preconditions the correlation checkers assume: equal alphabet and length,
// non-zero first and last entries. Never throws.
VerificationReport check_structure(const SparseSequence& c0, const SparseSequence& c1);

// Sparse complementary pair conditions with zone width `claimed_zcz`:
//   C1: rho(Ck; 0) = L - N, rho(Ck; u) = 0 for 0 < |u| < Z, rho(C0, C1; u) = 0 for |u| < Z
//   C2: rho(C0; u) + rho(C1; u) = 0 for u != 0, 2(L - N) at u = 0
// Autocorrelations are checked for u >= 0 only; negative shifts are their
// conjugates. Throws ParameterError on mismatched sequences.
VerificationReport check_scp(const SparseSequence& c0, const SparseSequence& c1,
                             std::size_t claimed_zcz);
inline VerificationReport check_scp(const ScpPair& pair, std::size_t claimed_zcz) {
  return check_scp(pair.c0, pair.c1, claimed_zcz);
}

// Mate conditions between (C0, C1) and (S0, S1):
//   C1: rho(C0, S0; u) + rho(C1, S1; u) = 0 for |u| < L
//   C2: rho(Ck, Sk'; u) = 0 for |u| < Z, all k, k'
VerificationReport check_mate(const ScpPair& pair, const ScpPair& mate, std::size_t claimed_zcz);

// Largest Z' <= L with the pair's auto- and cross-correlation zone conditions
// holding for every 0 < |u| < Z'. The u = 0 conditions are claims of
// check_scp, not part of the width, so the result is always >= 1.
std::size_t measure_zcz(const SparseSequence& c0, const SparseSequence& c1);
inline std::size_t measure_zcz(const ScpPair& pair) { return measure_zcz(pair.c0, pair.c1); }

struct Table1Column {
  std::size_t length;
  int m;
  std::vector<int> restricted;
  std::size_t zcz;
  Sparsity sparsity;
};

// The 17 published columns (lengths 15..35 without 16, 20, 26, 32).
const std::vector<Table1Column>& table1_reference();

struct Table1Row {
  Table1Column expected;
  Table1Column derived;   // from params_from_restricted_set
  std::size_t produced_length = 0;
  Sparsity produced_sparsity;
  std::size_t measured_zcz = 0;
  bool verified = false;  // check_scp passed with the derived Z
  bool matches() const;
};

std::vector<Table1Row> table1_reproduce(int q = 2);

// ---- exhaustive sweep ----------------------------------------------------

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2025;

struct SweepOptions {
  std::vector<int> q_set{2, 4};
  int m_min = 1;
  int m_max = 5;
  std::uint64_t seed = kDefaultSeed;
  // kSkipOrdering also visits permutations violating pi(m) > pi(alpha).
  ConstraintCheck constraint = ConstraintCheck::kEnforce;
  unsigned workers = 0;  // 0 = hardware concurrency
  bool timing = false;
};

struct SweepCell {
  ScpParams params;
  bool random_g = false;
  std::size_t length = 0;
  std::size_t zcz = 0;
  Sparsity sparsity;
  bool scp_pass = false;
  std::size_t measured_zcz = 0;
  bool mate_applicable = false;
  bool mate_pass = false;       // check_mate and check_scp on the mate pair
  std::string first_failure;    // empty when everything passed
  double wall_us = 0.0;         // only filled when SweepOptions::timing
};

struct SweepSummary {
  std::vector<SweepCell> cells;  // deterministic order
  std::size_t scp_total = 0;
  std::size_t scp_passed = 0;
  std::size_t mate_total = 0;
  std::size_t mate_passed = 0;

  std::size_t failures() const { return (scp_total - scp_passed) + (mate_total - mate_passed); }
};

// The g drawn for a cell depends only on the seed and the cell's parameters.
std::vector<int> sweep_random_g(std::uint64_t seed, const ScpParams& cell);

SweepSummary exhaustive_sweep(const SweepOptions& options);

}  // namespace scp
