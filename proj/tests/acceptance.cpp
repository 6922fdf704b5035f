// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracle.hpp"
#include "scp/construct.hpp"
#include "scp/correlate.hpp"
#include "scp/verify.hpp"

namespace scp {
namespace {

using Clock = std::chrono::steady_clock;

// Collects failed sub-checks for one criterion.
class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool pass() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }
  std::string note;

 private:
  std::vector<std::string> failures_;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void three_variable(Criterion& c) {
  const auto start = Clock::now();
  const auto f = fixtures::quaternary3_function();
  std::vector<int> table;
  for (std::uint64_t i = 0; i < 8; ++i) table.push_back(f.evaluate(i));
  const double elapsed = seconds_since(start);
  c.expect(table == std::vector<int>{0, 1, 0, 1, 0, 1, 2, 3}, "truth table (0,1,0,1,0,1,2,3)");
  c.expect(elapsed < 1e-3, "runtime < 1 ms");
  c.note = "runtime " + std::to_string(elapsed * 1e6) + " us";
}

void single_restriction(Criterion& c) {
  const Restriction r{{2}, {0}};
  const auto bounds = truncation_bounds(r, 3);
  c.expect(bounds.first == 0 && bounds.last == 5, "k0 = 0, k1 = 5");
  const auto s = truncate(restrict_function(fixtures::quaternary3_function(), r), bounds);
  c.expect(s == parse_exponents(4, "0 1 . . 0 1"), "truncated sequence (xi^0,xi^1,0,0,xi^0,xi^1)");
  c.expect(s.sparsity().equivalent({1, 3}), "sparsity exactly 1/3");
}

void length27_pair(Criterion& c) {
  const auto start = Clock::now();
  const auto p = fixtures::len27_params();
  const auto pair = construct_scp(p);
  c.expect(pair.c0 == parse_exponents(4, fixtures::kLen27C0), "C0 equals printed sequence");
  c.expect(pair.c1 == parse_exponents(4, fixtures::kLen27C1), "C1 equals printed sequence");
  c.expect(p.length() == 27 && pair.c0.length() == 27, "L = 27");
  c.expect(p.zcz_width() == 6, "Z = 6");
  c.expect(p.sparsity() == Sparsity{19, 27} && pair.c0.sparsity() == Sparsity{19, 27},
           "S = 19/27");
  c.expect(check_scp(pair, 6).pass(), "check_scp passes with Z = 6");

  // Peak values exactly as the criterion states them.
  const auto peak = autocorrelation(pair.c0, 0);
  const auto aacs = autocorrelation(pair.c0, 0) + autocorrelation(pair.c1, 0);
  c.expect(peak.equals(CyclotomicInt::integer(4, 19)),
           "peak autocorrelation 19 at u = 0 (exact value is " + peak.to_string() + ")");
  c.expect(aacs.equals(CyclotomicInt::integer(4, 38)),
           "AACS 38 at u = 0 (exact value is " + aacs.to_string() + ")");
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 1.0, "runtime < 1 s");
  c.note = "runtime " + std::to_string(elapsed * 1e3) + " ms";
}

void length27_mate(Criterion& c) {
  const auto p = fixtures::len27_params();
  const auto pair = construct_scp(p);
  const auto mate = construct_mate(p);
  c.expect(mate.c0 == parse_exponents(4, fixtures::kLen27S0), "S0 equals printed sequence");
  c.expect(mate.c1 == parse_exponents(4, fixtures::kLen27S1), "S1 equals printed sequence");
  const auto report = check_mate(pair, mate, 6);
  for (const auto& claim : report.claims) c.expect(claim.pass, claim.id);
  c.expect(report.claims.front().id == "mate.C1.sum" && report.claims.front().min_shift == -26 &&
               report.claims.front().max_shift == 26,
           "cross-correlation sum checked for |u| < 27");
  c.expect(report.claims.size() == 5 && report.claims.back().max_shift == 5,
           "four pairwise cross-correlations checked for |u| < 6");
}

void table1(Criterion& c) {
  const auto start = Clock::now();
  const auto rows = table1_reproduce();
  c.expect(rows.size() == 17, "17 columns");
  for (const auto& row : rows) {
    const auto tag = "length " + std::to_string(row.expected.length);
    c.expect(row.derived.length == row.expected.length, tag + ": L");
    c.expect(row.derived.zcz == row.expected.zcz, tag + ": Z");
    const auto versus = " (table " + row.expected.sparsity.to_string() + ", ";
    c.expect(row.derived.sparsity == row.expected.sparsity,
             tag + ": S" + versus + "derived " + row.derived.sparsity.to_string() + ")");
    c.expect(row.produced_length == row.expected.length, tag + ": produced L");
    c.expect(row.produced_sparsity == row.expected.sparsity,
             tag + ": produced S" + versus + "produced " + row.produced_sparsity.to_string() + ")");
    c.expect(row.verified, tag + ": check_scp");
    c.expect(row.derived.length + row.derived.zcz == (std::size_t{1} << row.derived.m) + 1,
             tag + ": L + Z = 2^m + 1");
  }
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 5.0, "runtime < 5 s");
  c.note = "runtime " + std::to_string(elapsed * 1e3) + " ms";
}

void sweep(Criterion& c) {
  const auto start = Clock::now();
  SweepOptions options;
  options.q_set = {2, 4};
  options.m_max = 5;
  const auto summary = exhaustive_sweep(options);
  const double elapsed = seconds_since(start);
  c.expect(summary.scp_total > 0 && summary.scp_passed == summary.scp_total,
           "every constructed pair passes check_scp");
  c.expect(summary.mate_total > 0 && summary.mate_passed == summary.mate_total,
           "every mate instance passes check_mate");
  for (const auto& cell : summary.cells) {
    if (!cell.first_failure.empty()) {
      c.expect(false, "cell q=" + std::to_string(cell.params.q) + " m=" +
                          std::to_string(cell.params.m) + ": " + cell.first_failure);
      break;
    }
  }
  c.expect(elapsed < 120.0, "runtime < 2 min");
  c.note = std::to_string(summary.scp_total) + " pairs, " + std::to_string(summary.mate_total) +
           " mates, " + std::to_string(elapsed) + " s";
}

void oracle_equivalence(Criterion& c) {
  std::mt19937_64 rng(7001);
  const int alphabets[] = {2, 4, 8};
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int q = alphabets[trial % 3];
    const std::size_t length = std::uniform_int_distribution<std::size_t>(1, 64)(rng);
    const auto a = oracle::random_sequence(rng, q, length);
    const auto b = oracle::random_sequence(rng, q, length);
    const auto ea = oracle::embed(a);
    const auto eb = oracle::embed(b);
    const long n = static_cast<long>(length);
    for (long u = -(n - 1); u < n; ++u) {
      const auto exact = cross_correlation(a, b, u);
      const double err = std::abs(exact.to_complex() - oracle::rho(ea, eb, u));
      worst = std::max(worst, err);
      if (exact.is_zero() != (std::abs(oracle::rho(ea, eb, u)) < 1e-9)) {
        c.expect(false, "exact zero test disagrees at trial " + std::to_string(trial));
      }
    }
  }
  c.expect(worst < 1e-9, "max deviation < 1e-9");
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "max deviation %.3g", worst);
  c.note = buffer;
}

void mutation(Criterion& c) {
  std::mt19937_64 rng(8008);
  std::size_t mutations = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = gen::random_params(rng);
    const auto pair = construct_scp(p);
    if (!check_scp(pair, p.zcz_width()).pass()) {
      c.expect(false, "unmutated pair fails at trial " + std::to_string(trial));
      continue;
    }
    const auto half = static_cast<std::uint32_t>(p.q / 2);
    for (int which = 0; which < 2; ++which) {
      const auto& target = which == 0 ? pair.c0 : pair.c1;
      for (std::size_t i = 0; i < target.length(); ++i) {
        if (!target[i]) continue;
        ++mutations;
        const auto mutated = target.with_entry(i, (*target[i] + half) % static_cast<std::uint32_t>(p.q));
        const auto report = which == 0 ? check_scp(mutated, pair.c1, p.zcz_width())
                                       : check_scp(pair.c0, mutated, p.zcz_width());
        if (report.pass()) {
          c.expect(false, "undetected flip at trial " + std::to_string(trial) + " entry " +
                              std::to_string(i));
        }
      }
    }
  }
  c.note = std::to_string(mutations) + " single-entry flips";
}

void gdj(Criterion& c) {
  std::size_t instances = 0;
  for (int q : {2, 4}) {
    for (int m = 1; m <= 6; ++m) {
      std::vector<int> perm(static_cast<std::size_t>(m));
      std::iota(perm.begin(), perm.end(), 1);
      do {
        for (bool random_g : {false, true}) {
          ScpParams p;
          p.q = q;
          p.m = m;
          p.t = 0;
          p.perm = perm;
          p = with_defaults(p);
          if (random_g) p.g = sweep_random_g(kDefaultSeed, p);
          const auto pair = construct_scp(p);
          ++instances;
          const auto tag = "q=" + std::to_string(q) + " m=" + std::to_string(m);
          if (pair.c0.length() != (std::size_t{1} << m) || pair.c0.zero_count() != 0 ||
              pair.c1.zero_count() != 0) {
            c.expect(false, tag + ": length 2^m with S = 0");
          }
          const auto aacs = aacs_profile(pair.c0, pair.c1);
          for (long u = 1; u < static_cast<long>(pair.c0.length()); ++u) {
            if (!aacs.at(u).is_zero()) {
              c.expect(false, tag + ": AACS non-zero at u = " + std::to_string(u));
              break;
            }
          }
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  c.note = std::to_string(instances) + " instances";
}

}  // namespace
}  // namespace scp

int main() {
  struct Entry {
    const char* id;
    const char* title;
    std::function<void(scp::Criterion&)> run;
  };
  const Entry criteria[] = {
      {"AC1", "three-variable quaternary truth table", scp::three_variable},
      {"AC2", "single-variable restriction and truncation", scp::single_restriction},
      {"AC3", "length-27 quaternary pair", scp::length27_pair},
      {"AC4", "length-27 quaternary mate", scp::length27_mate},
      {"AC5", "lengths 15 to 35 table", scp::table1},
      {"AC6", "exhaustive sweep q in {2,4}, m <= 5", scp::sweep},
      {"AC7", "exact engine vs floating oracle", scp::oracle_equivalence},
      {"AC8", "mutation sensitivity", scp::mutation},
      {"AC9", "unrestricted case gives Golay pairs", scp::gdj},
  };
  int failed = 0;
  for (const auto& entry : criteria) {
    scp::Criterion c;
    try {
      entry.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::printf("[%s] %s %s%s%s\n", c.pass() ? "PASS" : "FAIL", entry.id, entry.title,
                c.note.empty() ? "" : " -- ", c.note.c_str());
    for (const auto& f : c.failures()) std::printf("       failed: %s\n", f.c_str());
    failed += !c.pass();
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
