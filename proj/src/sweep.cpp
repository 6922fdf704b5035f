#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <random>
#include <thread>

#include "scp/verify.hpp"

namespace scp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) { return splitmix64(h ^ splitmix64(v)); }

bool ordering_holds(const std::vector<int>& perm, int t) {
  if (t == 0) return true;
  return perm.back() > *std::max_element(perm.begin(), perm.begin() + t);
}

struct Job {
  ScpParams params;
  bool random_g;
};

std::vector<Job> enumerate_jobs(const SweepOptions& options) {
  std::vector<Job> jobs;
  for (int q : options.q_set) {
    for (int m = std::max(options.m_min, 1); m <= options.m_max; ++m) {
      for (int t = 0; t < m; ++t) {
        std::vector<int> perm(static_cast<std::size_t>(m));
        std::iota(perm.begin(), perm.end(), 1);
        do {
          if (options.constraint == ConstraintCheck::kEnforce && !ordering_holds(perm, t)) {
            continue;
          }
          for (std::uint32_t bits = 0; bits < (1u << t); ++bits) {
            ScpParams p;
            p.q = q;
            p.m = m;
            p.t = t;
            p.perm = perm;
            for (int a = 0; a < t; ++a) p.d.push_back(static_cast<std::uint8_t>((bits >> a) & 1u));
            p.g.assign(static_cast<std::size_t>(m) + 1, 0);
            jobs.push_back({p, false});
            p.g = sweep_random_g(options.seed, p);
            jobs.push_back({std::move(p), true});
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    }
  }
  return jobs;
}

SweepCell run_cell(const Job& job, const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto& p = job.params;
  SweepCell cell;
  cell.params = p;
  cell.random_g = job.random_g;
  cell.length = p.length();
  cell.zcz = p.zcz_width();
  cell.sparsity = p.sparsity();

  const auto pair = construct_scp(p, options.constraint);
  const auto report = check_scp(pair, cell.zcz);
  cell.measured_zcz = report.measured_zcz;
  cell.scp_pass = report.pass() && pair.c0.length() == cell.length &&
                  pair.c0.sparsity() == cell.sparsity;
  if (!cell.scp_pass) {
    const auto* failed = report.first_failure();
    cell.first_failure = failed ? failed->id : "derived.length_or_sparsity";
  }

  cell.mate_applicable = mate_applicable(p);
  if (cell.mate_applicable) {
    const auto mate = construct_mate(p);
    const auto mate_report = check_mate(pair, mate, cell.zcz);
    const auto mate_scp = check_scp(mate, cell.zcz);
    cell.mate_pass = mate_report.pass() && mate_scp.pass();
    if (!cell.mate_pass && cell.first_failure.empty()) {
      const auto* failed = mate_report.first_failure();
      cell.first_failure = failed ? failed->id : "mate." + mate_scp.first_failure()->id;
    }
  }
  if (options.timing) {
    cell.wall_us = std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() -
                                                             start)
                       .count();
  }
  return cell;
}

}  // namespace

std::vector<int> sweep_random_g(std::uint64_t seed, const ScpParams& cell) {
  std::uint64_t h = mix(seed, static_cast<std::uint64_t>(cell.q));
  h = mix(h, static_cast<std::uint64_t>(cell.m));
  h = mix(h, static_cast<std::uint64_t>(cell.t));
  for (int v : cell.perm) h = mix(h, static_cast<std::uint64_t>(v));
  for (auto v : cell.d) h = mix(h, v);
  std::mt19937_64 engine(h);
  std::vector<int> g(static_cast<std::size_t>(cell.m) + 1);
  for (auto& coefficient : g) coefficient = static_cast<int>(engine() % static_cast<std::uint64_t>(cell.q));
  return g;
}

SweepSummary exhaustive_sweep(const SweepOptions& options) {
  const auto jobs = enumerate_jobs(options);
  SweepSummary summary;
  summary.cells.resize(jobs.size());

  unsigned workers = options.workers ? options.workers : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      summary.cells[k] = run_cell(jobs[k], options);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }

  for (const auto& cell : summary.cells) {
    ++summary.scp_total;
    if (cell.scp_pass) ++summary.scp_passed;
    if (cell.mate_applicable) {
      ++summary.mate_total;
      if (cell.mate_pass) ++summary.mate_passed;
    }
  }
  return summary;
}

}  // namespace scp
