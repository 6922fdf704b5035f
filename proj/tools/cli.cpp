#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "scp/io.hpp"

namespace scp::cli {

namespace {

using nlohmann::json;

std::shared_ptr<spdlog::logger> logger() {
  static auto instance = [] {
    auto log = std::make_shared<spdlog::logger>("scp",
                                                std::make_shared<spdlog::sinks::stderr_sink_mt>());
    log->set_pattern("[%l] %v");
    const char* level = std::getenv("SCP_LOG_LEVEL");
    log->set_level(level ? spdlog::level::from_str(level) : spdlog::level::warn);
    return log;
  }();
  return instance;
}

// Collects artifact text, then writes it to --out or the caller's stream.
void emit(const CommandConfig& config, std::ostream& out, const std::string& text) {
  if (!config.out) {
    out << text;
    return;
  }
  std::ofstream file(*config.out, std::ios::binary);
  if (!file) throw ParameterError("cannot write '" + *config.out + "'");
  file << text;
  logger()->info("wrote {}", *config.out);
}

Format resolve_format(const CommandConfig& config, Format fallback,
                      std::initializer_list<Format> allowed) {
  const Format f = config.format == Format::kDefault ? fallback : config.format;
  for (Format a : allowed) {
    if (a == f) return f;
  }
  throw ParameterError("output format not supported by this subcommand");
}

bool has_inline_params(const CommandConfig& c) {
  return c.q || c.m || c.t || !c.perm.empty() || c.restricted || !c.d.empty() || !c.g.empty();
}

ScpParams params_from_config(const CommandConfig& c) {
  ScpParams p;
  if (c.params_file) {
    if (has_inline_params(c)) throw ParameterError("give either --params or inline flags");
    p = io::params_from_json(io::read_json_file(*c.params_file));
  } else {
    if (!c.q || !c.m) throw ParameterError("--q and --m are required without --params");
    json j = {{"q", *c.q}, {"m", *c.m}};
    if (c.restricted) {
      j["restricted"] = *c.restricted;
    } else {
      if (c.perm.empty()) throw ParameterError("--perm or --restricted is required");
      j["pi"] = c.perm;
    }
    if (c.t) j["t"] = *c.t;
    if (!c.d.empty()) j["d"] = c.d;
    if (!c.g.empty()) j["g"] = c.g;
    p = io::params_from_json(j);
  }
  if (c.random_g) p.g = sweep_random_g(c.seed, p);
  logger()->debug("params q={} m={} t={} L={} Z={}", p.q, p.m, p.t, p.length(), p.zcz_width());
  return p;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int run_construct(const CommandConfig& c, std::ostream& out, bool with_mate) {
  resolve_format(c, Format::kJson, {Format::kJson});
  const auto params = params_from_config(c);
  const auto pair = construct_scp(params);
  if (with_mate) {
    const auto mate = construct_mate(params);
    emit(c, out, dump(io::pair_to_json(pair, &mate)));
  } else {
    emit(c, out, dump(io::pair_to_json(pair)));
  }
  return kExitOk;
}

io::PairFile load_pair(const CommandConfig& c, bool want_mate) {
  if (c.pair_file) {
    if (c.params_file || has_inline_params(c)) {
      throw ParameterError("give either --pair or construction parameters");
    }
    return io::pair_from_json(io::read_json_file(*c.pair_file));
  }
  const auto params = params_from_config(c);
  auto pair = construct_scp(params);
  io::PairFile file{params, pair.c0, pair.c1, std::nullopt, std::nullopt};
  if (want_mate && mate_applicable(params)) {
    auto mate = construct_mate(params);
    file.s0 = mate.c0;
    file.s1 = mate.c1;
  }
  return file;
}

int run_verify(const CommandConfig& c, std::ostream& out, std::ostream& err) {
  resolve_format(c, Format::kJson, {Format::kJson});
  const auto file = load_pair(c, true);
  std::size_t zcz = 0;
  if (c.claimed_zcz) {
    zcz = *c.claimed_zcz;
  } else if (file.params) {
    zcz = file.params->zcz_width();
  } else {
    throw ParameterError("pair file has no params; pass --claimed-z");
  }

  std::vector<VerificationReport> reports;
  reports.push_back(check_structure(file.c0, file.c1));
  if (file.s0) {
    auto mate_structure = check_structure(*file.s0, *file.s1);
    for (auto& claim : mate_structure.claims) claim.id = "mate." + claim.id;
    auto& target = reports.front().claims;
    target.insert(target.end(), mate_structure.claims.begin(), mate_structure.claims.end());
    target.push_back({"mate.structure.length", "mate shares q and L with the pair", 0, 0,
                      file.s0->length() == file.c0.length() && file.s0->q() == file.c0.q(),
                      std::nullopt});
  }
  if (reports.front().pass()) {
    reports.push_back(check_scp(file.c0, file.c1, zcz));
    if (file.s0) {
      const ScpParams none;
      const ScpPair pair{file.c0, file.c1, file.params.value_or(none)};
      const ScpPair mate{*file.s0, *file.s1, file.params.value_or(none)};
      auto mate_scp = check_scp(mate, zcz);
      mate_scp.kind = "mate-scp";
      reports.push_back(std::move(mate_scp));
      reports.push_back(check_mate(pair, mate, zcz));
    }
  }

  bool pass = true;
  json list = json::array();
  for (const auto& r : reports) {
    pass = pass && r.pass();
    list.push_back(io::report_to_json(r));
    if (const auto* failed = r.first_failure()) {
      err << "verify: " << r.kind << " condition " << failed->id << " failed";
      if (failed->counterexample) err << " at u = " << *failed->counterexample;
      err << '\n';
    }
  }
  emit(c, out, dump({{"pass", pass}, {"reports", std::move(list)}}));
  return pass ? kExitOk : kExitCheckFailed;
}

int run_correlate(const CommandConfig& c, std::ostream& out) {
  resolve_format(c, Format::kCsv, {Format::kCsv});
  const bool needs_mate = c.kind != "aacs" && c.kind != "auto0" && c.kind != "auto1" &&
                          c.kind != "cross";
  const auto file = load_pair(c, needs_mate);
  if (needs_mate && !file.s0) {
    throw ParameterError("correlation kind '" + c.kind + "' needs a mate pair");
  }
  const auto profile = [&]() -> CorrelationProfile {
    if (c.kind == "aacs") return aacs_profile(file.c0, file.c1);
    if (c.kind == "auto0") return correlation_profile(file.c0, file.c0);
    if (c.kind == "auto1") return correlation_profile(file.c1, file.c1);
    if (c.kind == "cross") return correlation_profile(file.c0, file.c1);
    if (c.kind == "c0s0") return correlation_profile(file.c0, *file.s0);
    if (c.kind == "c0s1") return correlation_profile(file.c0, *file.s1);
    if (c.kind == "c1s0") return correlation_profile(file.c1, *file.s0);
    if (c.kind == "c1s1") return correlation_profile(file.c1, *file.s1);
    if (c.kind == "mate-sum") {
      auto sum = correlation_profile(file.c0, *file.s0);
      sum += correlation_profile(file.c1, *file.s1);
      return sum;
    }
    throw ParameterError("unknown correlation kind '" + c.kind + "'");
  }();
  std::ostringstream csv;
  io::write_profile_csv(csv, profile);
  emit(c, out, csv.str());
  return kExitOk;
}

int run_table1(const CommandConfig& c, std::ostream& out, std::ostream& err) {
  const Format f = resolve_format(c, Format::kCsv, {Format::kCsv, Format::kJson});
  const auto rows = table1_reproduce(c.q.value_or(2));
  bool ok = true;
  for (const auto& row : rows) {
    if (!row.matches()) {
      ok = false;
      err << "table1: length " << row.expected.length << " column does not reproduce (expected Z "
          << row.expected.zcz << ", S " << row.expected.sparsity.to_string() << "; derived Z "
          << row.derived.zcz << ", S " << row.derived.sparsity.to_string() << ")\n";
    }
  }
  if (f == Format::kCsv) {
    std::ostringstream csv;
    io::write_table1_csv(csv, rows);
    emit(c, out, csv.str());
  } else {
    json list = json::array();
    for (const auto& row : rows) {
      list.push_back({{"length", row.derived.length},
                      {"m", row.derived.m},
                      {"restricted", row.derived.restricted},
                      {"zcz", row.derived.zcz},
                      {"sparsity", row.derived.sparsity.to_string()},
                      {"measured_zcz", row.measured_zcz},
                      {"verified", row.verified},
                      {"matches", row.matches()}});
    }
    emit(c, out, dump(list));
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int run_sweep(const CommandConfig& c, std::ostream& out, std::ostream& err) {
  const Format f = resolve_format(c, Format::kCsv, {Format::kCsv, Format::kJson});
  SweepOptions options;
  options.q_set = c.q_set;
  for (int q : options.q_set) require_even_alphabet(q);
  options.m_min = c.m_min;
  options.m_max = c.m_max;
  if (options.m_max > 8) throw ParameterError("--m-max above 8 is not supported");
  options.seed = c.seed;
  options.workers = c.workers;
  options.timing = c.timing;
  options.constraint = c.skip_ordering ? ConstraintCheck::kSkipOrdering : ConstraintCheck::kEnforce;

  const auto summary = exhaustive_sweep(options);
  logger()->info("sweep: {} cells, {} scp failures, {} mate failures", summary.cells.size(),
                 summary.scp_total - summary.scp_passed, summary.mate_total - summary.mate_passed);
  if (f == Format::kCsv) {
    std::ostringstream csv;
    io::write_sweep_csv(csv, summary, options.timing);
    emit(c, out, csv.str());
  } else {
    emit(c, out,
         dump({{"cells", summary.cells.size()},
               {"scp_total", summary.scp_total},
               {"scp_passed", summary.scp_passed},
               {"mate_total", summary.mate_total},
               {"mate_passed", summary.mate_passed},
               {"failures", summary.failures()}}));
  }
  if (summary.failures() != 0) {
    err << "sweep: " << summary.failures() << " failing checks\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace

std::optional<CommandConfig> parse_command_line(int argc, const char* const* argv,
                                                std::ostream& out, std::ostream& err,
                                                int& status) {
  CommandConfig config;
  CLI::App app{"Sparse complementary pairs: construction and exact verification", "scp"};
  app.require_subcommand(1, 1);

  int q = 0, m = 0, t = 0;
  std::vector<int> restricted;
  std::string out_path, params_path, pair_path, format = "default";
  std::size_t claimed = 0;
  std::map<std::string, Format> formats{
      {"default", Format::kDefault}, {"json", Format::kJson}, {"csv", Format::kCsv}};

  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--q", q, "alphabet size (even)");
    sub->add_option("--m", m, "number of variables");
    sub->add_option("--t", t, "number of restricted variables");
    sub->add_option("--perm", config.perm, "permutation pi(1),...,pi(m)")->delimiter(',');
    sub->add_option("--restricted", restricted, "restricted variable indices")->delimiter(',');
    sub->add_option("--d", config.d, "restricted values d_1,...,d_t")->delimiter(',');
    sub->add_option("--g", config.g, "linear coefficients g_0,...,g_m")->delimiter(',');
    sub->add_option("--params", params_path, "JSON parameter file");
    sub->add_flag("--random-g", config.random_g, "draw g from --seed");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "output file (default stdout)");
    sub->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"default", "json", "csv"}));
    sub->add_option("--seed", config.seed, "seed for randomized g");
  };

  auto* construct = app.add_subcommand("construct", "build an SCP and write it as JSON");
  auto* mate = app.add_subcommand("mate", "build an SCP and its mate");
  auto* verify = app.add_subcommand("verify", "verify a pair file or constructed pair");
  auto* correlate = app.add_subcommand("correlate", "export a correlation profile as CSV");
  auto* table1 = app.add_subcommand("table1", "rebuild the length 15..35 SCP table");
  auto* sweep = app.add_subcommand("sweep", "exhaustive construction and verification sweep");

  for (auto* sub : {construct, mate, verify, correlate}) add_params(sub);
  for (auto* sub : {construct, mate, verify, correlate, table1, sweep}) add_common(sub);
  for (auto* sub : {verify, correlate}) {
    sub->add_option("--pair", pair_path, "pair JSON file");
  }
  verify->add_option("--claimed-z", claimed, "ZCZ width to check (default: derived Z)");
  correlate->add_option("--kind", config.kind,
                        "aacs, auto0, auto1, cross, c0s0, c0s1, c1s0, c1s1, mate-sum");
  table1->add_option("--q", q, "alphabet size (default 2)");
  sweep->add_option("--q-set", config.q_set, "alphabet sizes")->delimiter(',');
  sweep->add_option("--m-min", config.m_min, "smallest m");
  sweep->add_option("--m-max", config.m_max, "largest m");
  sweep->add_option("--workers", config.workers, "worker threads (0 = all cores)");
  sweep->add_flag("--timing", config.timing, "add a wall-time column (not deterministic)");
  sweep->add_flag("--no-ordering-constraint", config.skip_ordering,
                  "also visit permutations violating pi(m) > pi(alpha)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    status = app.exit(e, out, err);
    if (status != 0) status = kExitUsage;
    return std::nullopt;
  }

  const std::pair<CLI::App*, Subcommand> table[] = {
      {construct, Subcommand::kConstruct}, {mate, Subcommand::kMate},
      {verify, Subcommand::kVerify},       {correlate, Subcommand::kCorrelate},
      {table1, Subcommand::kTable1},       {sweep, Subcommand::kSweep}};
  for (const auto& [sub, id] : table) {
    if (!sub->parsed()) continue;
    config.subcommand = id;
    const auto given = [sub](const char* name) {
      const auto* option = sub->get_option_no_throw(name);
      return option != nullptr && option->count() > 0;
    };
    if (given("--q")) config.q = q;
    if (given("--m")) config.m = m;
    if (given("--t")) config.t = t;
    if (given("--restricted")) config.restricted = restricted;
    if (given("--params")) config.params_file = params_path;
    if (given("--pair")) config.pair_file = pair_path;
    if (given("--out")) config.out = out_path;
    if (given("--claimed-z")) config.claimed_zcz = claimed;
  }
  config.format = formats.at(format);
  status = kExitOk;
  return config;
}

int run(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.subcommand) {
      case Subcommand::kConstruct:
        return run_construct(config, out, false);
      case Subcommand::kMate:
        return run_construct(config, out, true);
      case Subcommand::kVerify:
        return run_verify(config, out, err);
      case Subcommand::kCorrelate:
        return run_correlate(config, out);
      case Subcommand::kTable1:
        return run_table1(config, out, err);
      case Subcommand::kSweep:
        return run_sweep(config, out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int main(int argc, const char* const* argv) {
  int status = kExitOk;
  const auto config = parse_command_line(argc, argv, std::cout, std::cerr, status);
  if (!config) return status;
  return run(*config, std::cout, std::cerr);
}

}  // namespace scp::cli
