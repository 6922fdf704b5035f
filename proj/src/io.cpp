#include "scp/io.hpp"

#include <complex>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace scp::io {

namespace {

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw ParameterError(fmt::format("missing field '{}'", key));
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParameterError(fmt::format("field '{}': {}", key, e.what()));
  }
}

template <typename T>
T field_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? field<T>(j, key) : fallback;
}

std::string number(double v) { return fmt::format("{:.12g}", v); }

// Line and column of a byte offset, 1-based.
std::pair<std::size_t, std::size_t> locate(const std::string& text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

json sequence_to_json(const SparseSequence& s, int m, int t) {
  json entries = json::array();
  for (const auto& e : s.entries()) {
    if (e) {
      entries.push_back(*e);
    } else {
      entries.push_back(nullptr);
    }
  }
  return {{"q", s.q()}, {"m", m}, {"t", t}, {"L", s.length()}, {"entries", std::move(entries)}};
}

SparseSequence sequence_from_json(const json& j) {
  if (!j.is_object()) throw ParameterError("sequence must be a JSON object");
  const int q = field<int>(j, "q");
  const auto& raw = j.contains("entries") ? j.at("entries") : json();
  if (!raw.is_array()) throw ParameterError("sequence field 'entries' must be an array");
  std::vector<Exponent> entries;
  entries.reserve(raw.size());
  for (const auto& e : raw) {
    if (e.is_null()) {
      entries.emplace_back(std::nullopt);
    } else if (e.is_number_unsigned()) {
      entries.emplace_back(e.get<std::uint32_t>());
    } else {
      throw ParameterError(fmt::format("sequence entry {} is neither null nor an exponent", e.dump()));
    }
  }
  if (j.contains("L") && field<std::size_t>(j, "L") != entries.size()) {
    throw ParameterError(fmt::format("sequence header says L = {} but has {} entries",
                                     field<std::size_t>(j, "L"), entries.size()));
  }
  return {q, std::move(entries)};
}

json params_to_json(const ScpParams& p) {
  json d = json::array();
  for (auto v : p.d) d.push_back(static_cast<int>(v));
  return {{"q", p.q},
          {"m", p.m},
          {"t", p.t},
          {"pi", p.perm},
          {"d", std::move(d)},
          {"g", p.g},
          {"derived",
           {{"L", p.length()}, {"Z", p.zcz_width()}, {"sparsity", p.sparsity().to_string()}}}};
}

ScpParams params_from_json(const json& j) {
  if (!j.is_object()) throw ParameterError("params must be a JSON object");
  const int q = field<int>(j, "q");
  const int m = field<int>(j, "m");
  auto d = field_or<std::vector<int>>(j, "d", {});
  std::vector<std::uint8_t> bits;
  for (int v : d) {
    if (v != 0 && v != 1) throw ParameterError("d must be binary");
    bits.push_back(static_cast<std::uint8_t>(v));
  }
  auto g = field_or<std::vector<int>>(j, "g", {});

  if (j.contains("restricted")) {
    if (j.contains("pi")) throw ParameterError("give either 'pi' or 'restricted', not both");
    return params_from_restricted_set(m, q, field<std::vector<int>>(j, "restricted"),
                                      std::move(bits), std::move(g));
  }
  ScpParams p;
  p.q = q;
  p.m = m;
  p.perm = field<std::vector<int>>(j, "pi");
  p.t = field_or<int>(j, "t", static_cast<int>(bits.size()));
  p.d = std::move(bits);
  p.g = std::move(g);
  p = with_defaults(std::move(p));
  validate_scp(p);
  return p;
}

json pair_to_json(const ScpPair& pair, const ScpPair* mate) {
  const auto& p = pair.params;
  json out = {{"params", params_to_json(p)},
              {"c0", sequence_to_json(pair.c0, p.m, p.t)},
              {"c1", sequence_to_json(pair.c1, p.m, p.t)}};
  if (mate) {
    out["s0"] = sequence_to_json(mate->c0, p.m, p.t);
    out["s1"] = sequence_to_json(mate->c1, p.m, p.t);
  }
  return out;
}

PairFile pair_from_json(const json& j) {
  if (!j.is_object()) throw ParameterError("pair file must be a JSON object");
  if (!j.contains("c0") || !j.contains("c1")) {
    throw ParameterError("pair file needs sequences 'c0' and 'c1'");
  }
  PairFile out{std::nullopt, sequence_from_json(j.at("c0")), sequence_from_json(j.at("c1")),
               std::nullopt, std::nullopt};
  if (j.contains("params")) out.params = params_from_json(j.at("params"));
  if (j.contains("s0") != j.contains("s1")) {
    throw ParameterError("pair file has only one of the mate sequences 's0', 's1'");
  }
  if (j.contains("s0")) {
    out.s0 = sequence_from_json(j.at("s0"));
    out.s1 = sequence_from_json(j.at("s1"));
  }
  return out;
}

json report_to_json(const VerificationReport& report) {
  json claims = json::array();
  for (const auto& c : report.claims) {
    claims.push_back({{"id", c.id},
                      {"description", c.description},
                      {"shifts", {c.min_shift, c.max_shift}},
                      {"pass", c.pass},
                      {"counterexample", c.counterexample ? json(*c.counterexample) : json()}});
  }
  const auto* failed = report.first_failure();
  return {{"kind", report.kind},
          {"pass", report.pass()},
          {"first_failure", failed ? json(failed->id) : json()},
          {"L", report.length},
          {"claimed_zcz", report.claimed_zcz},
          {"measured_zcz", report.measured_zcz},
          {"sparsity", report.sparsity.to_string()},
          {"claims", std::move(claims)}};
}

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParameterError(fmt::format("{}:{}:{}: malformed JSON: {}", source, line, column, e.what()));
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError(fmt::format("cannot open '{}'", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str(), path);
}

void write_profile_csv(std::ostream& out, const CorrelationProfile& profile) {
  out << "u,re,im,magnitude,is_exact_zero\n";
  for (long u = profile.min_shift(); u <= profile.max_shift(); ++u) {
    const auto& value = profile.at(u);
    const bool zero = value.is_zero();
    const auto z = zero ? std::complex<double>{} : value.to_complex();
    out << u << ',' << number(z.real()) << ',' << number(z.imag()) << ',' << number(std::abs(z))
        << ',' << (zero ? 1 : 0) << '\n';
  }
}

void write_sweep_csv(std::ostream& out, const SweepSummary& summary, bool timing) {
  out << "q,m,t,pi,d,g,g_kind,L,Z,sparsity,scp_pass,measured_zcz,mate_applicable,mate_pass,"
         "first_failure";
  if (timing) out << ",wall_us";
  out << '\n';
  for (const auto& c : summary.cells) {
    const auto& p = c.params;
    std::vector<int> d(p.d.begin(), p.d.end());
    out << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}", p.q, p.m, p.t,
                       fmt::join(p.perm, " "), fmt::join(d, " "), fmt::join(p.g, " "),
                       c.random_g ? "random" : "zero", c.length, c.zcz, c.sparsity.to_string(),
                       c.scp_pass ? 1 : 0, c.measured_zcz, c.mate_applicable ? 1 : 0,
                       c.mate_pass ? 1 : 0, c.first_failure);
    if (timing) out << ',' << fmt::format("{:.1f}", c.wall_us);
    out << '\n';
  }
}

std::string format_restricted(const std::vector<int>& restricted) {
  std::vector<std::string> names;
  for (int v : restricted) names.push_back(fmt::format("x{}", v));
  return fmt::format("{}", fmt::join(names, " "));
}

void write_table1_csv(std::ostream& out, const std::vector<Table1Row>& rows) {
  out << "length,m,restricted,zcz,sparsity\n";
  for (const auto& row : rows) {
    const auto& d = row.derived;
    out << fmt::format("{},{},{},{},{}\n", d.length, d.m, format_restricted(d.restricted), d.zcz,
                       d.sparsity.to_string());
  }
}

}  // namespace scp::io
