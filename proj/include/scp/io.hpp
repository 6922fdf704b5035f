#pragma once

// File formats.
//
// Sequence (JSON):
//   {"q": 4, "m": 5, "t": 2, "L": 27, "entries": [0, null, 3, ...]}
//   null is a zero entry, an integer is the exponent e of xi^e.
//
// Params (JSON), either form:
//   {"q": 4, "m": 5, "t": 2, "pi": [1,3,2,4,5], "d": [0,0], "g": [0,0,3,0,0,0]}
//   {"q": 4, "m": 5, "restricted": [1,3], "d": [0,0], "g": [...]}
//   d and g default to zeros. In the pi form t defaults to |d|.
//
// Pair file (JSON): {"params": {...}, "c0": seq, "c1": seq}
//   plus "s0", "s1" when a mate is included.
//
// Correlation profile (CSV): u,re,im,magnitude,is_exact_zero

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "scp/construct.hpp"
#include "scp/correlate.hpp"
#include "scp/verify.hpp"

namespace scp::io {

using nlohmann::json;

json sequence_to_json(const SparseSequence& s, int m, int t);
SparseSequence sequence_from_json(const json& j);

json params_to_json(const ScpParams& p);
ScpParams params_from_json(const json& j);

struct PairFile {
  std::optional<ScpParams> params;
  SparseSequence c0;
  SparseSequence c1;
  std::optional<SparseSequence> s0;
  std::optional<SparseSequence> s1;
};

json pair_to_json(const ScpPair& pair, const ScpPair* mate = nullptr);
PairFile pair_from_json(const json& j);

json report_to_json(const VerificationReport& report);

// Parses text as JSON; errors carry the line and column.
json parse_json(const std::string& text, const std::string& source);
json read_json_file(const std::string& path);

void write_profile_csv(std::ostream& out, const CorrelationProfile& profile);
void write_sweep_csv(std::ostream& out, const SweepSummary& summary, bool timing);
void write_table1_csv(std::ostream& out, const std::vector<Table1Row>& rows);

std::string format_restricted(const std::vector<int>& restricted);

}  // namespace scp::io
