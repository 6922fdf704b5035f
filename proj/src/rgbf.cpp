#include "scp/rgbf.hpp"

#include <algorithm>
#include <sstream>

#include <fmt/format.h>

namespace scp {

namespace {

int reduce(long long value, int q) {
  long long r = value % q;
  return static_cast<int>(r < 0 ? r + q : r);
}

void require_sequence_size(int m) {
  if (m > kMaxSequenceVariables) {
    throw ParameterError(fmt::format("m = {} exceeds the sequence limit of {} variables", m,
                                     kMaxSequenceVariables));
  }
}

}  // namespace

void require_even_alphabet(int q) {
  if (q < 2 || q % 2 != 0) {
    throw ParameterError(fmt::format("alphabet size q = {} must be an even integer >= 2", q));
  }
}

GeneralizedBooleanFunction::GeneralizedBooleanFunction(int q, int m, std::vector<Monomial> terms)
    : q_(q), m_(m), terms_(std::move(terms)) {
  require_even_alphabet(q_);
  if (m_ < 1 || m_ > kMaxVariables) {
    throw ParameterError(fmt::format("variable count m = {} must lie in 1..{}", m_, kMaxVariables));
  }
  for (auto& term : terms_) {
    term.coefficient = reduce(term.coefficient, q_);
    for (int v : term.vars) {
      if (v < 1 || v > m_) {
        throw ParameterError(fmt::format("variable x{} outside 1..{}", v, m_));
      }
    }
  }
}

int GeneralizedBooleanFunction::evaluate(std::uint64_t index) const {
  long long sum = 0;
  for (const auto& term : terms_) {
    bool active = std::all_of(term.vars.begin(), term.vars.end(),
                              [&](int v) { return ((index >> (v - 1)) & 1u) != 0; });
    if (active) sum += term.coefficient;
  }
  return reduce(sum, q_);
}

int GeneralizedBooleanFunction::evaluate(std::span<const std::uint8_t> assignment) const {
  if (assignment.size() != static_cast<std::size_t>(m_)) {
    throw ParameterError(
        fmt::format("assignment has {} bits, function has {} variables", assignment.size(), m_));
  }
  std::uint64_t index = 0;
  for (std::size_t l = 0; l < assignment.size(); ++l) {
    if (assignment[l] > 1) throw ParameterError("assignment bits must be 0 or 1");
    index |= static_cast<std::uint64_t>(assignment[l]) << l;
  }
  return evaluate(index);
}

GeneralizedBooleanFunction GeneralizedBooleanFunction::plus(int coefficient,
                                                            std::vector<int> vars) const {
  auto terms = terms_;
  terms.push_back({coefficient, std::move(vars)});
  return {q_, m_, std::move(terms)};
}

GeneralizedBooleanFunction GeneralizedBooleanFunction::plus(
    const GeneralizedBooleanFunction& other) const {
  if (other.q_ != q_ || other.m_ != m_) {
    throw ParameterError("cannot add functions with different q or m");
  }
  auto terms = terms_;
  terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
  return {q_, m_, std::move(terms)};
}

std::string GeneralizedBooleanFunction::to_string() const {
  std::string out;
  for (const auto& term : terms_) {
    if (!out.empty()) out += " + ";
    if (term.vars.empty()) {
      out += std::to_string(term.coefficient);
      continue;
    }
    if (term.coefficient != 1) out += std::to_string(term.coefficient);
    for (int v : term.vars) out += fmt::format("x{}", v);
  }
  return out.empty() ? "0" : out;
}

void Restriction::validate(int m) const {
  if (indices.size() != values.size()) {
    throw ParameterError(fmt::format("restriction has {} indices but {} values", indices.size(),
                                     values.size()));
  }
  if (indices.size() >= static_cast<std::size_t>(m)) {
    throw ParameterError(fmt::format("t = {} restricted variables requires t < m = {}",
                                     indices.size(), m));
  }
  std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
  for (int v : indices) {
    if (v < 1 || v > m) throw ParameterError(fmt::format("restricted x{} outside 1..{}", v, m));
    if (seen[v]) throw ParameterError(fmt::format("x{} restricted twice", v));
    seen[v] = true;
  }
  for (auto d : values) {
    if (d > 1) throw ParameterError("restriction values must be 0 or 1");
  }
}

std::vector<int> Restriction::unrestricted(int m) const {
  std::vector<int> out;
  for (int v = 1; v <= m; ++v) {
    if (std::find(indices.begin(), indices.end(), v) == indices.end()) out.push_back(v);
  }
  return out;
}

std::string Sparsity::to_string() const { return fmt::format("{}/{}", zeros, length); }

SparseSequence::SparseSequence(int q, std::vector<Exponent> entries)
    : q_(q), entries_(std::move(entries)) {
  require_even_alphabet(q_);
  if (entries_.empty()) throw ParameterError("sequence length must be at least 1");
  for (const auto& e : entries_) {
    if (e && *e >= static_cast<std::uint32_t>(q_)) {
      throw ParameterError(fmt::format("exponent {} outside Z_{}", *e, q_));
    }
  }
}

std::size_t SparseSequence::zero_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](const Exponent& e) { return !e; }));
}

bool SparseSequence::has_nonzero_boundary() const {
  return entries_.front().has_value() && entries_.back().has_value();
}

SparseSequence SparseSequence::with_entry(std::size_t i, Exponent value) const {
  auto entries = entries_;
  entries.at(i) = value;
  return {q_, std::move(entries)};
}

SparseSequence parse_exponents(int q, const std::string& text) {
  std::istringstream in(text);
  std::vector<Exponent> entries;
  std::string token;
  while (in >> token) {
    if (token == ".") {
      entries.emplace_back(std::nullopt);
      continue;
    }
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw ParameterError(fmt::format("bad sequence token '{}'", token));
    entries.emplace_back(static_cast<std::uint32_t>(value));
  }
  return {q, std::move(entries)};
}

SparseSequence to_full_sequence(const GeneralizedBooleanFunction& f) {
  return restrict_function(f, Restriction{});
}

SparseSequence restrict_function(const GeneralizedBooleanFunction& f, const Restriction& r) {
  require_sequence_size(f.m());
  r.validate(f.m());
  std::uint64_t mask = 0;
  std::uint64_t pattern = 0;
  for (std::size_t a = 0; a < r.t(); ++a) {
    std::uint64_t bit = std::uint64_t{1} << (r.indices[a] - 1);
    mask |= bit;
    if (r.values[a]) pattern |= bit;
  }
  const std::uint64_t size = std::uint64_t{1} << f.m();
  std::vector<Exponent> entries(size);
  for (std::uint64_t i = 0; i < size; ++i) {
    if ((i & mask) == pattern) entries[i] = static_cast<std::uint32_t>(f.evaluate(i));
  }
  return {f.q(), std::move(entries)};
}

TruncationBounds truncation_bounds(const Restriction& r, int m) {
  require_sequence_size(m);
  r.validate(m);
  std::size_t first = 0;
  for (std::size_t a = 0; a < r.t(); ++a) {
    if (r.values[a]) first += std::size_t{1} << (r.indices[a] - 1);
  }
  std::size_t span = 0;
  for (int v : r.unrestricted(m)) span += std::size_t{1} << (v - 1);
  return {first, first + span};
}

SparseSequence truncate(const SparseSequence& s, TruncationBounds bounds) {
  if (bounds.first > bounds.last || bounds.last >= s.length()) {
    throw ParameterError(fmt::format("truncation bounds ({}, {}) invalid for length {}",
                                     bounds.first, bounds.last, s.length()));
  }
  if (!s[bounds.first] || !s[bounds.last]) {
    throw ParameterError(fmt::format(
        "truncation bounds ({}, {}) are inconsistent: boundary entry is zero", bounds.first,
        bounds.last));
  }
  const auto begin = s.entries().begin();
  return {s.q(), std::vector<Exponent>(begin + static_cast<std::ptrdiff_t>(bounds.first),
                                       begin + static_cast<std::ptrdiff_t>(bounds.last) + 1)};
}

}  // namespace scp
