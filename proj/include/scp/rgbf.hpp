#pragma once

// Generalized Boolean functions over Z_q and the sparse sequences obtained by
// restricting and truncating them.
//
// Bit convention (shared by every module): variable x_l, l = 1..m, is bit
// (l - 1) of a sequence index, i.e. i = sum_l i_l * 2^(l-1). x_1 is the least
// significant bit.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace scp {

// Thrown for malformed functions, restrictions, sequences and parameters.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Sequences are materialized as dense vectors of length 2^m.
inline constexpr int kMaxSequenceVariables = 24;
// Assignments are packed into a 64-bit index.
inline constexpr int kMaxVariables = 63;

// Throws ParameterError unless q is an even integer >= 2.
void require_even_alphabet(int q);

struct Monomial {
  int coefficient = 0;     // in Z_q
  std::vector<int> vars;   // 1-based variable indices; empty = constant
};

class GeneralizedBooleanFunction {
 public:
  // Coefficients are reduced mod q. Duplicate monomials are kept and summed
  // when evaluated.
  GeneralizedBooleanFunction(int q, int m, std::vector<Monomial> terms = {});

  int q() const { return q_; }
  int m() const { return m_; }
  const std::vector<Monomial>& terms() const { return terms_; }

  // Variables are read from the bits of `index` (x_l = bit l-1).
  int evaluate(std::uint64_t index) const;
  // `assignment[l-1]` holds x_l; must contain exactly m bits.
  int evaluate(std::span<const std::uint8_t> assignment) const;

  GeneralizedBooleanFunction plus(int coefficient, std::vector<int> vars) const;
  // Concatenates the term lists. Both functions must share q and m.
  GeneralizedBooleanFunction plus(const GeneralizedBooleanFunction& other) const;

  std::string to_string() const;

 private:
  int q_;
  int m_;
  std::vector<Monomial> terms_;
};

// Variables x_{indices[a]} are fixed to values[a]. t = indices.size().
struct Restriction {
  std::vector<int> indices;
  std::vector<std::uint8_t> values;

  std::size_t t() const { return indices.size(); }
  // Throws ParameterError unless |V| = |d| < m, indices distinct and in
  // 1..m, values binary.
  void validate(int m) const;
  // The complement set V' in ascending order.
  std::vector<int> unrestricted(int m) const;
};

using Exponent = std::optional<std::uint32_t>;  // nullopt = zero entry

struct Sparsity {
  std::size_t zeros = 0;
  std::size_t length = 1;

  double value() const { return static_cast<double>(zeros) / static_cast<double>(length); }
  // Exact rational comparison; 14/22 == 7/11.
  bool equivalent(const Sparsity& other) const { return zeros * other.length == other.zeros * length; }
  // Unreduced "zeros/length".
  std::string to_string() const;
  friend bool operator==(const Sparsity&, const Sparsity&) = default;
};

// A length-L sequence whose entries are zero or q-th roots of unity xi^e.
// Sequences handed to the correlation checkers are expected to have non-zero
// first and last entries; raw restrictions (before truncation) need not.
class SparseSequence {
 public:
  SparseSequence(int q, std::vector<Exponent> entries);

  int q() const { return q_; }
  std::size_t length() const { return entries_.size(); }
  const std::vector<Exponent>& entries() const { return entries_; }
  const Exponent& operator[](std::size_t i) const { return entries_[i]; }

  std::size_t zero_count() const;
  std::size_t nonzero_count() const { return length() - zero_count(); }
  bool has_nonzero_boundary() const;
  Sparsity sparsity() const { return {zero_count(), length()}; }

  // Returns a copy with entry i replaced.
  SparseSequence with_entry(std::size_t i, Exponent value) const;

  friend bool operator==(const SparseSequence&, const SparseSequence&) = default;

 private:
  int q_;
  std::vector<Exponent> entries_;
};

// Whitespace-separated tokens: an exponent, or `.` for a zero entry, e.g.
// "0 . 3 . 1".
SparseSequence parse_exponents(int q, const std::string& text);

SparseSequence to_full_sequence(const GeneralizedBooleanFunction& f);
SparseSequence restrict_function(const GeneralizedBooleanFunction& f, const Restriction& r);

struct TruncationBounds {
  std::size_t first = 0;  // k0
  std::size_t last = 0;   // k1
  std::size_t length() const { return last - first + 1; }
};

TruncationBounds truncation_bounds(const Restriction& r, int m);

// Keeps entries first..last. Throws ParameterError if either boundary entry
// is zero or the bounds are out of range.
SparseSequence truncate(const SparseSequence& s, TruncationBounds bounds);

}  // namespace scp
