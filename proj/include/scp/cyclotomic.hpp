#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace scp {

// An integer combination sum_e counts[e] * xi^e of q-th roots of unity,
// xi = exp(2 pi i / q). The representation is not unique (for q = 4,
// 1 + xi^2 == 0), so equality goes through is_zero().
//
// Counts are 64-bit. Correlations of length-L sequences have |counts[e]| <= L,
// far below overflow for any sequence that fits in memory.
class CyclotomicInt {
 public:
  explicit CyclotomicInt(int q);
  static CyclotomicInt integer(int q, std::int64_t value);
  static CyclotomicInt root(int q, std::uint32_t exponent);

  int q() const { return static_cast<int>(counts_.size()); }
  const std::vector<std::int64_t>& counts() const { return counts_; }

  void add_root(std::uint32_t exponent, std::int64_t multiplicity = 1);

  CyclotomicInt& operator+=(const CyclotomicInt& other);
  CyclotomicInt& operator-=(const CyclotomicInt& other);
  friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
  friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }

  // Complex conjugate: xi^e -> xi^(-e).
  CyclotomicInt conj() const;

  // Exact: reduces the counts polynomial modulo the q-th cyclotomic polynomial.
  bool is_zero() const;
  bool equals(const CyclotomicInt& other) const { return (*this - other).is_zero(); }

  // Display only.
  std::complex<double> to_complex() const;

  std::string to_string() const;

 private:
  std::vector<std::int64_t> counts_;
};

// Integer coefficients of Phi_n(x), lowest degree first. Cached per n.
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);

// Remainder of `poly` (lowest degree first) modulo Phi_n, degree < phi(n).
std::vector<std::int64_t> reduce_mod_cyclotomic(std::vector<std::int64_t> poly, int n);

}  // namespace scp
