#pragma once

#include <cstddef>
#include <vector>

#include "scp/cyclotomic.hpp"
#include "scp/rgbf.hpp"

namespace scp {

// Aperiodic cross-correlation rho(a, b; u), |u| < L.
//
//   u >= 0 : sum_{i=0}^{L-1-u} a[i+u] * conj(b[i])
//   u <  0 : conj(rho(b, a; -u))
//
// Zero entries contribute nothing; a pair of roots xi^x, xi^y contributes
// xi^(x-y). Throws ParameterError on length/alphabet mismatch or |u| >= L.
CyclotomicInt cross_correlation(const SparseSequence& a, const SparseSequence& b, long u);

inline CyclotomicInt autocorrelation(const SparseSequence& a, long u) {
  return cross_correlation(a, a, u);
}

// rho(a, b; u) over every shift -(L-1) .. L-1.
class CorrelationProfile {
 public:
  CorrelationProfile(long min_shift, std::vector<CyclotomicInt> values)
      : min_shift_(min_shift), values_(std::move(values)) {}

  long min_shift() const { return min_shift_; }
  long max_shift() const { return min_shift_ + static_cast<long>(values_.size()) - 1; }
  const CyclotomicInt& at(long u) const;
  const std::vector<CyclotomicInt>& values() const { return values_; }

  CorrelationProfile& operator+=(const CorrelationProfile& other);

 private:
  long min_shift_;
  std::vector<CyclotomicInt> values_;
};

CorrelationProfile correlation_profile(const SparseSequence& a, const SparseSequence& b);

// rho(a, a; u) + rho(b, b; u) for every shift.
CorrelationProfile aacs_profile(const SparseSequence& a, const SparseSequence& b);

// Checks rho(a, b; u) == conj(rho(b, a; -u)) for all |u| < L, evaluating the
// negative-shift branch directly rather than through the identity.
bool conj_symmetry_check(const SparseSequence& a, const SparseSequence& b);

}  // namespace scp
