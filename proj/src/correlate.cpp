#include "scp/correlate.hpp"

#include <fmt/format.h>

namespace scp {

namespace {

void require_compatible(const SparseSequence& a, const SparseSequence& b) {
  if (a.q() != b.q()) {
    throw ParameterError(fmt::format("alphabet mismatch: q = {} vs q = {}", a.q(), b.q()));
  }
  if (a.length() != b.length()) {
    throw ParameterError(
        fmt::format("length mismatch: L = {} vs L = {}", a.length(), b.length()));
  }
}

// sum_i a[i + lead] * conj(b[i + lag]) over the overlap.
CyclotomicInt overlap_sum(const SparseSequence& a, const SparseSequence& b, std::size_t lead,
                          std::size_t lag) {
  const int q = a.q();
  CyclotomicInt out(q);
  const std::size_t n = a.length() - lead - lag;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = a[i + lead];
    const auto& y = b[i + lag];
    if (x && y) out.add_root((*x + static_cast<std::uint32_t>(q) - *y) % q);
  }
  return out;
}

}  // namespace

CyclotomicInt cross_correlation(const SparseSequence& a, const SparseSequence& b, long u) {
  require_compatible(a, b);
  const long length = static_cast<long>(a.length());
  if (u <= -length || u >= length) {
    throw ParameterError(fmt::format("shift {} outside |u| < L = {}", u, length));
  }
  if (u < 0) return cross_correlation(b, a, -u).conj();
  return overlap_sum(a, b, static_cast<std::size_t>(u), 0);
}

const CyclotomicInt& CorrelationProfile::at(long u) const {
  if (u < min_shift_ || u > max_shift()) {
    throw ParameterError(fmt::format("shift {} outside profile range", u));
  }
  return values_[static_cast<std::size_t>(u - min_shift_)];
}

CorrelationProfile& CorrelationProfile::operator+=(const CorrelationProfile& other) {
  if (other.min_shift_ != min_shift_ || other.values_.size() != values_.size()) {
    throw ParameterError("adding profiles over different shift ranges");
  }
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += other.values_[k];
  return *this;
}

CorrelationProfile correlation_profile(const SparseSequence& a, const SparseSequence& b) {
  require_compatible(a, b);
  const long length = static_cast<long>(a.length());
  std::vector<CyclotomicInt> values;
  values.reserve(static_cast<std::size_t>(2 * length - 1));
  for (long u = -(length - 1); u < length; ++u) values.push_back(cross_correlation(a, b, u));
  return {-(length - 1), std::move(values)};
}

CorrelationProfile aacs_profile(const SparseSequence& a, const SparseSequence& b) {
  auto sum = correlation_profile(a, a);
  sum += correlation_profile(b, b);
  return sum;
}

bool conj_symmetry_check(const SparseSequence& a, const SparseSequence& b) {
  require_compatible(a, b);
  const long length = static_cast<long>(a.length());
  for (long u = -(length - 1); u < length; ++u) {
    // Negative branch evaluated directly: sum_i a[i] * conj(b[i - u]).
    const auto lhs = u >= 0 ? overlap_sum(a, b, static_cast<std::size_t>(u), 0)
                            : overlap_sum(a, b, 0, static_cast<std::size_t>(-u));
    const auto rhs = u <= 0 ? overlap_sum(b, a, static_cast<std::size_t>(-u), 0)
                            : overlap_sum(b, a, 0, static_cast<std::size_t>(u));
    if (!lhs.equals(rhs.conj())) return false;
  }
  return true;
}

}  // namespace scp
