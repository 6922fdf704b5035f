#include "scp/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "scp/rgbf.hpp"

namespace scp {

namespace {

using Poly = std::vector<std::int64_t>;

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Remainder of num / den for monic den; quotient returned through `quotient`
// when requested.
Poly divide_monic(Poly num, const Poly& den, Poly* quotient) {
  const std::size_t dd = den.size() - 1;
  if (quotient) quotient->assign(num.size() > dd ? num.size() - dd : 1, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    const std::int64_t lead = num[k];
    if (lead == 0) continue;
    if (quotient) (*quotient)[k - dd] = lead;
    for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= lead * den[j];
  }
  num.resize(std::max<std::size_t>(dd, 1));
  if (dd == 0) num.assign(1, 0);
  return num;
}

Poly compute_cyclotomic(int n) {
  // x^n - 1 = prod_{d | n} Phi_d(x)
  Poly num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[n] = 1;
  Poly divisor{1};
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) divisor = multiply(divisor, cyclotomic_polynomial(d));
  }
  Poly quotient;
  Poly rem = divide_monic(num, divisor, &quotient);
  if (std::any_of(rem.begin(), rem.end(), [](std::int64_t c) { return c != 0; })) {
    throw std::logic_error(fmt::format("x^{} - 1 not divisible while building Phi_{}", n, n));
  }
  trim(quotient);
  return quotient;
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int n) {
  if (n < 1) throw ParameterError(fmt::format("cyclotomic index {} must be positive", n));
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const Poly>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  // Computed outside the lock; recursion needs the cache for smaller divisors.
  auto poly = std::make_unique<const Poly>(compute_cyclotomic(n));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::move(poly));
  return *it->second;
}

std::vector<std::int64_t> reduce_mod_cyclotomic(std::vector<std::int64_t> poly, int n) {
  if (poly.empty()) return {0};
  if (is_power_of_two(n) && n >= 2) {
    // Phi_n = x^(n/2) + 1, so x^(k + n/2) == -x^k; fold in one pass per period.
    const std::size_t half = static_cast<std::size_t>(n) / 2;
    Poly rem(half, 0);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      const std::size_t period = k / half;
      rem[k % half] += (period % 2 == 0) ? poly[k] : -poly[k];
    }
    return rem;
  }
  return divide_monic(std::move(poly), cyclotomic_polynomial(n), nullptr);
}

CyclotomicInt::CyclotomicInt(int q) : counts_(static_cast<std::size_t>(q), 0) {
  if (q < 1) throw ParameterError(fmt::format("root-of-unity order {} must be positive", q));
}

CyclotomicInt CyclotomicInt::integer(int q, std::int64_t value) {
  CyclotomicInt out(q);
  out.counts_[0] = value;
  return out;
}

CyclotomicInt CyclotomicInt::root(int q, std::uint32_t exponent) {
  CyclotomicInt out(q);
  out.add_root(exponent);
  return out;
}

void CyclotomicInt::add_root(std::uint32_t exponent, std::int64_t multiplicity) {
  counts_[exponent % counts_.size()] += multiplicity;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& other) {
  if (other.q() != q()) throw ParameterError("adding cyclotomic integers of different order");
  for (std::size_t e = 0; e < counts_.size(); ++e) counts_[e] += other.counts_[e];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& other) {
  if (other.q() != q()) throw ParameterError("subtracting cyclotomic integers of different order");
  for (std::size_t e = 0; e < counts_.size(); ++e) counts_[e] -= other.counts_[e];
  return *this;
}

CyclotomicInt CyclotomicInt::conj() const {
  CyclotomicInt out(q());
  const std::size_t n = counts_.size();
  for (std::size_t e = 0; e < n; ++e) out.counts_[(n - e) % n] = counts_[e];
  return out;
}

bool CyclotomicInt::is_zero() const {
  const auto rem = reduce_mod_cyclotomic(counts_, q());
  return std::all_of(rem.begin(), rem.end(), [](std::int64_t c) { return c == 0; });
}

namespace {

// xi^e, exact whenever it lies on an axis.
std::complex<double> unit_root(std::size_t e, std::size_t q, double step) {
  if ((4 * e) % q == 0) {
    static constexpr std::complex<double> kAxis[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kAxis[(4 * e) / q];
  }
  return std::polar(1.0, step * static_cast<double>(e));
}

}  // namespace

std::complex<double> CyclotomicInt::to_complex() const {
  std::complex<double> sum{0.0, 0.0};
  const double step = 2.0 * std::numbers::pi / static_cast<double>(q());
  for (std::size_t e = 0; e < counts_.size(); ++e) {
    if (counts_[e] != 0) {
      sum += static_cast<double>(counts_[e]) * unit_root(e, counts_.size(), step);
    }
  }
  return sum;
}

std::string CyclotomicInt::to_string() const {
  std::string out;
  for (std::size_t e = 0; e < counts_.size(); ++e) {
    if (counts_[e] == 0) continue;
    if (!out.empty()) out += counts_[e] < 0 ? " - " : " + ";
    else if (counts_[e] < 0) out += "-";
    out += fmt::format("{}*xi^{}", counts_[e] < 0 ? -counts_[e] : counts_[e], e);
  }
  return out.empty() ? "0" : out;
}

}  // namespace scp
