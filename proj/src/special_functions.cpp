#include "nlqfi/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nlqfi {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// ln(n!) for n < kTableSize, accumulated in long double.
constexpr int kTableSize = 256;

const std::array<double, kTableSize>& log_factorial_table() {
  static const std::array<double, kTableSize> table = [] {
    std::array<double, kTableSize> t{};
    long double acc = 0.0L;
    t[0] = 0.0;
    for (int i = 1; i < kTableSize; ++i) {
      acc += std::log(static_cast<long double>(i));
      t[i] = static_cast<double>(acc);
    }
    return t;
  }();
  return table;
}

// Keep the recurrence pair inside [2^-600, 2^600].
constexpr double kRescaleHigh = 0x1p600;
constexpr double kRescaleLow = 0x1p-600;
constexpr double kRescaleLog = 600.0 * std::numbers::ln2;

}  // namespace

double normalize_phase(double phase) {
  if (!std::isfinite(phase)) return 0.0;
  constexpr double pi = std::numbers::pi;
  double p = std::remainder(phase, 2.0 * pi);
  if (p <= -pi) p += 2.0 * pi;
  return p;
}

ScaledComplex ScaledComplex::from_complex(std::complex<double> z) {
  if (z == std::complex<double>{0.0, 0.0}) return {};
  return {std::log(std::abs(z)), normalize_phase(std::arg(z))};
}

ScaledComplex ScaledComplex::from_parts(double log_magnitude, double phase) {
  if (log_magnitude == kNegInf) return {};
  return {log_magnitude, normalize_phase(phase)};
}

std::complex<double> ScaledComplex::to_complex() const {
  if (is_zero()) return {0.0, 0.0};
  return std::polar(std::exp(log_magnitude), phase);
}

double log_factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("log_factorial: negative argument");
  if (n < kTableSize) return log_factorial_table()[static_cast<std::size_t>(n)];
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("log_binomial: need 0 <= k <= n");
  if (k == 0 || k == n) return 0.0;
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

ScaledComplex HermiteSequence::next() {
  if (degree_ == 1) {
    prev_ = cur_;
    cur_ = 2.0 * x_ * cur_;
  } else if (degree_ > 1) {
    const std::complex<double> next =
        2.0 * x_ * cur_ - 2.0 * static_cast<double>(degree_ - 1) * prev_;
    prev_ = cur_;
    cur_ = next;
  }
  const double m = std::max(std::abs(prev_), std::abs(cur_));
  if (m > kRescaleHigh) {
    prev_ *= kRescaleLow;
    cur_ *= kRescaleLow;
    log_scale_ += kRescaleLog;
  } else if (m > 0.0 && m < kRescaleLow) {
    prev_ *= kRescaleHigh;
    cur_ *= kRescaleHigh;
    log_scale_ -= kRescaleLog;
  }
  ++degree_;
  auto s = ScaledComplex::from_complex(cur_);
  if (!s.is_zero()) s.log_magnitude += log_scale_;
  return s;
}

std::vector<ScaledComplex> hermite_table(int n_max, std::complex<double> x) {
  if (n_max < 0) throw std::invalid_argument("hermite_table: negative degree");
  std::vector<ScaledComplex> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  HermiteSequence seq(x);
  for (int k = 0; k <= n_max; ++k) out.push_back(seq.next());
  return out;
}

ScaledComplex hermite(int n, std::complex<double> x) {
  if (n < 0) throw std::invalid_argument("hermite: negative degree");
  return hermite_table(n, x).back();
}

double log_sum_exp(const std::vector<double>& values) {
  double top = kNegInf;
  for (double v : values) top = std::max(top, v);
  if (top == kNegInf) return kNegInf;
  double acc = 0.0;
  for (double v : values) {
    if (v != kNegInf) acc += std::exp(v - top);
  }
  return top + std::log(acc);
}

}  // namespace nlqfi
