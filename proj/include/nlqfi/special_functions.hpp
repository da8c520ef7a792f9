#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <vector>

namespace nlqfi {

/// A complex number stored as natural-log magnitude plus phase, so that
/// quantities like |H_n(x)|^2 at large n can be combined without overflow.
/// log_magnitude == -inf encodes an exact zero.
struct ScaledComplex {
  double log_magnitude = -std::numeric_limits<double>::infinity();
  double phase = 0.0;  // in (-pi, pi]

  static ScaledComplex from_complex(std::complex<double> z);
  static ScaledComplex from_parts(double log_magnitude, double phase);

  bool is_zero() const { return log_magnitude == -std::numeric_limits<double>::infinity(); }

  /// Only meaningful when log_magnitude is within double range.
  std::complex<double> to_complex() const;
};

/// Wraps an angle into (-pi, pi].
double normalize_phase(double phase);

/// ln(n!). Exact table for small n, lgamma beyond.
double log_factorial(std::int64_t n);

/// ln C(n, k). Throws std::invalid_argument when k > n or either is negative.
double log_binomial(std::int64_t n, std::int64_t k);

/// Physicists' Hermite polynomial H_n(x) for complex x, evaluated with the
/// three-term recurrence H_{k+1} = 2x H_k - 2k H_{k-1} and periodic rescaling.
ScaledComplex hermite(int n, std::complex<double> x);

/// Streams H_0(x), H_1(x), ... from the same rescaled recurrence.
class HermiteSequence {
 public:
  explicit HermiteSequence(std::complex<double> x) : x_(x) {}
  ScaledComplex next();
  int next_degree() const { return degree_; }

 private:
  std::complex<double> x_;
  std::complex<double> prev_{0.0, 0.0};
  std::complex<double> cur_{1.0, 0.0};
  // True H_k = (stored value) * exp(log_scale_).
  double log_scale_ = 0.0;
  int degree_ = 0;
};

/// H_0(x) .. H_{n_max}(x) from a single recurrence pass.
std::vector<ScaledComplex> hermite_table(int n_max, std::complex<double> x);

/// ln(sum_i exp(v_i)) over finite entries; -inf for an empty or all -inf input.
double log_sum_exp(const std::vector<double>& values);

}  // namespace nlqfi
