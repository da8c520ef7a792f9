#include "nlqfi/state_library.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include "nlqfi/qfi_engine.hpp"
#include "nlqfi/special_functions.hpp"

namespace nlqfi {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

double log_cosh(double x) {
  x = std::abs(x);
  return x + std::log1p(std::exp(-2.0 * x)) - std::numbers::ln2;
}

double log_sinh(double x) {  // x > 0
  return x + std::log1p(-std::exp(-2.0 * x)) - std::numbers::ln2;
}

void require_nonnegative_index(std::int64_t n) {
  if (n < 0) throw DomainError("photon number must be nonnegative");
}

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

bool finite_nonneg(double x) { return std::isfinite(x) && x >= 0.0; }

// ---------------------------------------------------------------------------
// Per-family kernels.  Each precomputes its spec constants; kernels that need
// Hermite values expose hermite_arg and read H_0..H_n from a caller table.

struct ThermalKernel {
  double n_th;
  double at(std::int64_t n) const {
    if (n_th == 0.0) return n == 0 ? 1.0 : 0.0;
    return std::exp(static_cast<double>(n) * std::log(n_th) -
                    static_cast<double>(n + 1) * std::log1p(n_th));
  }
};

struct CoherentKernel {
  double mean;  // |alpha|^2
  double at(std::int64_t n) const {
    if (mean == 0.0) return n == 0 ? 1.0 : 0.0;
    return std::exp(-mean + static_cast<double>(n) * std::log(mean) - log_factorial(n));
  }
};

struct SqueezedVacuumKernel {
  double log_tanh = 0.0;
  double log_cosh_r = 0.0;
  bool vacuum = true;

  explicit SqueezedVacuumKernel(double r) : vacuum(r == 0.0) {
    if (!vacuum) {
      log_tanh = std::log(std::tanh(r));
      log_cosh_r = log_cosh(r);
    }
  }
  double at(std::int64_t n) const {
    if (n % 2 != 0) return 0.0;
    if (vacuum) return n == 0 ? 1.0 : 0.0;
    const std::int64_t k = n / 2;
    // (2k)! / (4^k (k!)^2) tanh^{2k} r / cosh r
    return std::exp(log_factorial(2 * k) - static_cast<double>(2 * k) * std::numbers::ln2 -
                    2.0 * log_factorial(k) + static_cast<double>(2 * k) * log_tanh - log_cosh_r);
  }
};

// tanh^n r / (2^n n! cosh r) exp[-|a|^2 - Re(a^2) tanh r] |H_n((a + a* tanh r)/sqrt(2 tanh r))|^2
struct SqueezedCoherentKernel {
  std::complex<double> hermite_arg;
  double log_half_tanh;
  double log_base;

  SqueezedCoherentKernel(double alpha_mag, double alpha_phase, double r) {
    const double t = std::tanh(r);
    const std::complex<double> alpha = std::polar(alpha_mag, alpha_phase);
    hermite_arg = (alpha + std::conj(alpha) * t) / std::sqrt(2.0 * t);
    log_half_tanh = std::log(0.5 * t);
    const double re_alpha_sq = alpha_mag * alpha_mag * std::cos(2.0 * alpha_phase);
    log_base = -alpha_mag * alpha_mag - re_alpha_sq * t - log_cosh(r);
  }

  double at(std::int64_t n, const std::vector<ScaledComplex>& h) const {
    const ScaledComplex& hn = h[static_cast<std::size_t>(n)];
    if (hn.is_zero()) return 0.0;
    return std::exp(log_base + static_cast<double>(n) * log_half_tanh - log_factorial(n) +
                    2.0 * hn.log_magnitude);
  }
};

// D(a) rho_th D^dag(a): positive-term Laguerre form, used where the general
// Gaussian expression is singular (no squeezing).
struct DisplacedThermalKernel {
  double n_th;
  double mean_coh;  // |alpha|^2

  double at(std::int64_t n) const {
    if (n_th == 0.0) return CoherentKernel{mean_coh}.at(n);
    if (mean_coh == 0.0) return ThermalKernel{n_th}.at(n);
    const double log_nth = std::log(n_th);
    const double log_coh = std::log(mean_coh);
    const double log_1p = std::log1p(n_th);
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(n) + 1);
    for (std::int64_t k = 0; k <= n; ++k) {
      terms.push_back(log_binomial(n, k) - log_factorial(k) +
                      static_cast<double>(n - k) * log_nth + static_cast<double>(k) * log_coh -
                      static_cast<double>(n + k) * log_1p);
    }
    return std::exp(-mean_coh / (1.0 + n_th) - log_1p + log_sum_exp(terms));
  }
};

// Squeezed displaced thermal state.  The closed form below describes
// S(r) D(g) rho_th D^dag(g) S^dag(r); D(a) S(r) equals S(r) D(g) with
// g = a cosh r + a* sinh r, which is how the displacement enters.
struct GeneralGaussianKernel {
  std::complex<double> hermite_arg;  // E / C
  double log_prefactor;              // ln(2/sqrt(A)) - B
  double log_c;                      // ln C
  double log_d;                      // ln D, -inf when n_th = 0

  GeneralGaussianKernel(double n_th, double alpha_mag, double alpha_phase, double r) {
    const double mu = 2.0 * n_th + 1.0;
    const double ep = std::exp(r);
    const double em = std::exp(-r);
    const double ep2 = ep * ep;
    const double em2 = em * em;
    const double gx = alpha_mag * std::cos(alpha_phase) * ep;
    const double gy = alpha_mag * std::sin(alpha_phase) * em;
    const double a = (1.0 + mu * ep2) * (1.0 + mu * em2);
    const double b = 2.0 * ((mu + em2) * gx * gx + (mu + ep2) * gy * gy) / a;
    const double c = std::sqrt(mu * std::sinh(2.0 * r) / a);
    const double d = (mu * mu - 1.0) / a;
    const std::complex<double> e{(em + mu * ep) * gx / a, (ep + mu * em) * gy / a};
    hermite_arg = e / c;
    log_prefactor = std::numbers::ln2 - 0.5 * std::log(a) - b;
    log_c = std::log(c);
    log_d = d > 0.0 ? std::log(d) : kNegInf;
  }

  double at(std::int64_t n, const std::vector<ScaledComplex>& h) const {
    std::vector<double> terms;
    const std::int64_t k_max = log_d == kNegInf ? 0 : n;
    terms.reserve(static_cast<std::size_t>(k_max) + 1);
    for (std::int64_t k = 0; k <= k_max; ++k) {
      const ScaledComplex& hk = h[static_cast<std::size_t>(n - k)];
      if (hk.is_zero()) continue;
      const double log_dk = k == 0 ? 0.0 : static_cast<double>(k) * log_d;
      terms.push_back(static_cast<double>(2 * (n - k)) * log_c + log_dk - log_factorial(k) -
                      2.0 * log_factorial(n - k) + 2.0 * hk.log_magnitude);
    }
    const double sum = log_sum_exp(terms);
    if (sum == kNegInf) return 0.0;
    return std::exp(log_prefactor + log_factorial(n) + sum);
  }
};

struct SqueezedNumberKernel {
  int m;
  double r;
  double log_cosh_r = 0.0;
  double log_half_tanh = 0.0;
  double log_half_sinh = 0.0;

  SqueezedNumberKernel(int m_, double r_) : m(m_), r(r_) {
    if (r > 0.0) {
      log_cosh_r = log_cosh(r);
      log_half_tanh = std::log(0.5 * std::tanh(r));
      log_half_sinh = std::log(0.5 * std::sinh(r));
    }
  }

  double at(std::int64_t n) const {
    if ((n - m) % 2 != 0) return 0.0;
    if (r == 0.0) return n == m ? 1.0 : 0.0;
    const std::int64_t half_diff = (m - n) / 2;
    const std::int64_t j_lo = std::max<std::int64_t>(0, -half_diff);
    const std::int64_t j_hi = n / 2;
    std::vector<double> logs;
    std::vector<int> signs;
    for (std::int64_t j = j_lo; j <= j_hi; ++j) {
      logs.push_back(-log_factorial(j) - log_factorial(n - 2 * j) -
                     log_factorial(j + half_diff) + static_cast<double>(2 * j) * log_half_sinh);
      signs.push_back(j % 2 == 0 ? 1 : -1);
    }
    if (logs.empty()) return 0.0;
    const double top = *std::max_element(logs.begin(), logs.end());
    double acc = 0.0;
    for (std::size_t i = 0; i < logs.size(); ++i) acc += signs[i] * std::exp(logs[i] - top);
    if (acc == 0.0) return 0.0;
    const double log_g = 2.0 * (top + std::log(std::abs(acc)));
    return std::exp(log_factorial(m) + log_factorial(n) -
                    static_cast<double>(2 * n + 1) * log_cosh_r +
                    static_cast<double>(m - n) * log_half_tanh + log_g);
  }
};

struct CatKernel {
  CatKind kind;
  double x;  // |alpha|^2

  double at(std::int64_t n) const {
    switch (kind) {
      case CatKind::YurkeStoler:
        return CoherentKernel{x}.at(n);
      case CatKind::Even:
        if (n % 2 != 0) return 0.0;
        if (x == 0.0) return n == 0 ? 1.0 : 0.0;
        return std::exp(static_cast<double>(n) * std::log(x) - log_factorial(n) - log_cosh(x));
      case CatKind::Odd:
        if (n % 2 == 0) return 0.0;
        return std::exp(static_cast<double>(n) * std::log(x) - log_factorial(n) - log_sinh(x));
    }
    return 0.0;
  }
};

bool uses_general_gaussian_path(const StateSpec& s) { return s.r >= kMinSqueeze; }

}  // namespace

// ---------------------------------------------------------------------------

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Thermal: return "Thermal";
    case Family::Coherent: return "Coherent";
    case Family::SqueezedVacuum: return "SqueezedVacuum";
    case Family::SqueezedCoherent: return "SqueezedCoherent";
    case Family::GeneralGaussian: return "GeneralGaussian";
    case Family::SqueezedNumber: return "SqueezedNumber";
    case Family::Cat: return "Cat";
  }
  return "?";
}

Family family_from_string(std::string_view name) {
  for (Family f : {Family::Thermal, Family::Coherent, Family::SqueezedVacuum,
                   Family::SqueezedCoherent, Family::GeneralGaussian, Family::SqueezedNumber,
                   Family::Cat}) {
    if (to_string(f) == name) return f;
  }
  throw DomainError("unknown state family: " + std::string(name));
}

StateSpec StateSpec::thermal(double n_th) {
  StateSpec s;
  s.family = Family::Thermal;
  s.n_th = n_th;
  return s;
}

StateSpec StateSpec::coherent(double alpha_mag, double alpha_phase) {
  StateSpec s;
  s.family = Family::Coherent;
  s.alpha_mag = alpha_mag;
  s.alpha_phase = alpha_phase;
  return s;
}

StateSpec StateSpec::squeezed_vacuum(double r) {
  StateSpec s;
  s.family = Family::SqueezedVacuum;
  s.r = r;
  return s;
}

StateSpec StateSpec::squeezed_coherent(double alpha_mag, double alpha_phase, double r) {
  StateSpec s;
  s.family = Family::SqueezedCoherent;
  s.alpha_mag = alpha_mag;
  s.alpha_phase = alpha_phase;
  s.r = r;
  return s;
}

StateSpec StateSpec::general_gaussian(double n_th, double alpha_mag, double alpha_phase,
                                      double r) {
  StateSpec s;
  s.family = Family::GeneralGaussian;
  s.n_th = n_th;
  s.alpha_mag = alpha_mag;
  s.alpha_phase = alpha_phase;
  s.r = r;
  return s;
}

StateSpec StateSpec::squeezed_number(int m, double r) {
  StateSpec s;
  s.family = Family::SqueezedNumber;
  s.m = m;
  s.r = r;
  return s;
}

StateSpec StateSpec::cat(double alpha_mag, double delta) {
  StateSpec s;
  s.family = Family::Cat;
  s.alpha_mag = alpha_mag;
  s.delta = delta;
  return s;
}

void StateSpec::validate() const {
  require(chi == 0.0, "only zero squeeze phase (chi = 0) is supported");
  require(finite_nonneg(n_th), "n_th must be finite and nonnegative");
  require(finite_nonneg(alpha_mag), "|alpha| must be finite and nonnegative");
  require(std::isfinite(alpha_phase), "alpha phase must be finite");
  require(finite_nonneg(r), "squeeze magnitude r must be finite and nonnegative");
  require(m >= 0, "number-state index m must be nonnegative");
  require(std::isfinite(delta), "cat phase must be finite");

  const bool uses_nth = family == Family::Thermal || family == Family::GeneralGaussian;
  const bool uses_alpha = family == Family::Coherent || family == Family::SqueezedCoherent ||
                          family == Family::GeneralGaussian || family == Family::Cat;
  const bool uses_phase = family == Family::Coherent || family == Family::SqueezedCoherent ||
                          family == Family::GeneralGaussian;
  const bool uses_r = family == Family::SqueezedVacuum || family == Family::SqueezedCoherent ||
                      family == Family::GeneralGaussian || family == Family::SqueezedNumber;
  require(uses_nth || n_th == 0.0, "n_th must be zero for this family");
  require(uses_alpha || alpha_mag == 0.0, "|alpha| must be zero for this family");
  require(uses_phase || alpha_phase == 0.0, "alpha phase must be zero for this family");
  require(uses_r || r == 0.0, "r must be zero for this family");
  require(family == Family::SqueezedNumber || m == 0, "m must be zero for this family");
  require(family == Family::Cat || delta == 0.0, "delta must be zero for this family");
  if (family == Family::Cat && cat_kind(delta) == CatKind::Odd) {
    require(alpha_mag > 0.0, "odd cat state needs |alpha| > 0");
  }
}

CatKind cat_kind(double delta) {
  constexpr double tol = 1e-12;
  if (std::abs(delta) <= tol) return CatKind::Even;
  if (std::abs(delta - kPi) <= tol) return CatKind::Odd;
  if (std::abs(delta - kPi / 2) <= tol) return CatKind::YurkeStoler;
  throw DomainError("cat phase delta must be 0, pi or pi/2");
}

double thermal_pn(double n_th, std::int64_t n) {
  require_nonnegative_index(n);
  require(finite_nonneg(n_th), "n_th must be finite and nonnegative");
  return ThermalKernel{n_th}.at(n);
}

double coherent_pn(double alpha_mag, std::int64_t n) {
  require_nonnegative_index(n);
  require(finite_nonneg(alpha_mag), "|alpha| must be finite and nonnegative");
  return CoherentKernel{alpha_mag * alpha_mag}.at(n);
}

double squeezed_vacuum_pn(double r, std::int64_t n) {
  require_nonnegative_index(n);
  require(finite_nonneg(r), "squeeze magnitude r must be finite and nonnegative");
  return SqueezedVacuumKernel{r}.at(n);
}

double squeezed_coherent_pn(double alpha_mag, double alpha_phase, double r, std::int64_t n) {
  StateSpec::squeezed_coherent(alpha_mag, alpha_phase, r).validate();
  require_nonnegative_index(n);
  if (r < kMinSqueeze) return CoherentKernel{alpha_mag * alpha_mag}.at(n);
  const SqueezedCoherentKernel kernel(alpha_mag, alpha_phase, r);
  return kernel.at(n, hermite_table(static_cast<int>(n), kernel.hermite_arg));
}

double gaussian_pn(const StateSpec& spec, std::int64_t n) {
  spec.validate();
  require_nonnegative_index(n);
  switch (spec.family) {
    case Family::Thermal:
    case Family::Coherent:
    case Family::SqueezedVacuum:
    case Family::SqueezedCoherent:
    case Family::GeneralGaussian:
      break;
    default:
      throw DomainError("gaussian_pn needs a Gaussian-family spec");
  }
  if (!uses_general_gaussian_path(spec)) {
    return DisplacedThermalKernel{spec.n_th, spec.alpha_mag * spec.alpha_mag}.at(n);
  }
  const GeneralGaussianKernel kernel(spec.n_th, spec.alpha_mag, spec.alpha_phase, spec.r);
  return kernel.at(n, hermite_table(static_cast<int>(n), kernel.hermite_arg));
}

double squeezed_number_pn(int m, double r, std::int64_t n) {
  StateSpec::squeezed_number(m, r).validate();
  require_nonnegative_index(n);
  return SqueezedNumberKernel(m, r).at(n);
}

double cat_pn(double alpha_mag, double delta, std::int64_t n) {
  StateSpec::cat(alpha_mag, delta).validate();
  require_nonnegative_index(n);
  return CatKernel{cat_kind(delta), alpha_mag * alpha_mag}.at(n);
}

double photon_probability(const StateSpec& spec, std::int64_t n) {
  spec.validate();
  switch (spec.family) {
    case Family::Thermal: return thermal_pn(spec.n_th, n);
    case Family::Coherent: return coherent_pn(spec.alpha_mag, n);
    case Family::SqueezedVacuum: return squeezed_vacuum_pn(spec.r, n);
    case Family::SqueezedCoherent:
      return squeezed_coherent_pn(spec.alpha_mag, spec.alpha_phase, spec.r, n);
    case Family::GeneralGaussian: return gaussian_pn(spec, n);
    case Family::SqueezedNumber: return squeezed_number_pn(spec.m, spec.r, n);
    case Family::Cat: return cat_pn(spec.alpha_mag, spec.delta, n);
  }
  return 0.0;
}

double mean_photon(const StateSpec& spec) {
  spec.validate();
  const double a2 = spec.alpha_mag * spec.alpha_mag;
  const double sh = std::sinh(spec.r);
  switch (spec.family) {
    case Family::Thermal: return spec.n_th;
    case Family::Coherent: return a2;
    case Family::SqueezedVacuum: return sh * sh;
    case Family::SqueezedCoherent: return a2 + sh * sh;
    case Family::GeneralGaussian:
      // ((2 n_th + 1) cosh 2r + 2|a|^2 - 1) / 2, written to avoid cancellation at r = 0
      return (2.0 * spec.n_th + 1.0) * sh * sh + spec.n_th + a2;
    case Family::SqueezedNumber: return spec.m * std::cosh(2.0 * spec.r) + sh * sh;
    case Family::Cat:
      switch (cat_kind(spec.delta)) {
        case CatKind::YurkeStoler: return a2;
        case CatKind::Even: return a2 * std::tanh(a2);
        case CatKind::Odd: return a2 / std::tanh(a2);
      }
  }
  return 0.0;
}

namespace {

// Smallest x in the bracket with f(x) >= target, for increasing f.
double bisect_increasing(double (*f)(double), double target, double lo, double hi) {
  for (int it = 0; it < 400 && hi - lo > 1e-16 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double x_tanh_x(double x) { return x * std::tanh(x); }
double x_coth_x(double x) { return x / std::tanh(x); }

}  // namespace

StateSpec solve_params(Family family, double target_n, const SolveAux& aux) {
  require(std::isfinite(target_n) && target_n > 0.0, "target mean photon number must be > 0");
  StateSpec out;
  switch (family) {
    case Family::Thermal:
      out = StateSpec::thermal(target_n);
      break;
    case Family::Coherent:
      out = StateSpec::coherent(std::sqrt(target_n));
      break;
    case Family::SqueezedVacuum:
      out = StateSpec::squeezed_vacuum(std::asinh(std::sqrt(target_n)));
      break;
    case Family::SqueezedCoherent: {
      require(aux.z >= 0.0 && aux.z <= 1.0, "coherent weight z must lie in [0, 1]");
      require(std::isfinite(aux.phi), "phase phi must be finite");
      out = StateSpec::squeezed_coherent(std::sqrt(aux.z * target_n), aux.phi,
                                         std::asinh(std::sqrt((1.0 - aux.z) * target_n)));
      break;
    }
    case Family::GeneralGaussian:
      throw DomainError("GeneralGaussian has no single-parameter inversion");
    case Family::SqueezedNumber: {
      require(aux.m >= 0, "number-state index m must be nonnegative");
      const double cosh2r = (2.0 * target_n + 1.0) / (2.0 * aux.m + 1.0);
      require(cosh2r >= 1.0, "squeezed number state cannot have a mean below m");
      out = StateSpec::squeezed_number(aux.m, 0.5 * std::acosh(cosh2r));
      break;
    }
    case Family::Cat: {
      const CatKind kind = cat_kind(aux.delta);
      double x = target_n;
      if (kind == CatKind::Even) {
        x = bisect_increasing(x_tanh_x, target_n, 1e-12, std::max(4.0 * target_n, 10.0));
      } else if (kind == CatKind::Odd) {
        require(target_n >= 1.0, "odd cat state needs a mean photon number >= 1");
        x = bisect_increasing(x_coth_x, target_n, 1e-12, std::max(4.0 * target_n, 10.0));
      }
      out = StateSpec::cat(std::sqrt(x), aux.delta);
      break;
    }
  }
  out.validate();
  return out;
}

// ---------------------------------------------------------------------------

struct PhotonSeries::Impl {
  StateSpec spec;
  std::int64_t next_n = 0;
  // Family-specific evaluator over the running Hermite cache.
  std::vector<ScaledComplex> hermite_cache;
  std::optional<HermiteSequence> hermite;
  std::function<double(std::int64_t)> direct;
  std::function<double(std::int64_t, const std::vector<ScaledComplex>&)> with_hermite;
};

PhotonSeries::PhotonSeries(const StateSpec& spec) : impl_(std::make_unique<Impl>()) {
  spec.validate();
  impl_->spec = spec;
  Impl& im = *impl_;
  const double a2 = spec.alpha_mag * spec.alpha_mag;
  switch (spec.family) {
    case Family::Thermal:
      im.direct = [k = ThermalKernel{spec.n_th}](std::int64_t n) { return k.at(n); };
      break;
    case Family::Coherent:
      im.direct = [k = CoherentKernel{a2}](std::int64_t n) { return k.at(n); };
      break;
    case Family::SqueezedVacuum:
      im.direct = [k = SqueezedVacuumKernel{spec.r}](std::int64_t n) { return k.at(n); };
      break;
    case Family::SqueezedCoherent:
      if (spec.r < kMinSqueeze) {
        im.direct = [k = CoherentKernel{a2}](std::int64_t n) { return k.at(n); };
      } else {
        SqueezedCoherentKernel k(spec.alpha_mag, spec.alpha_phase, spec.r);
        im.hermite.emplace(k.hermite_arg);
        im.with_hermite = [k](std::int64_t n, const std::vector<ScaledComplex>& h) {
          return k.at(n, h);
        };
      }
      break;
    case Family::GeneralGaussian:
      if (!uses_general_gaussian_path(spec)) {
        im.direct = [k = DisplacedThermalKernel{spec.n_th, a2}](std::int64_t n) {
          return k.at(n);
        };
      } else {
        GeneralGaussianKernel k(spec.n_th, spec.alpha_mag, spec.alpha_phase, spec.r);
        im.hermite.emplace(k.hermite_arg);
        im.with_hermite = [k](std::int64_t n, const std::vector<ScaledComplex>& h) {
          return k.at(n, h);
        };
      }
      break;
    case Family::SqueezedNumber:
      im.direct = [k = SqueezedNumberKernel(spec.m, spec.r)](std::int64_t n) { return k.at(n); };
      break;
    case Family::Cat:
      im.direct = [k = CatKernel{cat_kind(spec.delta), a2}](std::int64_t n) { return k.at(n); };
      break;
  }
}

PhotonSeries::~PhotonSeries() = default;
PhotonSeries::PhotonSeries(PhotonSeries&&) noexcept = default;
PhotonSeries& PhotonSeries::operator=(PhotonSeries&&) noexcept = default;

const StateSpec& PhotonSeries::spec() const { return impl_->spec; }

std::int64_t PhotonSeries::next_index() const { return impl_->next_n; }

double PhotonSeries::next() {
  Impl& im = *impl_;
  const std::int64_t n = im.next_n++;
  if (im.direct) return im.direct(n);
  while (static_cast<std::int64_t>(im.hermite_cache.size()) <= n) {
    im.hermite_cache.push_back(im.hermite->next());
  }
  return im.with_hermite(n, im.hermite_cache);
}

// ---------------------------------------------------------------------------

double PhotonDistribution::mean() const {
  double acc = 0.0;
  for (std::size_t n = 0; n < probabilities.size(); ++n) {
    acc += static_cast<double>(n) * probabilities[n];
  }
  return acc;
}

PhotonDistribution distribution_to_cutoff(const StateSpec& spec, std::int64_t cutoff) {
  require(cutoff >= 0, "cutoff must be nonnegative");
  PhotonSeries series(spec);
  PhotonDistribution dist;
  dist.family_tag = spec;
  dist.cutoff = cutoff;
  dist.probabilities.reserve(static_cast<std::size_t>(cutoff) + 1);
  for (std::int64_t n = 0; n <= cutoff; ++n) {
    const double p = series.next();
    dist.probabilities.push_back(p);
    dist.captured_mass += p;
  }
  return dist;
}

PhotonDistribution build_distribution(const StateSpec& spec, const TruncationPolicy& policy) {
  auto run = accumulate_series(spec, policy);
  if (!run.converged) {
    throw std::runtime_error("photon-number series did not converge below the hard ceiling (" +
                             std::to_string(policy.hard_ceiling) + ")");
  }
  return std::move(run.distribution);
}

}  // namespace nlqfi
