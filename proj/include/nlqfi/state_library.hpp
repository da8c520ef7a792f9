#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nlqfi {

/// Raised for parameters outside a formula's domain (negative photon numbers,
/// unreachable target means, unsupported cat phases, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Family {
  Thermal,
  Coherent,
  SqueezedVacuum,
  SqueezedCoherent,
  GeneralGaussian,
  SqueezedNumber,
  Cat,
};

std::string_view to_string(Family family);
/// Accepts the canonical names returned by to_string (case-sensitive).
Family family_from_string(std::string_view name);

/// Single-mode input state. Gaussian families are D(alpha) S(r) rho_th S^dag D^dag
/// with real squeeze parameter (squeeze phase chi fixed to 0), so alpha_phase is
/// the displacement phase relative to the squeezing axis.
struct StateSpec {
  Family family = Family::Coherent;
  double n_th = 0.0;
  double alpha_mag = 0.0;
  double alpha_phase = 0.0;
  double r = 0.0;
  double chi = 0.0;
  int m = 0;
  double delta = 0.0;

  static StateSpec thermal(double n_th);
  static StateSpec coherent(double alpha_mag, double alpha_phase = 0.0);
  static StateSpec squeezed_vacuum(double r);
  static StateSpec squeezed_coherent(double alpha_mag, double alpha_phase, double r);
  static StateSpec general_gaussian(double n_th, double alpha_mag, double alpha_phase, double r);
  static StateSpec squeezed_number(int m, double r);
  static StateSpec cat(double alpha_mag, double delta);

  /// Throws DomainError when a field is out of range or a field that the
  /// family does not use is nonzero.
  void validate() const;

  bool operator==(const StateSpec&) const = default;
};

enum class CatKind { Even, Odd, YurkeStoler };

/// delta = 0, pi, pi/2 (within 1e-12); anything else is a DomainError.
CatKind cat_kind(double delta);

// Per-family photon-number probabilities.  All are assembled in log space.
double thermal_pn(double n_th, std::int64_t n);
double coherent_pn(double alpha_mag, std::int64_t n);
double squeezed_vacuum_pn(double r, std::int64_t n);
/// Zero squeeze phase. Delegates to coherent_pn below kMinSqueeze.
double squeezed_coherent_pn(double alpha_mag, double alpha_phase, double r, std::int64_t n);
/// Any Gaussian-family spec (Thermal through GeneralGaussian).
double gaussian_pn(const StateSpec& spec, std::int64_t n);
double squeezed_number_pn(int m, double r, std::int64_t n);
double cat_pn(double alpha_mag, double delta, std::int64_t n);

/// Dispatches on spec.family.
double photon_probability(const StateSpec& spec, std::int64_t n);

/// Squeeze magnitudes below this are treated as unsqueezed by the
/// squeezed-coherent and general-Gaussian formulas, which are singular at r = 0.
inline constexpr double kMinSqueeze = 1e-6;

double mean_photon(const StateSpec& spec);

/// Extra knobs for solve_params.  z is the coherent weight |alpha|^2 / N of a
/// squeezed coherent state; phi its displacement phase.
struct SolveAux {
  double z = 0.0;
  double phi = 0.0;
  int m = 0;
  double delta = 0.0;
};

/// Returns the spec of `family` whose mean photon number is target_n.
/// GeneralGaussian has no one-parameter inversion and is rejected.
StateSpec solve_params(Family family, double target_n, const SolveAux& aux = {});

/// Sequential evaluator p_0, p_1, ... for a fixed spec.  Precomputes the
/// per-spec constants and keeps Hermite recurrences running, so filling n
/// terms costs O(n) for most families and O(n^2) for GeneralGaussian.
class PhotonSeries {
 public:
  explicit PhotonSeries(const StateSpec& spec);
  ~PhotonSeries();
  PhotonSeries(PhotonSeries&&) noexcept;
  PhotonSeries& operator=(PhotonSeries&&) noexcept;

  const StateSpec& spec() const;
  /// Probability of the next photon number; the first call returns p_0.
  double next();
  std::int64_t next_index() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct TruncationPolicy;

/// Dense truncated distribution p_0..p_cutoff.
struct PhotonDistribution {
  std::vector<double> probabilities;
  std::int64_t cutoff = 0;
  double captured_mass = 0.0;
  StateSpec family_tag;

  double mean() const;
};

/// Fills probabilities until the policy's stopping rule fires.  Throws
/// std::runtime_error when the hard ceiling is reached first.
PhotonDistribution build_distribution(const StateSpec& spec, const TruncationPolicy& policy);

/// Exactly p_0..p_cutoff, no stopping rule.
PhotonDistribution distribution_to_cutoff(const StateSpec& spec, std::int64_t cutoff);

}  // namespace nlqfi
