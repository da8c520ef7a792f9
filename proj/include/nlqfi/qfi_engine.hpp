#pragma once

#include <cstdint>

#include "nlqfi/state_library.hpp"

namespace nlqfi {

/// Phase imprinted inside the interferometer: linear (a^dag a) or
/// second-order Kerr-type ((a^dag a)^2).
enum class PhaseOrder { Linear, Quadratic };

/// Series truncation: stop once the captured probability mass reaches
/// min_fidelity AND each of the last stall_window QFI terms is at most
/// qfi_rel_increment times the running QFI.  qfi_rel_increment = 1 with
/// stall_window = 1 gives a pure fidelity cut.
struct TruncationPolicy {
  double min_fidelity = 0.99;
  double qfi_rel_increment = 1e-9;
  int stall_window = 8;
  std::int64_t hard_ceiling = 4096;

  void validate() const;
};

struct QfiResult {
  double qfi = 0.0;
  double sensitivity = 0.0;  // 1/sqrt(qfi); +inf when qfi == 0
  std::int64_t cutoff = 0;
  double fidelity = 0.0;
  double captured_mass = 0.0;
  bool converged = false;
};

/// QFI of |n,0> through the balanced beam splitter: n(n+1)(2n-1)/2 for the
/// quadratic phase, n for the linear one.
double number_state_qfi(std::int64_t n, PhaseOrder order = PhaseOrder::Quadratic);

/// Same polynomial at real n; used for the smooth number-state reference curve.
double number_state_qfi_curve(double n, PhaseOrder order = PhaseOrder::Quadratic);

/// Sum_n p_n F(n) over the stored support, without renormalizing p.
double mixture_qfi(const PhotonDistribution& dist, PhaseOrder order = PhaseOrder::Quadratic);

/// Fidelity between the full diagonal state and its truncation.  With
/// renormalize the truncated state is rescaled to unit trace and the result
/// equals captured_mass; without it the unnormalized truncation gives mass^2.
double truncation_fidelity(const PhotonDistribution& truncated, bool renormalize = true);

double sensitivity(double qfi);

/// Distribution and QFI accumulated term by term under a policy.
struct SeriesRun {
  PhotonDistribution distribution;
  double qfi = 0.0;
  bool converged = false;
};

SeriesRun accumulate_series(const StateSpec& spec, const TruncationPolicy& policy,
                            PhaseOrder order = PhaseOrder::Quadratic);

QfiResult protocol_qfi(const StateSpec& spec, const TruncationPolicy& policy = {},
                       PhaseOrder order = PhaseOrder::Quadratic);

}  // namespace nlqfi
