#include "nlqfi/qfi_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nlqfi {

void TruncationPolicy::validate() const {
  if (!(min_fidelity > 0.0 && min_fidelity <= 1.0)) {
    throw DomainError("min_fidelity must lie in (0, 1]");
  }
  if (!(qfi_rel_increment > 0.0)) throw DomainError("qfi_rel_increment must be > 0");
  if (stall_window < 1) throw DomainError("stall_window must be >= 1");
  if (hard_ceiling < 0) throw DomainError("hard_ceiling must be >= 0");
}

double number_state_qfi(std::int64_t n, PhaseOrder order) {
  if (n < 0) throw DomainError("photon number must be nonnegative");
  if (order == PhaseOrder::Linear) return static_cast<double>(n);
  // n(n+1)(2n-1) is always even.
  return static_cast<double>(n * (n + 1) * (2 * n - 1) / 2);
}

double number_state_qfi_curve(double n, PhaseOrder order) {
  if (order == PhaseOrder::Linear) return n;
  return 0.5 * n * (n + 1.0) * (2.0 * n - 1.0);
}

double mixture_qfi(const PhotonDistribution& dist, PhaseOrder order) {
  double acc = 0.0;
  for (std::size_t n = 0; n < dist.probabilities.size(); ++n) {
    acc += dist.probabilities[n] * number_state_qfi(static_cast<std::int64_t>(n), order);
  }
  return acc;
}

double truncation_fidelity(const PhotonDistribution& truncated, bool renormalize) {
  const double mass = truncated.captured_mass;
  if (!(mass > 0.0)) throw DomainError("truncation fidelity needs a positive captured mass");
  // Diagonal states commute, so F = (sum_n sqrt(p_n q_n))^2.
  double overlap = 0.0;
  for (double p : truncated.probabilities) {
    const double q = renormalize ? p / mass : p;
    overlap += std::sqrt(p * q);
  }
  return std::min(1.0, overlap * overlap);
}

double sensitivity(double qfi) {
  if (!(qfi > 0.0)) throw DomainError("sensitivity needs a positive QFI");
  return 1.0 / std::sqrt(qfi);
}

SeriesRun accumulate_series(const StateSpec& spec, const TruncationPolicy& policy,
                            PhaseOrder order) {
  policy.validate();
  SeriesRun run;
  PhotonDistribution& dist = run.distribution;
  dist.family_tag = spec;

  if (mean_photon(spec) == 0.0) {
    dist.probabilities = {1.0};
    dist.cutoff = 0;
    dist.captured_mass = 1.0;
    run.converged = true;
    return run;
  }

  PhotonSeries series(spec);
  std::vector<double> terms;
  const auto window = static_cast<std::size_t>(policy.stall_window);
  for (std::int64_t n = 0; n <= policy.hard_ceiling; ++n) {
    const double p = series.next();
    dist.probabilities.push_back(p);
    dist.captured_mass += p;
    const double term = p * number_state_qfi(n, order);
    terms.push_back(term);
    run.qfi += term;
    dist.cutoff = n;

    if (dist.captured_mass < policy.min_fidelity || terms.size() < window) continue;
    const double limit = policy.qfi_rel_increment * run.qfi;
    if (std::all_of(terms.end() - static_cast<std::ptrdiff_t>(window), terms.end(),
                    [limit](double t) { return t <= limit; })) {
      run.converged = true;
      break;
    }
  }
  return run;
}

QfiResult protocol_qfi(const StateSpec& spec, const TruncationPolicy& policy, PhaseOrder order) {
  const SeriesRun run = accumulate_series(spec, policy, order);
  QfiResult out;
  out.qfi = run.qfi;
  out.sensitivity = run.qfi > 0.0 ? sensitivity(run.qfi) : std::numeric_limits<double>::infinity();
  out.cutoff = run.distribution.cutoff;
  out.captured_mass = run.distribution.captured_mass;
  out.fidelity = truncation_fidelity(run.distribution, true);
  out.converged = run.converged;
  return out;
}

}  // namespace nlqfi
