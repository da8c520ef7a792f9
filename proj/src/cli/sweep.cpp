#include <cmath>
#include <string>

#include "nlqfi/cli.hpp"

namespace nlqfi::cli {

namespace {

bool is_odd_cat(const StateEntry& s) {
  return !s.number_state_curve && s.family == Family::Cat &&
         cat_kind(s.aux.delta) == CatKind::Odd;
}

}  // namespace

void SweepConfig::validate() const {
  if (states.empty()) throw DomainError("sweep needs at least one state");
  policy.validate();
  if (n_values.empty()) {
    if (!(n_min > 0.0) || !(n_min <= n_max) || !std::isfinite(n_max)) {
      throw DomainError("need 0 < n_min <= n_max");
    }
    if (n_steps < 1) throw DomainError("n_steps must be >= 1");
  }
  for (double n : n_values) {
    if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("grid values must be > 0");
  }
  double lowest = n_min;
  if (!n_values.empty()) {
    lowest = n_values.front();
    for (double n : n_values) lowest = std::min(lowest, n);
  }
  for (const auto& s : states) {
    if (is_odd_cat(s) && lowest < 1.0) {
      throw DomainError("odd cat state '" + s.label + "' needs every grid value >= 1");
    }
  }
}

std::vector<double> SweepConfig::grid() const {
  if (!n_values.empty()) return n_values;
  if (n_steps == 1) return {n_min};
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n_steps));
  const double step = (n_max - n_min) / static_cast<double>(n_steps - 1);
  for (int i = 0; i < n_steps; ++i) {
    out.push_back(i == n_steps - 1 ? n_max : n_min + step * static_cast<double>(i));
  }
  return out;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  config.validate();
  std::vector<SweepRow> rows;
  for (double n : config.grid()) {
    for (const auto& state : config.states) {
      SweepRow row;
      row.n = n;
      row.state = state.label;
      if (state.number_state_curve) {
        row.family = "NumberState";
        row.result.qfi = number_state_qfi_curve(n);
        row.result.sensitivity = sensitivity(row.result.qfi);
        row.result.fidelity = 1.0;
        row.result.captured_mass = 1.0;
        row.result.converged = true;
        rows.push_back(std::move(row));
        continue;
      }
      row.family = std::string(to_string(state.family));
      try {
        row.spec = solve_params(state.family, n, state.aux);
        row.result = protocol_qfi(*row.spec, config.policy);
        if (!row.result.converged) row.error = "not converged at hard ceiling";
      } catch (const DomainError& e) {
        row.spec.reset();
        row.error = e.what();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

Table sweep_table(const std::vector<SweepRow>& rows) {
  Table t;
  t.columns = {"N",     "state", "family",      "n_th",   "alpha_mag",     "alpha_phase",
               "r",     "m",     "delta",       "qfi",    "sensitivity",   "cutoff",
               "fidelity", "captured_mass", "converged", "error"};
  for (const auto& row : rows) {
    std::vector<Cell> cells{row.n, row.state, row.family};
    if (row.spec) {
      const StateSpec& s = *row.spec;
      cells.insert(cells.end(), {s.n_th, s.alpha_mag, s.alpha_phase, s.r,
                                 static_cast<std::int64_t>(s.m), s.delta});
    } else {
      cells.insert(cells.end(), 6, std::monostate{});
    }
    const bool solved = row.spec.has_value() || row.family == "NumberState";
    if (solved) {
      const QfiResult& r = row.result;
      cells.insert(cells.end(), {r.qfi, r.sensitivity, Cell{r.cutoff}, r.fidelity,
                                 r.captured_mass, Cell{r.converged}});
    } else {
      cells.insert(cells.end(), 6, std::monostate{});
    }
    cells.emplace_back(row.error);
    t.rows.push_back(std::move(cells));
  }
  return t;
}

Table run_dist(const DistRequest& request) {
  if (request.cutoff < 0) throw DomainError("cutoff must be >= 0");
  StateSpec spec;
  if (request.explicit_spec) {
    spec = *request.explicit_spec;
  } else {
    if (request.state.number_state_curve) {
      throw DomainError("the number-state curve has no distribution");
    }
    spec = solve_params(request.state.family, request.n, request.state.aux);
  }
  const PhotonDistribution dist = distribution_to_cutoff(spec, request.cutoff);
  Table t;
  t.columns = {"n", "p_n"};
  for (std::size_t n = 0; n < dist.probabilities.size(); ++n) {
    t.rows.push_back({Cell{static_cast<std::int64_t>(n)}, Cell{dist.probabilities[n]}});
  }
  t.rows.push_back({Cell{std::string("captured_mass")}, Cell{dist.captured_mass}});
  return t;
}

}  // namespace nlqfi::cli
