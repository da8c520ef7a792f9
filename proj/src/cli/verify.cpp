#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "nlqfi/cli.hpp"
#include "nlqfi/fock_oracle.hpp"

namespace nlqfi::cli {

namespace {

struct DistCase {
  std::string name;
  StateSpec spec;
};

// Fock cutoff used for the oracle comparison; the closed form is compared on
// the lower half only.
int oracle_dim(const StateSpec& s) {
  const double sh = std::sinh(s.r);
  const double load = s.alpha_mag * s.alpha_mag + sh * sh + s.n_th + s.m;
  return 2 * static_cast<int>(std::ceil(8.0 * load + 20.0)) + 40;
}

std::vector<double> oracle_diag(const StateSpec& s, int dim) {
  switch (s.family) {
    case Family::SqueezedNumber: return oracle::squeezed_number_diag(s.m, s.r, dim);
    case Family::Cat: return oracle::cat_state_diag(s.alpha_mag, s.delta, dim);
    default: return oracle::gaussian_state_diag(s, dim);
  }
}

double total_variation(const StateSpec& s) {
  const int dim = oracle_dim(s);
  const auto truth = oracle_diag(s, dim);
  const int half = dim / 2;
  const auto dist = distribution_to_cutoff(s, half - 1);
  double tv = 0.0;
  for (int n = 0; n < half; ++n) {
    tv += std::abs(truth[static_cast<std::size_t>(n)] - dist.probabilities[static_cast<std::size_t>(n)]);
  }
  return 0.5 * tv;
}

CheckResult check(std::string name, double max_error, double tolerance, std::int64_t cases) {
  return {std::move(name), max_error <= tolerance, max_error, tolerance, cases};
}

}  // namespace

std::vector<CheckResult> run_verify(std::uint64_t seed, VerifyLevel level) {
  const bool full = level == VerifyLevel::Full;
  std::vector<CheckResult> out;

  {
    // Closed-form number-state QFI against exact binomial moments.
    const int n_max = full ? 60 : 30;
    std::int64_t mismatches = 0;
    double worst = 0.0;
    for (int n = 0; n <= n_max; ++n) {
      const auto exact = oracle::pure_qfi_exact(n, 2);
      const auto closed = static_cast<std::int64_t>(number_state_qfi(n));
      if (exact != oracle::Rational(closed)) ++mismatches;
      const double diff = std::abs(static_cast<double>(exact) - static_cast<double>(closed));
      worst = std::max(worst, diff / std::max(1.0, static_cast<double>(closed)));
    }
    auto c = check("number_state_qfi_exact", worst, 0.0, n_max + 1);
    c.passed = mismatches == 0;
    out.push_back(c);

    double worst_matrix = 0.0;
    double worst_linear = 0.0;
    for (int n = 0; n <= n_max; ++n) {
      const double f = number_state_qfi(n);
      worst_matrix = std::max(worst_matrix,
                              std::abs(oracle::pure_qfi_matrix(n, 2) - f) / std::max(1.0, f));
      worst_linear = std::max(worst_linear, std::abs(oracle::pure_qfi_bruteforce(n, 1) - n));
    }
    out.push_back(check("number_state_qfi_matrix", worst_matrix, 1e-8, n_max + 1));
    out.push_back(check("linear_number_state_qfi", worst_linear, 0.0, n_max + 1));
  }

  {
    constexpr int kMax = 12;
    double worst = 0.0;
    std::int64_t cases = 0;
    for (int m = 0; m <= kMax; ++m) {
      for (int n = 0; n <= kMax; ++n) {
        if (m == n) continue;
        worst = std::max(worst, std::abs(oracle::cross_term(m, n, 2)));
        ++cases;
      }
    }
    out.push_back(check("cross_terms_vanish", worst, 1e-14, cases));
  }

  {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const int mixtures = full ? 100 : 10;
    double worst = 0.0;
    double worst_cross = 0.0;
    for (int t = 0; t < mixtures; ++t) {
      std::vector<double> p(13);
      double total = 0.0;
      for (double& v : p) total += (v = u(rng));
      for (double& v : p) v /= total;
      const auto spectral = oracle::mixed_qfi_spectral_detail(p, 2);
      double closed = 0.0;
      for (std::size_t n = 0; n < p.size(); ++n) {
        closed += p[n] * number_state_qfi(static_cast<std::int64_t>(n));
      }
      worst = std::max(worst, std::abs(spectral.qfi - closed) / closed);
      worst_cross = std::max(worst_cross, spectral.cross_part / spectral.qfi);
    }
    out.push_back(check("spectral_mixture_qfi", worst, 1e-9, mixtures));
    out.push_back(check("spectral_cross_contribution", worst_cross, 1e-12, mixtures));
  }

  {
    std::vector<DistCase> cases = {
        {"squeezed_vacuum", StateSpec::squeezed_vacuum(std::asinh(1.0))},
        {"coherent", StateSpec::coherent(std::sqrt(5.0))},
        {"squeezed_coherent", StateSpec::squeezed_coherent(std::sqrt(5.0), std::numbers::pi / 2, 1.0)},
    };
    if (full) {
      cases.push_back({"thermal", StateSpec::thermal(1.0)});
      cases.push_back({"general_gaussian_a", StateSpec::general_gaussian(0.5, std::sqrt(2.0), 0.0, 0.6)});
      cases.push_back({"general_gaussian_b", StateSpec::general_gaussian(0.5, std::sqrt(2.0), std::numbers::pi / 2, 0.6)});
      cases.push_back({"general_gaussian_c", StateSpec::general_gaussian(1.0, 1.0, 0.7, 0.4)});
      cases.push_back({"general_gaussian_d", StateSpec::general_gaussian(0.3, 1.5, 2.0, 0.8)});
      cases.push_back({"displaced_thermal", StateSpec::general_gaussian(0.8, 1.2, 0.3, 0.0)});
      cases.push_back({"squeezed_thermal", StateSpec::general_gaussian(0.7, 0.0, 0.0, 0.5)});
      cases.push_back({"squeezed_number_1", StateSpec::squeezed_number(1, 0.7)});
      cases.push_back({"squeezed_number_2", StateSpec::squeezed_number(2, 0.5)});
      cases.push_back({"squeezed_number_3", StateSpec::squeezed_number(3, 0.4)});
      cases.push_back({"even_cat", StateSpec::cat(2.0, 0.0)});
      cases.push_back({"odd_cat", StateSpec::cat(2.0, std::numbers::pi)});
      cases.push_back({"yurke_stoler_cat", StateSpec::cat(2.0, std::numbers::pi / 2)});
    }
    for (const auto& c : cases) {
      out.push_back(check("distribution_oracle:" + c.name, total_variation(c.spec), 1e-6, 1));
    }
  }
  return out;
}

Table verify_table(const std::vector<CheckResult>& checks) {
  Table t;
  t.columns = {"check", "passed", "max_error", "tolerance", "cases"};
  for (const auto& c : checks) {
    t.rows.push_back({c.name, c.passed, c.max_error, c.tolerance, Cell{c.cases}});
  }
  return t;
}

}  // namespace nlqfi::cli
