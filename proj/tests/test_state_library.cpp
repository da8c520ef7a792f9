#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nlqfi/fock_oracle.hpp"
#include "nlqfi/qfi_engine.hpp"
#include "nlqfi/state_library.hpp"

using namespace nlqfi;

namespace {

constexpr double kPi = std::numbers::pi;

double tv_distance(const std::vector<double>& a, const std::vector<double>& b, std::size_t len) {
  double acc = 0.0;
  for (std::size_t n = 0; n < len; ++n) acc += std::abs(a[n] - b[n]);
  return 0.5 * acc;
}

std::vector<double> closed_form(const StateSpec& spec, std::size_t len) {
  return distribution_to_cutoff(spec, static_cast<std::int64_t>(len) - 1).probabilities;
}

// Parameter points used by the sum rules below.
std::vector<StateSpec> sample_specs() {
  return {
      StateSpec::thermal(0.3),
      StateSpec::thermal(4.0),
      StateSpec::coherent(std::sqrt(7.0), 0.4),
      StateSpec::squeezed_vacuum(0.8),
      StateSpec::squeezed_coherent(1.5, 0.0, 0.5),
      StateSpec::squeezed_coherent(1.5, kPi / 2, 0.5),
      StateSpec::squeezed_coherent(2.0, 1.1, 0.9),
      StateSpec::general_gaussian(0.5, std::sqrt(2.0), 0.0, 0.6),
      StateSpec::general_gaussian(1.2, 1.0, 2.5, 0.3),
      StateSpec::general_gaussian(0.7, 1.3, 0.2, 0.0),
      StateSpec::squeezed_number(1, 0.6),
      StateSpec::squeezed_number(2, 0.4),
      StateSpec::squeezed_number(5, 0.3),
      StateSpec::cat(2.0, 0.0),
      StateSpec::cat(1.3, kPi),
      StateSpec::cat(2.5, kPi / 2),
  };
}

}  // namespace

TEST_CASE("thermal_pn") {
  CHECK(thermal_pn(1.0, 0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(thermal_pn(0.0, 0) == 1.0);
  CHECK(thermal_pn(0.0, 3) == 0.0);
  CHECK(thermal_pn(1.0, 3) == doctest::Approx(0.0625).epsilon(1e-15));
  CHECK_THROWS_AS(thermal_pn(-0.1, 0), DomainError);
  CHECK_THROWS_AS(thermal_pn(1.0, -1), DomainError);
}

TEST_CASE("coherent_pn") {
  CHECK(coherent_pn(1.0, 0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(coherent_pn(0.0, 0) == 1.0);
  CHECK(coherent_pn(std::sqrt(2.0), 2) == doctest::Approx(2.0 * std::exp(-2.0)).epsilon(1e-14));
  CHECK(coherent_pn(std::sqrt(2.0), 2) == doctest::Approx(0.270671).epsilon(1e-6));
}

TEST_CASE("squeezed_vacuum_pn") {
  const double r = std::asinh(1.0);
  CHECK(squeezed_vacuum_pn(0.0, 0) == 1.0);
  CHECK(squeezed_vacuum_pn(r, 0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(squeezed_vacuum_pn(r, 2) == doctest::Approx(0.25 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(squeezed_vacuum_pn(r, 2) == doctest::Approx(0.176777).epsilon(1e-5));
  for (int n = 1; n < 40; n += 2) CHECK(squeezed_vacuum_pn(r, n) == 0.0);
}

TEST_CASE("squeezed vacuum normalizes with the (k!)^2 denominator") {
  // p(2k) = (2k)!/(4^k (k!)^2) tanh^2k r / cosh r sums to 1; a single k! would not.
  const double r = 0.9;
  double total = 0.0;
  for (int n = 0; n < 2000; ++n) total += squeezed_vacuum_pn(r, n);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("squeezed_coherent_pn reductions and oracle") {
  SUBCASE("alpha = 0 gives the squeezed vacuum") {
    for (int n = 0; n < 30; ++n) {
      CHECK(std::abs(squeezed_coherent_pn(0.0, 0.0, 0.7, n) - squeezed_vacuum_pn(0.7, n)) <= 1e-12);
    }
  }
  SUBCASE("r below the threshold gives the coherent state") {
    for (int n = 0; n < 30; ++n) {
      CHECK(squeezed_coherent_pn(2.0, 0.3, 1e-8, n) == coherent_pn(2.0, n));
    }
  }
  SUBCASE("continuous across the threshold") {
    for (int n = 0; n < 30; ++n) {
      CHECK(std::abs(squeezed_coherent_pn(2.0, 0.3, 2e-6, n) - coherent_pn(2.0, n)) <= 1e-4);
    }
  }
  SUBCASE("|alpha|^2 = 5, phi = pi/2, r = 1 matches the Fock oracle") {
    const auto spec = StateSpec::squeezed_coherent(std::sqrt(5.0), kPi / 2, 1.0);
    const auto truth = oracle::gaussian_state_diag(spec, 240);
    CHECK(tv_distance(truth, closed_form(spec, 41), 41) <= 1e-8);
  }
  SUBCASE("phi = 0 matches the Fock oracle") {
    const auto spec = StateSpec::squeezed_coherent(std::sqrt(3.0), 0.0, 0.8);
    const auto truth = oracle::gaussian_state_diag(spec, 200);
    CHECK(tv_distance(truth, closed_form(spec, 60), 60) <= 1e-8);
  }
}

TEST_CASE("gaussian_pn reductions and oracle") {
  CHECK(gaussian_pn(StateSpec::general_gaussian(1.0, 0.0, 0.0, 0.0), 0) ==
        doctest::Approx(0.5).epsilon(1e-15));
  for (int n = 0; n < 20; ++n) {
    CHECK(gaussian_pn(StateSpec::general_gaussian(1.0, 0.0, 0.0, 0.0), n) ==
          doctest::Approx(thermal_pn(1.0, n)).epsilon(1e-13));
  }

  SUBCASE("n_th = 0 reproduces the squeezed coherent formula") {
    for (double phi : {0.0, 0.9, kPi / 2, 2.8}) {
      for (double r : {0.2, 0.7, 1.3}) {
        for (int n = 0; n <= 40; ++n) {
          const double g = gaussian_pn(StateSpec::general_gaussian(0.0, 1.7, phi, r), n);
          CHECK(std::abs(g - squeezed_coherent_pn(1.7, phi, r, n)) <= 1e-9);
        }
      }
    }
  }

  SUBCASE("n_th = 0.5, |alpha|^2 = 2, phi = 0, r = 0.6 matches the Fock oracle") {
    const auto spec = StateSpec::general_gaussian(0.5, std::sqrt(2.0), 0.0, 0.6);
    const auto truth = oracle::gaussian_state_diag(spec, 200);
    CHECK(tv_distance(truth, closed_form(spec, 41), 41) <= 1e-6);
  }

  SUBCASE("oracle grid") {
    for (const auto& spec : {StateSpec::general_gaussian(0.5, std::sqrt(2.0), kPi / 2, 0.6),
                             StateSpec::general_gaussian(1.0, 1.0, 0.7, 0.4),
                             StateSpec::general_gaussian(0.3, 1.5, 2.0, 0.8),
                             StateSpec::general_gaussian(0.8, 1.2, 0.3, 0.0),
                             StateSpec::general_gaussian(0.7, 0.0, 0.0, 0.5)}) {
      const auto truth = oracle::gaussian_state_diag(spec, 200);
      CHECK(tv_distance(truth, closed_form(spec, 80), 80) <= 1e-6);
    }
  }

  CHECK_THROWS_AS(gaussian_pn(StateSpec::squeezed_number(1, 0.2), 0), DomainError);
  StateSpec bad = StateSpec::general_gaussian(0.5, 1.0, 0.0, 0.3);
  bad.r = -0.3;
  CHECK_THROWS_AS(gaussian_pn(bad, 0), DomainError);
}

TEST_CASE("squeezed_number_pn") {
  const double r = std::asinh(1.0);
  CHECK(squeezed_number_pn(1, 0.0, 1) == 1.0);
  CHECK(squeezed_number_pn(1, r, 1) == doctest::Approx(1.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-14));
  for (int n = 0; n < 40; n += 2) CHECK(squeezed_number_pn(1, 0.8, n) == 0.0);

  SUBCASE("m = 1 agrees with the one-photon closed form") {
    for (int k = 0; k < 30; ++k) {
      const double t = std::tanh(0.8);
      const double expected = std::exp(std::lgamma(2.0 * k + 2) - 3.0 * std::log(std::cosh(0.8)) -
                                        2.0 * std::lgamma(k + 1.0) + 2.0 * k * std::log(t / 2));
      CHECK(squeezed_number_pn(1, 0.8, 2 * k + 1) == doctest::Approx(expected).epsilon(1e-11));
    }
  }
  SUBCASE("m = 0 reduces to the squeezed vacuum") {
    for (int n = 0; n < 40; ++n) {
      CHECK(std::abs(squeezed_number_pn(0, 0.9, n) - squeezed_vacuum_pn(0.9, n)) <= 1e-9);
    }
  }
  SUBCASE("matches the squeeze-matrix oracle") {
    for (int m : {1, 2, 3, 4}) {
      const auto truth = oracle::squeezed_number_diag(m, 0.5, 200);
      CHECK(tv_distance(truth, closed_form(StateSpec::squeezed_number(m, 0.5), 80), 80) <= 1e-8);
    }
  }
}

TEST_CASE("cat_pn") {
  CHECK(cat_pn(1.0, 0.0, 0) == doctest::Approx(1.0 / std::cosh(1.0)).epsilon(1e-14));
  CHECK(cat_pn(1.0, 0.0, 0) == doctest::Approx(0.648054).epsilon(1e-6));
  CHECK(cat_pn(1.0, 0.0, 1) == 0.0);
  CHECK(cat_pn(std::sqrt(3.0), kPi / 2, 4) == coherent_pn(std::sqrt(3.0), 4));
  CHECK_THROWS_AS(cat_pn(1.0, 1.0, 0), DomainError);
  CHECK_THROWS_AS(cat_pn(0.0, kPi, 1), DomainError);

  SUBCASE("Yurke-Stoler equals coherent exactly") {
    for (double a : {0.3, 1.0, 3.3}) {
      for (int n = 0; n < 60; ++n) CHECK(cat_pn(a, kPi / 2, n) == coherent_pn(a, n));
    }
  }
  SUBCASE("parity screens") {
    for (int n = 0; n < 60; ++n) {
      if (n % 2) CHECK(cat_pn(2.0, 0.0, n) == 0.0);
      else CHECK(cat_pn(2.0, kPi, n) == 0.0);
    }
  }
  SUBCASE("matches the displacement-matrix oracle") {
    for (double delta : {0.0, kPi, kPi / 2}) {
      const auto truth = oracle::cat_state_diag(2.0, delta, 120);
      CHECK(tv_distance(truth, closed_form(StateSpec::cat(2.0, delta), 50), 50) <= 1e-8);
    }
  }
  SUBCASE("even cat doubles the Yurke-Stoler even-n weight at large |alpha|^2") {
    const double a = 5.0;  // |alpha|^2 = 25
    for (int n = 10; n <= 40; n += 2) {
      const double ratio = cat_pn(a, 0.0, n) / cat_pn(a, kPi / 2, n);
      CHECK(ratio == doctest::Approx(2.0).epsilon(0.05));
    }
  }
}

TEST_CASE("mean_photon closed forms") {
  CHECK(mean_photon(StateSpec::squeezed_vacuum(std::asinh(1.0))) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(mean_photon(StateSpec::cat(1.0, 0.0)) == doctest::Approx(std::tanh(1.0)).epsilon(1e-14));
  CHECK(mean_photon(StateSpec::cat(1.0, 0.0)) == doctest::Approx(0.761594).epsilon(1e-6));
  CHECK(mean_photon(StateSpec::squeezed_number(1, 0.0)) == 1.0);
  CHECK(mean_photon(StateSpec::general_gaussian(0.5, 1.0, 0.3, 0.4)) ==
        doctest::Approx(0.5 * (2.0 * std::cosh(0.8) + 2.0 - 1.0)).epsilon(1e-14));
}

TEST_CASE("sum rules: normalization and mean over a high cutoff") {
  for (const auto& spec : sample_specs()) {
    CAPTURE(to_string(spec.family));
    CAPTURE(spec.r);
    const auto dist = distribution_to_cutoff(spec, 1500);
    CHECK(dist.captured_mass >= 1.0 - 1e-6);
    CHECK(dist.captured_mass <= 1.0 + 1e-12);
    CHECK(dist.mean() == doctest::Approx(mean_photon(spec)).epsilon(1e-6));
    for (double p : dist.probabilities) CHECK(p >= 0.0);
  }
}

TEST_CASE("PhotonSeries matches the standalone formulas") {
  for (const auto& spec : sample_specs()) {
    PhotonSeries series(spec);
    for (int n = 0; n < 60; ++n) {
      const double a = series.next();
      const double b = photon_probability(spec, n);
      CHECK(std::abs(a - b) <= 1e-14 * std::max(1.0, b));
    }
  }
}

TEST_CASE("solve_params") {
  CHECK(solve_params(Family::SqueezedVacuum, 4.0).r == doctest::Approx(1.443635475).epsilon(1e-9));
  CHECK(solve_params(Family::Thermal, 7.0).n_th == 7.0);
  CHECK(solve_params(Family::SqueezedNumber, 2.0, {.m = 1}).r ==
        doctest::Approx(0.549306144).epsilon(1e-9));

  CHECK_THROWS_AS(solve_params(Family::Cat, 0.5, {.delta = kPi}), DomainError);
  CHECK_THROWS_AS(solve_params(Family::SqueezedNumber, 2.0, {.m = 3}), DomainError);
  CHECK_THROWS_AS(solve_params(Family::Coherent, 0.0), DomainError);
  CHECK_THROWS_AS(solve_params(Family::GeneralGaussian, 1.0), DomainError);
  CHECK_THROWS_AS(solve_params(Family::SqueezedCoherent, 1.0, {.z = 1.5}), DomainError);

  SUBCASE("round trip through mean_photon") {
    const std::vector<std::pair<Family, SolveAux>> cases = {
        {Family::Thermal, {}},
        {Family::Coherent, {}},
        {Family::SqueezedVacuum, {}},
        {Family::SqueezedCoherent, {.z = 0.3, .phi = kPi / 2}},
        {Family::SqueezedNumber, {.m = 1}},
        {Family::Cat, {.delta = 0.0}},
        {Family::Cat, {.delta = kPi}},
        {Family::Cat, {.delta = kPi / 2}},
    };
    for (const auto& [family, aux] : cases) {
      for (double n : {1.0, 1.5, 2.0, 3.7, 10.0, 25.0, 100.0}) {
        const auto spec = solve_params(family, n, aux);
        CHECK(std::abs(mean_photon(spec) - n) <= 1e-10 * (1.0 + n));
      }
    }
  }
}

TEST_CASE("StateSpec validation") {
  auto s = StateSpec::thermal(1.0);
  s.r = 0.5;
  CHECK_THROWS_AS(s.validate(), DomainError);
  auto c = StateSpec::coherent(1.0);
  c.chi = 0.1;
  CHECK_THROWS_AS(c.validate(), DomainError);
  auto sv = StateSpec::squeezed_vacuum(0.5);
  sv.alpha_mag = 1.0;
  CHECK_THROWS_AS(sv.validate(), DomainError);
  CHECK_NOTHROW(StateSpec::general_gaussian(1.0, 2.0, 0.3, 0.5).validate());
  CHECK(family_from_string("SqueezedNumber") == Family::SqueezedNumber);
  CHECK_THROWS_AS(family_from_string("Squeezed"), DomainError);
}

TEST_CASE("build_distribution") {
  SUBCASE("vacuum") {
    const auto d = build_distribution(StateSpec::coherent(0.0), TruncationPolicy{});
    CHECK(d.probabilities == std::vector<double>{1.0});
    CHECK(d.captured_mass == 1.0);
  }
  SUBCASE("pure fidelity cut on a thermal state stops at n = 6") {
    TruncationPolicy mass_only{.min_fidelity = 0.99, .qfi_rel_increment = 1.0, .stall_window = 1};
    const auto d = build_distribution(StateSpec::thermal(1.0), mass_only);
    CHECK(d.cutoff == 6);
    CHECK(d.captured_mass == doctest::Approx(0.9921875).epsilon(1e-15));
  }
  SUBCASE("squeezed vacuum default policy") {
    const auto spec = StateSpec::squeezed_vacuum(std::asinh(1.0));
    const auto d = build_distribution(spec, TruncationPolicy{});
    CHECK(d.captured_mass >= 0.99);
    for (std::size_t n = 1; n < d.probabilities.size(); n += 2) CHECK(d.probabilities[n] == 0.0);
  }
  SUBCASE("truncated mean within the tail bound") {
    for (const auto& spec : sample_specs()) {
      const auto d = build_distribution(spec, TruncationPolicy{});
      const double bound = (1.0 - d.captured_mass) * static_cast<double>(d.cutoff + 1) + 1e-9;
      CHECK(std::abs(d.mean() - mean_photon(spec)) <= bound + 1e-9 * mean_photon(spec));
    }
  }
  SUBCASE("hard ceiling") {
    TruncationPolicy tight{.hard_ceiling = 5};
    CHECK_THROWS_AS(build_distribution(StateSpec::thermal(10.0), tight), std::runtime_error);
  }
}
