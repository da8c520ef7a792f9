#include "nlqfi/fock_oracle.hpp"

#include <cmath>
#include <numbers>

#include <unsupported/Eigen/MatrixFunctions>

#include "nlqfi/special_functions.hpp"

namespace nlqfi::oracle {

namespace {

using boost::multiprecision::cpp_int;

constexpr Complex kI{0.0, 1.0};

cpp_int binomial(int n, int k) {
  cpp_int c = 1;
  for (int i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

cpp_int int_pow(int base, int exp) {
  cpp_int out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

Complex i_pow(int e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// Beam-splitter unitary on the fixed-n subspace, basis |j, n-j>, j = 0..n:
// exp(i pi/4 (a^dag b + a b^dag)).
Eigen::MatrixXcd beam_splitter_block(int n) {
  const int d = n + 1;
  Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(d, d);
  for (int j = 0; j < n; ++j) {
    // a^dag b |j, n-j> = sqrt((j+1)(n-j)) |j+1, n-j-1>
    const double v = std::sqrt(static_cast<double>(j + 1) * static_cast<double>(n - j));
    gen(j + 1, j) = v;
    gen(j, j + 1) = v;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gen);
  const Eigen::MatrixXcd vecs = eig.eigenvectors().cast<Complex>();
  Eigen::VectorXcd phases(d);
  for (int i = 0; i < d; ++i) {
    phases(i) = std::exp(kI * (std::numbers::pi / 4.0) * eig.eigenvalues()(i));
  }
  return vecs * phases.asDiagonal() * vecs.adjoint();
}

void require_dim(int dim, double alpha_mag, double squeeze_mag) {
  if (dim < 2 || dim < minimum_dim(alpha_mag, squeeze_mag)) {
    throw DomainError("Fock cutoff too small for the requested displacement/squeezing");
  }
}

}  // namespace

double TwoModeAmplitudes::norm_squared() const {
  double acc = 0.0;
  for (const Complex& a : amplitudes) acc += std::norm(a);
  return acc;
}

TwoModeAmplitudes split_on_beam_splitter(int n) {
  if (n < 0) throw DomainError("photon number must be nonnegative");
  TwoModeAmplitudes out;
  out.total_n = n;
  out.amplitudes.reserve(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    const double mag =
        std::exp(0.5 * log_binomial(n, j) - 0.5 * static_cast<double>(n) * std::numbers::ln2);
    out.amplitudes.push_back(mag * i_pow(n - j));
  }
  return out;
}

TwoModeAmplitudes split_by_generator(int n) {
  if (n < 0) throw DomainError("photon number must be nonnegative");
  const Eigen::MatrixXcd u = beam_splitter_block(n);
  TwoModeAmplitudes out;
  out.total_n = n;
  // Input |n, 0> is basis index j = n.
  for (int j = 0; j <= n; ++j) out.amplitudes.push_back(u(j, n));
  return out;
}

Rational pure_qfi_exact(int n, int k) {
  if (n < 0 || k < 1) throw DomainError("need n >= 0 and k >= 1");
  cpp_int s_k = 0;
  cpp_int s_2k = 0;
  for (int j = 0; j <= n; ++j) {
    const cpp_int c = binomial(n, j);
    s_k += c * int_pow(j, k);
    s_2k += c * int_pow(j, 2 * k);
  }
  const cpp_int total = cpp_int(1) << n;
  const Rational mean_k(s_k, total);
  const Rational mean_2k(s_2k, total);
  return 4 * (mean_2k - mean_k * mean_k);
}

double pure_qfi_bruteforce(int n, int k) { return static_cast<double>(pure_qfi_exact(n, k)); }

double pure_qfi_matrix(int n, int k) {
  if (n < 0 || k < 1) throw DomainError("need n >= 0 and k >= 1");
  const Eigen::MatrixXcd u = beam_splitter_block(n);
  Eigen::VectorXd eig(n + 1);
  for (int j = 0; j <= n; ++j) eig(j) = std::pow(static_cast<double>(j), k);
  const Eigen::MatrixXcd op = u.adjoint() * eig.cast<Complex>().asDiagonal() * u;
  const Eigen::VectorXcd col = op.col(n);
  const double second = col.squaredNorm();  // <n,0| O^2 |n,0>, O Hermitian
  const double first = std::real(col(n));
  return 4.0 * (second - first * first);
}

Complex cross_term(int m, int n, int k) {
  const TwoModeAmplitudes bra = split_on_beam_splitter(m);
  const TwoModeAmplitudes ket = split_on_beam_splitter(n);
  Complex acc{0.0, 0.0};
  for (int jb = 0; jb <= m; ++jb) {
    for (int jk = 0; jk <= n; ++jk) {
      // <jb, m-jb | jk, n-jk> = delta(jb, jk) delta(m-jb, n-jk)
      if (jb != jk || m - jb != n - jk) continue;
      acc += std::conj(bra.amplitudes[jb]) * ket.amplitudes[jk] *
             std::pow(static_cast<double>(jk), k);
    }
  }
  return acc;
}

SpectralQfi mixed_qfi_spectral_detail(std::span<const double> p, int k) {
  if (k < 1) throw DomainError("order k must be >= 1");
  double total = 0.0;
  for (double v : p) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError("probabilities must be >= 0");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-9) throw DomainError("probabilities must sum to 1");

  const int size = static_cast<int>(p.size());
  // Matrix elements <psi_a| N^k |psi_b> and <psi_a| N^2k |psi_a>.
  Eigen::MatrixXcd o(size, size);
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) o(a, b) = cross_term(a, b, k);
  }
  SpectralQfi out;
  for (int a = 0; a < size; ++a) {
    if (p[a] == 0.0) continue;
    out.diagonal_part += 4.0 * p[a] * std::real(cross_term(a, a, 2 * k));
    out.diagonal_part -= 4.0 * p[a] * std::norm(o(a, a));
  }
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      if (a == b) continue;
      const double s = p[a] + p[b];
      if (s == 0.0) continue;
      out.cross_part += 8.0 * p[a] * p[b] / s * std::norm(o(a, b));
    }
  }
  out.qfi = out.diagonal_part - out.cross_part;
  return out;
}

double mixed_qfi_spectral(std::span<const double> p, int k) {
  return mixed_qfi_spectral_detail(p, k).qfi;
}

FockMatrix annihilation_matrix(int dim) {
  FockMatrix out{Eigen::MatrixXcd::Zero(dim, dim)};
  for (int i = 0; i + 1 < dim; ++i) out.entries(i, i + 1) = std::sqrt(static_cast<double>(i + 1));
  return out;
}

FockMatrix number_matrix(int dim, int power) {
  FockMatrix out{Eigen::MatrixXcd::Zero(dim, dim)};
  for (int i = 0; i < dim; ++i) out.entries(i, i) = std::pow(static_cast<double>(i), power);
  return out;
}

int minimum_dim(double alpha_mag, double squeeze_mag) {
  const double sh = std::sinh(squeeze_mag);
  return static_cast<int>(std::ceil(8.0 * (alpha_mag * alpha_mag + sh * sh) + 20.0));
}

FockMatrix displacement_matrix(Complex alpha, int dim) {
  require_dim(dim, std::abs(alpha), 0.0);
  const Eigen::MatrixXcd a = annihilation_matrix(dim).entries;
  const Eigen::MatrixXcd gen = alpha * a.adjoint() - std::conj(alpha) * a;
  return {gen.exp()};
}

FockMatrix squeeze_matrix(Complex xi, int dim) {
  require_dim(dim, 0.0, std::abs(xi));
  const Eigen::MatrixXcd a = annihilation_matrix(dim).entries;
  const Eigen::MatrixXcd a2 = a * a;
  const Eigen::MatrixXcd gen = 0.5 * (std::conj(xi) * a2 - xi * a2.adjoint());
  return {gen.exp()};
}

double interior_unitarity_defect(const FockMatrix& u) {
  const int half = u.dim() / 2;
  const Eigen::MatrixXcd prod = u.entries.adjoint() * u.entries;
  const Eigen::MatrixXcd diff =
      prod.topLeftCorner(half, half) - Eigen::MatrixXcd::Identity(half, half);
  return diff.cwiseAbs().maxCoeff();
}

std::vector<double> gaussian_state_diag(const StateSpec& spec, int dim) {
  spec.validate();
  switch (spec.family) {
    case Family::Thermal:
    case Family::Coherent:
    case Family::SqueezedVacuum:
    case Family::SqueezedCoherent:
    case Family::GeneralGaussian:
      break;
    default:
      throw DomainError("gaussian_state_diag needs a Gaussian-family spec");
  }
  const double sh = std::sinh(spec.r);
  if (dim < 8.0 * (spec.alpha_mag * spec.alpha_mag + sh * sh + spec.n_th) + 20.0) {
    throw DomainError("Fock cutoff too small for the requested Gaussian state");
  }

  // Thermal weights by ratio, truncated at dim and renormalized.
  Eigen::VectorXd thermal = Eigen::VectorXd::Zero(dim);
  thermal(0) = 1.0;
  const double ratio = spec.n_th / (spec.n_th + 1.0);
  for (int i = 1; i < dim; ++i) thermal(i) = thermal(i - 1) * ratio;
  thermal /= thermal.sum();

  const FockMatrix d = displacement_matrix(std::polar(spec.alpha_mag, spec.alpha_phase), dim);
  const FockMatrix s = squeeze_matrix(Complex{spec.r, 0.0}, dim);
  const Eigen::MatrixXcd u = d.entries * s.entries;

  std::vector<double> diag(static_cast<std::size_t>(dim));
  for (int n = 0; n < dim; ++n) {
    double acc = 0.0;
    for (int k = 0; k < dim; ++k) acc += std::norm(u(n, k)) * thermal(k);
    diag[static_cast<std::size_t>(n)] = acc;
  }
  return diag;
}

std::vector<double> squeezed_number_diag(int m, double r, int dim) {
  if (m < 0 || m >= dim) throw DomainError("number-state index outside the truncated space");
  const FockMatrix s = squeeze_matrix(Complex{r, 0.0}, dim);
  std::vector<double> diag(static_cast<std::size_t>(dim));
  for (int n = 0; n < dim; ++n) diag[static_cast<std::size_t>(n)] = std::norm(s.entries(n, m));
  return diag;
}

std::vector<double> cat_state_diag(double alpha_mag, double delta, int dim) {
  const Eigen::VectorXcd plus = displacement_matrix(Complex{alpha_mag, 0.0}, dim).entries.col(0);
  const Eigen::VectorXcd minus = displacement_matrix(Complex{-alpha_mag, 0.0}, dim).entries.col(0);
  Eigen::VectorXcd psi = plus + std::exp(kI * delta) * minus;
  const double norm = psi.norm();
  if (norm < 1e-12) throw DomainError("cat superposition vanishes");
  psi /= norm;
  std::vector<double> diag(static_cast<std::size_t>(dim));
  for (int n = 0; n < dim; ++n) diag[static_cast<std::size_t>(n)] = std::norm(psi(n));
  return diag;
}

}  // namespace nlqfi::oracle
