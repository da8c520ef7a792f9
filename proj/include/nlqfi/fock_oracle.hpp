#pragma once

// Brute-force reference layer: truncated Fock-space matrices and explicit
// two-mode amplitudes.  Nothing here calls the closed-form QFI or
// distribution formulas; tests compare the two sides.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "nlqfi/state_library.hpp"

namespace nlqfi::oracle {

using Complex = std::complex<double>;
using Rational = boost::multiprecision::cpp_rational;

/// Pure two-mode state with a fixed total photon number n, stored as the
/// amplitudes of |j, n-j> (j photons in output mode A) for j = 0..n.
struct TwoModeAmplitudes {
  std::vector<Complex> amplitudes;
  int total_n = 0;

  double norm_squared() const;
};

/// |n, 0> after the balanced beam splitter (a1^dag, b1^dag) = [[1, -i], [-i, 1]] (a0^dag, b0^dag) / sqrt 2.
/// Amplitude on |j, n-j> is sqrt(C(n, j)) i^(n-j) / 2^(n/2).
TwoModeAmplitudes split_on_beam_splitter(int n);

/// The same state obtained by exponentiating the beam-splitter generator on
/// the (n+1)-dimensional fixed-photon-number subspace.  Independent of the
/// binomial expansion above.
TwoModeAmplitudes split_by_generator(int n);

/// 4 (E[j^2k] - E[j^k]^2) for j ~ Binomial(n, 1/2), in exact rational arithmetic.
Rational pure_qfi_exact(int n, int k);

/// pure_qfi_exact converted to double.
double pure_qfi_bruteforce(int n, int k);

/// 4 Var(O) in |n,0> with O = U_BS^dag (a1^dag a1)^k U_BS built as a dense
/// (n+1)x(n+1) matrix from split_by_generator.
double pure_qfi_matrix(int n, int k);

/// <psi_m| (a1^dag a1)^k |psi_n> from the amplitude tables, matching basis
/// labels (j, total - j) explicitly.
Complex cross_term(int m, int n, int k);

struct SpectralQfi {
  double qfi = 0.0;
  double diagonal_part = 0.0;  // the two same-state sums
  double cross_part = 0.0;     // off-diagonal double sum (subtracted)
};

/// Full spectral-decomposition QFI of sum_n p_n |n,0><n,0| under the phase
/// generator U_BS^dag (a1^dag a1)^k U_BS.  Pairs of zero eigenvalues are skipped.
/// Throws DomainError unless p is nonnegative and sums to 1 within 1e-9.
SpectralQfi mixed_qfi_spectral_detail(std::span<const double> p, int k);
double mixed_qfi_spectral(std::span<const double> p, int k);

/// Dense operator on span{|0>, ..., |dim-1>}.
struct FockMatrix {
  Eigen::MatrixXcd entries;

  int dim() const { return static_cast<int>(entries.rows()); }
};

FockMatrix annihilation_matrix(int dim);
FockMatrix number_matrix(int dim, int power = 1);

/// Minimum dim accepted for displacement/squeeze builds:
/// 8 (|alpha|^2 + sinh^2 |xi|) + 20.
int minimum_dim(double alpha_mag, double squeeze_mag);

/// exp(alpha a^dag - alpha* a) on the truncated space (scaling and squaring).
FockMatrix displacement_matrix(Complex alpha, int dim);
/// exp((xi* a^2 - xi a^dag^2) / 2) on the truncated space.
FockMatrix squeeze_matrix(Complex xi, int dim);

/// Max |(U^dag U - 1)_{ij}| over i, j < dim/2.
double interior_unitarity_defect(const FockMatrix& u);

/// Diagonal of D(alpha) S(r) rho_th S^dag(r) D^dag(alpha) for a Gaussian-family
/// spec, with the thermal input truncated at dim and renormalized.
std::vector<double> gaussian_state_diag(const StateSpec& spec, int dim);

/// |<n| S(r) |m>|^2 for n < dim, from the squeeze matrix.
std::vector<double> squeezed_number_diag(int m, double r, int dim);

/// Photon-number distribution of (|alpha> + e^{i delta}|-alpha>) normalized,
/// built from displacement-matrix columns.
std::vector<double> cat_state_diag(double alpha_mag, double delta, int dim);

}  // namespace nlqfi::oracle
