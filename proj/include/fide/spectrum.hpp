#pragma once

#include <span>
#include <vector>

#include "fide/fractional.hpp"

namespace fide {

/// Diagonal sectorial operator of type mu < 0: a finite list of strictly
/// negative eigenvalues (spectral coefficients in the sine eigenbasis for
/// the concrete scenario), plus the decay-bound constants C, M.
struct SectorialSpectrum {
  std::vector<double> eigenvalues;  // each < 0
  double mu = -1.0;                 // max eigenvalue (sector type)
  double C = 1.0;
  double M = 1.0;

  std::size_t dim() const { return eigenvalues.size(); }

  /// Validates eigenvalues < 0, C > 0, M > 0 and sets mu = max eigenvalue.
  static SectorialSpectrum from_eigenvalues(std::vector<double> eigenvalues,
                                            double C = 1.0, double M = 1.0);

  /// lambda_n = -(n^2 + damping), n = 1..modes: the Dirichlet-Laplacian
  /// sine-mode spectrum shifted by a damping constant c > 0.
  static SectorialSpectrum dirichlet_modes(int modes, double damping,
                                           double C = 1.0, double M = 1.0);
};

/// Coefficient vector in the eigenbasis.
using StateVector = std::vector<double>;

/// Sup-coefficient norm; the X-norm used throughout (it makes the diagonal
/// operator norm exact and submultiplicative).
double state_sup_norm(std::span<const double> x);

/// S_alpha(t) x: n-th coordinate scaled by E_{alpha,1}(lambda_n t^alpha).
/// S_alpha(0) = I exactly.
StateVector apply_solution_operator(const SectorialSpectrum& spectrum,
                                    const FractionalOrder& alpha, double t,
                                    std::span<const double> x);

/// max_n |E_{alpha,1}(lambda_n t^alpha)|.
double operator_norm(const SectorialSpectrum& spectrum,
                     const FractionalOrder& alpha, double t);

/// Smallest empirical C with M = 1 such that
/// operator_norm(t) (1 + |mu| t^alpha) <= C over the grid.
double fit_decay_constant(const SectorialSpectrum& spectrum,
                          const FractionalOrder& alpha,
                          std::span<const double> t_grid);

/// Closed form C M |mu|^{-1/alpha} pi / (alpha sin(pi/alpha)), the value of
/// the decay integral int_0^inf C M / (1 + |mu| s^alpha) ds for alpha in
/// (1,2). Throws outside that interval (the integral diverges for alpha <= 1).
double decay_integral(double C, double M, double mu, double alpha);

}  // namespace fide
