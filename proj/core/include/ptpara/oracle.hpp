#ifndef PTPARA_ORACLE_HPP
#define PTPARA_ORACLE_HPP

#include <vector>

#include "ptpara/coords.hpp"
#include "ptpara/types.hpp"

namespace ptpara::oracle {

struct RadialGrid {
    double u_max = 0.0; // 0 selects 6x the classical turning point
    int steps = 0;      // 0 selects a phase-resolved default
};

/// 2D oscillator radial problem with (possibly complex) effective angular
/// momentum l, Re(l) >= 0:
///   -(hbar^2/2m) [ f'' + f'/u - l^2 f/u^2 ] + (m omega^2/2) u^2 f = eps f.
struct RadialProblem {
    double m = 1.0;
    double hbar = 1.0;
    double omega = 1.0;
    Complex l = 0.0;
    int n_r = 0;
    RadialGrid grid;
};

struct ShootingResult {
    Complex eigenvalue;
    double residual; // matching-condition mismatch at the final iterate
    int iterations;
};

/// Complex-Newton shooting for the radial eigenvalue. The solution regular
/// at u -> 0 (two-term Frobenius start f ~ u^l) is matched against the one
/// decaying at u_max; the analytic value hbar omega (2 n_r + l + 1),
/// perturbed by 1%, seeds the iteration.
ShootingResult radial_shoot(const RadialProblem& problem);

/// eps(l1, n2) + eps(l2, nt2) - alpha at omega = omega_for_level(params, qn),
/// both eigenvalues from radial_shoot. Vanishes (to shooting accuracy) when
/// the closed-form omega is correct.
double assemble_level(const PhysicalParams& params, const QuantumNumbers& qn, double omega);

/// Normalized 1D oscillator eigenfunctions phi_0..phi_{n_max} at x,
/// by stable upward recurrence.
std::vector<double> hermite_functions(double m, double hbar, double omega,
                                      double x, int n_max);

/// Truncated 4D spectral sum
///   sum_{n_tot <= n_max} phi_n(b) phi_n(a) hbar / (hbar omega (n_tot+2) - alpha)
/// over product states of the (u, v) oscillators.
///
/// With beta_damp > 0 each term carries the Laplace-tail weight
/// exp(-[hbar omega (n_tot+2) - alpha] beta_damp / hbar), which makes the
/// sum equal to the pseudo-time integral restricted to beta >= beta_damp.
/// The undamped series (beta_damp = 0) is only conditionally convergent:
/// its sharp partial sums oscillate with an O(n_max^{-1/2}) envelope, so
/// quantitative cross-checks against the quadrature route should set
/// beta_damp to the matching beta_min cutoff.
double hermite_spectral_sum(const PhysicalParams& params, double omega,
                            const coords::OscillatorPoint& a,
                            const coords::OscillatorPoint& b, int n_max,
                            double beta_damp = 0.0);

/// 1D analogue with E_n = hbar omega (n + 1/2); alpha_shift plays the role
/// of alpha.
double hermite_spectral_sum_1d(double m, double hbar, double omega, double qa,
                               double qb, double alpha_shift, int n_max);

} // namespace ptpara::oracle

#endif
