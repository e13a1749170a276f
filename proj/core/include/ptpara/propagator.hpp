#ifndef PTPARA_PROPAGATOR_HPP
#define PTPARA_PROPAGATOR_HPP

#include "ptpara/coords.hpp"
#include "ptpara/types.hpp"

namespace ptpara::propagator {

enum class Representation { RealTime, Euclidean };

/// Exact 1D harmonic-oscillator kernel.
///
/// RealTime (tau = time):
///   (m w / (2 pi i hbar sin w tau))^{1/2}
///     * exp{ (i m w / 2 hbar sin w tau) [ (qa^2+qb^2) cos w tau - 2 qa qb ] }
/// Euclidean (beta = time, the tau -> -i beta rotation):
///   (m w / (2 pi hbar sinh w beta))^{1/2}
///     * exp{ -(m w / 2 hbar sinh w beta) [ (qa^2+qb^2) cosh w beta - 2 qa qb ] }
///
/// Throws CausticError in RealTime when |sin(w tau)| < 1e-8.
Complex sho_kernel_1d(double m, double hbar, double omega, double time,
                      double qa, double qb, Representation rep);

struct KernelRequest {
    PhysicalParams params;
    double omega;
    coords::OscillatorPoint a;
    coords::OscillatorPoint b;
    double time; // tau (RealTime) or beta (Euclidean), > 0
    Representation rep = Representation::Euclidean;
};

struct KernelValue {
    Complex value;
    Representation rep;
    bool underflowed = false; // exact 0 returned because the exponent underflowed
};

/// Full 4D pseudo-time kernel: product of the four 1D kernels over the
/// components of u and v, times exp(i alpha tau / hbar) in real time or
/// exp(alpha beta / hbar) in Euclidean time.
KernelValue total_kernel(const KernelRequest& request);

struct SemigroupGrid {
    double widths = 8.0;     // integration half-width in thermal widths
    int initial_points = 64; // trapezoid panels before refinement
    int max_refine = 18;
};

/// Relative Chapman-Kolmogorov defect of the Euclidean 1D kernel:
/// | int K(qa,x;b1) K(x,qb;b2) dx - K(qa,qb;b1+b2) | / |K(qa,qb;b1+b2)|.
/// Trapezoid with refinement to 1e-7; throws GridTooCoarse on failure.
double semigroup_residual(double m, double hbar, double omega, double beta1,
                          double beta2, double qa, double qb,
                          const SemigroupGrid& grid = {});

} // namespace ptpara::propagator

#endif
