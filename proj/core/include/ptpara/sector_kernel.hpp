#ifndef PTPARA_SECTOR_KERNEL_HPP
#define PTPARA_SECTOR_KERNEL_HPP

#include "ptpara/types.hpp"

namespace ptpara::sector {

/// Lanczos log-gamma, valid for complex z off the non-positive integers.
Complex log_gamma(Complex z);

/// log I_order(x) for real x > 0 and complex order with Re(order) >= 0.
/// Power series for moderate x, large-x asymptotic expansion beyond.
Complex log_bessel_i(Complex order, double x);

/// Generalized Laguerre polynomial L_n^{(a)}(x) with complex parameter a.
Complex laguerre(int n, Complex a, double x);

/// Euclidean 2D oscillator kernel restricted to the angular sector with
/// (possibly complex) angular momentum l, radial measure r dr:
///   K_l(ra, rb; beta) = (m w / (hbar sinh(w b)))
///       * exp(-(m w / 2 hbar) (ra^2 + rb^2) coth(w b))
///       * I_l(m w ra rb / (hbar sinh(w b))).
/// Spectral content: sum_n R_{n,l}(ra) R_{n,l}(rb) exp(-w b (2n + l + 1)).
Complex sector_kernel_2d(double m, double hbar, double omega, Complex l,
                         double ra, double rb, double beta);

/// Radial eigenfunction R_{n,l}(r) of the 2D oscillator sector,
/// normalized so the spectral sum above reproduces sector_kernel_2d.
Complex radial_eigenfunction(int n, Complex l, double m, double hbar,
                             double omega, double r);

} // namespace ptpara::sector

#endif
