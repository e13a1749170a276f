#ifndef PTPARA_TYPES_HPP
#define PTPARA_TYPES_HPP

#include <complex>

#include "ptpara/errors.hpp"

namespace ptpara {

using Complex = std::complex<double>;

/// Principal-branch complex square root.
///
/// Returns w with w^2 = z and Re(w) >= 0; on the branch cut (Re(w) = 0)
/// the result has Im(w) >= 0 regardless of the sign of the zero in Im(z).
/// The conjugate symmetry sqrt(conj z) = conj(sqrt z) off the negative real
/// axis is what makes lambda real downstream.
inline Complex principal_sqrt(Complex z) {
    if (z.imag() == 0.0 && z.real() < 0.0) {
        return {0.0, std::sqrt(-z.real())};
    }
    Complex w = std::sqrt(z); // principal branch, Re >= 0
    if (w.real() == 0.0 && w.imag() < 0.0) w = -w;
    return w;
}

enum class UnitsMode { Natural, Explicit };

/// Masses and couplings of the potential
///   V(r,theta) = -alpha/r + B hbar^2/(2 m r^2 sin^2 theta)
///                + i C hbar^2 cos theta/(2 m r^2 sin^2 theta).
/// beta and gamma are always derived from (B, C, m, hbar), never stored.
struct PhysicalParams {
    double m = 1.0;
    double hbar = 1.0;
    double alpha = 1.0;
    double B = 0.0;
    double C = 0.0;

    PhysicalParams() = default;

    PhysicalParams(double m_, double hbar_, double alpha_, double B_, double C_)
        : m(m_), hbar(hbar_), alpha(alpha_), B(B_), C(C_) {
        if (!(m > 0.0)) throw DomainError("PhysicalParams: m must be > 0");
        if (!(hbar > 0.0)) throw DomainError("PhysicalParams: hbar must be > 0");
    }

    /// Natural units hbar = m = 1.
    static PhysicalParams natural(double alpha, double B, double C) {
        return PhysicalParams(1.0, 1.0, alpha, B, C);
    }

    double beta() const { return B * hbar * hbar / (2.0 * m); }
    double gamma() const { return C * hbar * hbar / (2.0 * m); }
};

/// (n2, nt2, nu) labeling one bound level.
struct QuantumNumbers {
    int n2 = 0;
    int nt2 = 0;
    int nu = 0;

    QuantumNumbers() = default;
    QuantumNumbers(int n2_, int nt2_, int nu_) : n2(n2_), nt2(nt2_), nu(nu_) {
        if (n2 < 0 || nt2 < 0 || nu < 0)
            throw DomainError("QuantumNumbers: all quantum numbers must be >= 0");
    }
};

} // namespace ptpara

#endif
