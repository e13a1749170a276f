#ifndef PTPARA_COORDS_HPP
#define PTPARA_COORDS_HPP

#include <array>

#include "ptpara/types.hpp"

namespace ptpara::coords {

/// r > 0, theta in (0, pi), phi in [0, 2*pi). The axis theta in {0, pi}
/// is excluded: the potential is singular there.
struct SphericalPoint {
    double r, theta, phi;
    SphericalPoint(double r_, double theta_, double phi_);
};

struct CylindricalPoint {
    double rho, z, phi;
    CylindricalPoint(double rho_, double z_, double phi_);
};

/// xi, eta > 0; when derived from a cylindrical point, xi + eta = r and
/// xi*eta = rho^2/4.
struct ParabolicPoint {
    double xi, eta, phi;
    ParabolicPoint(double xi_, double eta_, double phi_);
};

/// Two 2-vectors with |u|^2/4 = xi and |v|^2/4 = eta. Each component
/// carries dimension length^(1/2).
struct OscillatorPoint {
    std::array<double, 2> u;
    std::array<double, 2> v;
};

/// One physical point in all four representations. phi1 = phi2 = phi at
/// construction; the relative angle is a gauge direction.
struct PointBundle {
    SphericalPoint spherical;
    CylindricalPoint cylindrical;
    ParabolicPoint parabolic;
    OscillatorPoint oscillator;
    double phi1, phi2;
};

double normalize_angle(double phi); // into [0, 2*pi)

CylindricalPoint spherical_to_cylindrical(const SphericalPoint& p);
SphericalPoint cylindrical_to_spherical(const CylindricalPoint& p);

ParabolicPoint cylindrical_to_parabolic(const CylindricalPoint& p);
CylindricalPoint parabolic_to_cylindrical(const ParabolicPoint& p);

OscillatorPoint parabolic_to_uv(const ParabolicPoint& p, double phi1, double phi2);
ParabolicPoint uv_to_parabolic(const OscillatorPoint& p);

/// Angle of the u / v component pair (atan2, normalized to [0, 2*pi)).
double uv_phi1(const OscillatorPoint& p);
double uv_phi2(const OscillatorPoint& p);

PointBundle make_bundle(const SphericalPoint& p);

Complex potential_spherical(const PhysicalParams& params, const SphericalPoint& p);
Complex potential_cylindrical(const PhysicalParams& params, const CylindricalPoint& p);
Complex potential_parabolic(const PhysicalParams& params, const ParabolicPoint& p);

/// Parity image r -> r, theta -> pi - theta, phi -> phi. Combined with
/// complex conjugation this leaves the potential invariant.
SphericalPoint pt_conjugate(const SphericalPoint& p);

} // namespace ptpara::coords

#endif
