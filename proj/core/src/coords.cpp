#include "ptpara/coords.hpp"

#include <cmath>

namespace ptpara::coords {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double normalize_angle(double phi) {
    double a = std::fmod(phi, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    return a;
}

SphericalPoint::SphericalPoint(double r_, double theta_, double phi_)
    : r(r_), theta(theta_), phi(normalize_angle(phi_)) {
    if (!(r > 0.0)) throw DomainError("SphericalPoint: r must be > 0");
    if (!(theta > 0.0 && theta < M_PI))
        throw DomainError("SphericalPoint: theta must lie in (0, pi)");
}

CylindricalPoint::CylindricalPoint(double rho_, double z_, double phi_)
    : rho(rho_), z(z_), phi(normalize_angle(phi_)) {
    if (!(rho > 0.0)) throw DomainError("CylindricalPoint: rho must be > 0");
}

ParabolicPoint::ParabolicPoint(double xi_, double eta_, double phi_)
    : xi(xi_), eta(eta_), phi(normalize_angle(phi_)) {
    if (!(xi > 0.0 && eta > 0.0))
        throw DomainError("ParabolicPoint: xi and eta must be > 0");
}

CylindricalPoint spherical_to_cylindrical(const SphericalPoint& p) {
    return {p.r * std::sin(p.theta), p.r * std::cos(p.theta), p.phi};
}

SphericalPoint cylindrical_to_spherical(const CylindricalPoint& p) {
    double r = std::hypot(p.rho, p.z);
    double theta = std::atan2(p.rho, p.z); // in (0, pi) since rho > 0
    return {r, theta, p.phi};
}

CylindricalPoint parabolic_to_cylindrical(const ParabolicPoint& p) {
    return {2.0 * std::sqrt(p.xi * p.eta), p.eta - p.xi, p.phi};
}

ParabolicPoint cylindrical_to_parabolic(const CylindricalPoint& p) {
    double r = std::hypot(p.rho, p.z);
    // (r -/+ z)/2 loses digits when |z| ~ r; use rho^2/(4*larger root).
    double xi, eta;
    if (p.z >= 0.0) {
        eta = 0.5 * (r + p.z);
        xi = 0.25 * p.rho * p.rho / eta;
    } else {
        xi = 0.5 * (r - p.z);
        eta = 0.25 * p.rho * p.rho / xi;
    }
    return {xi, eta, p.phi};
}

OscillatorPoint parabolic_to_uv(const ParabolicPoint& p, double phi1, double phi2) {
    double u = 2.0 * std::sqrt(p.xi);
    double v = 2.0 * std::sqrt(p.eta);
    return {{u * std::cos(phi1), u * std::sin(phi1)},
            {v * std::cos(phi2), v * std::sin(phi2)}};
}

ParabolicPoint uv_to_parabolic(const OscillatorPoint& p) {
    double u2 = p.u[0] * p.u[0] + p.u[1] * p.u[1];
    double v2 = p.v[0] * p.v[0] + p.v[1] * p.v[1];
    return {0.25 * u2, 0.25 * v2, uv_phi1(p)};
}

double uv_phi1(const OscillatorPoint& p) {
    return normalize_angle(std::atan2(p.u[1], p.u[0]));
}

double uv_phi2(const OscillatorPoint& p) {
    return normalize_angle(std::atan2(p.v[1], p.v[0]));
}

PointBundle make_bundle(const SphericalPoint& p) {
    CylindricalPoint cyl = spherical_to_cylindrical(p);
    ParabolicPoint par = cylindrical_to_parabolic(cyl);
    OscillatorPoint osc = parabolic_to_uv(par, p.phi, p.phi);
    return {p, cyl, par, osc, p.phi, p.phi};
}

Complex potential_spherical(const PhysicalParams& params, const SphericalPoint& p) {
    double s = std::sin(p.theta);
    double centrifugal = params.hbar * params.hbar / (2.0 * params.m * p.r * p.r * s * s);
    return {-params.alpha / p.r + params.B * centrifugal,
            params.C * std::cos(p.theta) * centrifugal};
}

Complex potential_cylindrical(const PhysicalParams& params, const CylindricalPoint& p) {
    double r = std::hypot(p.rho, p.z);
    double rho2 = p.rho * p.rho;
    return {-params.alpha / r + params.beta() / rho2,
            params.gamma() * p.z / (rho2 * r)};
}

Complex potential_parabolic(const PhysicalParams& params, const ParabolicPoint& p) {
    double sum = p.xi + p.eta;
    double prod = p.xi * p.eta;
    return {-params.alpha / sum + params.beta() / (4.0 * prod),
            params.gamma() * (p.eta - p.xi) / (4.0 * prod * sum)};
}

SphericalPoint pt_conjugate(const SphericalPoint& p) {
    return {p.r, M_PI - p.theta, p.phi};
}

} // namespace ptpara::coords
