#ifndef PTPARA_GREENS_HPP
#define PTPARA_GREENS_HPP

#include <vector>

#include "ptpara/coords.hpp"
#include "ptpara/types.hpp"

namespace ptpara::greens {

struct Quadrature {
    double beta_min = 1e-9; // lower pseudo-time cutoff of the integral
    double beta_max = 60.0;
    double rel_tol = 1e-8;
};

struct GreensRequest {
    PhysicalParams params;
    double energy; // < 0; fixes omega through E = -2 m omega^2
    coords::OscillatorPoint a;
    coords::OscillatorPoint b;
    Quadrature quad;
};

struct GreensValue {
    double pseudo;        // int_{beta_min}^{beta_max} e^{alpha beta/hbar} K_E(beta) dbeta
    double physical;      // pseudo * 4/(|u_a|^2+|v_a|^2), the Liouville weight
    bool converged;
    double tail_estimate;
};

/// Pseudo-time resolvent between distinct oscillator endpoints.
/// Throws CoincidentEndpoints when a == b (the diagonal is UV-divergent)
/// and DivergentIntegral when the integrand grows over the final decade.
GreensValue pseudo_greens(const GreensRequest& request);

/// Divide by the Liouville weight V1+V2 = (u^2+v^2)/4 at the source point.
double pseudo_to_physical(double pseudo, const coords::OscillatorPoint& a);

struct PoleScanResult {
    int nu;
    std::vector<double> detected_omegas;   // descending, level index 0,1,...
    std::vector<double> predicted_omegas;  // alpha/[2(n+1)hbar+lambda], same order
    double max_abs_mismatch;               // max relative |detected-predicted|
};

/// Locates divergence onsets of the beta-integral of the nu-sector kernel
/// as omega sweeps [omega_lo, omega_hi]. The onset for level n is found on
/// the kernel with the n lowest product levels subtracted; each bracket
/// from the coarse grid is refined by bisection to 1e-6 * omega.
PoleScanResult pole_scan(const PhysicalParams& params, int nu, double omega_lo,
                         double omega_hi, int steps, int n_levels = 3);

} // namespace ptpara::greens

#endif
