#ifndef PTPARA_SPECTRUM_HPP
#define PTPARA_SPECTRUM_HPP

#include <optional>
#include <vector>

#include "ptpara/types.hpp"

namespace ptpara::spectrum {

/// Eigenvalues of p_phi1^2 and p_phi2^2 in the nu sector:
/// hbar^2 (nu^2 + B +/- iC), a complex-conjugate pair for real B, C.
struct AngularPair {
    Complex lambda1_sq;
    Complex lambda2_sq;
};

struct SpectrumEntry {
    QuantumNumbers qn; // representative: n2 = n2 + nt2, nt2 = 0
    double lambda;
    double omega;
    double energy;
    int degeneracy;
};

enum class PhaseClass { Unbroken, Broken };

struct PhaseReport {
    double B, C;
    PhaseClass classification;
    std::optional<int> offending_nu;
    double max_imag_energy;
};

struct SpectrumTable {
    std::vector<SpectrumEntry> entries;
    std::vector<int> excluded_nus; // nu values hitting the branch cut
};

AngularPair angular_pair(const PhysicalParams& params, int nu);

/// lambda = hbar [ sqrt(nu^2+B+iC) + sqrt(nu^2+B-iC) ], principal branch.
/// Real and >= 0 off the cut; throws BrokenPhaseError when C = 0 and
/// nu^2 + B < 0 (lambda would be purely imaginary).
double lambda_value(const PhysicalParams& params, int nu);

/// E = -m alpha^2 / (2 [ (n2+nt2+1) hbar + lambda/2 ]^2). Both written
/// forms are evaluated and cross-checked internally.
double energy(const PhysicalParams& params, const QuantumNumbers& qn);

/// omega = alpha / [ 2 (n2+nt2+1) hbar + lambda ]; satisfies
/// -2 m omega^2 == energy.
double omega_for_level(const PhysicalParams& params, const QuantumNumbers& qn);

/// Degeneracy convention: g(s, nu) = (s+1) * (2 - delta_{nu,0}), s = n2+nt2.
int degeneracy(int s, int nu);

/// All levels with n2+nt2 <= max_principal and nu <= max_nu, merged over
/// the (n2, nt2) split, sorted ascending in energy (ties by (nu, s)).
SpectrumTable spectrum_table(const PhysicalParams& params, int max_principal, int max_nu);

/// Classifies each (B, C) grid point: Unbroken iff lambda is real for all
/// nu <= nu_max. threads <= 0 means sequential.
std::vector<PhaseReport> pt_phase_scan(const PhysicalParams& base,
                                       const std::vector<std::pair<double, double>>& grid,
                                       int nu_max, int threads = 0);

} // namespace ptpara::spectrum

#endif
