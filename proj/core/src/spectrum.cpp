#include "ptpara/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <tuple>

namespace ptpara::spectrum {

AngularPair angular_pair(const PhysicalParams& params, int nu) {
    if (nu < 0) throw DomainError("angular_pair: nu must be >= 0");
    double h2 = params.hbar * params.hbar;
    double re = h2 * (double(nu) * nu + params.B);
    double im = h2 * params.C;
    return {Complex(re, im), Complex(re, -im)};
}

namespace {

Complex lambda_complex(const PhysicalParams& params, int nu) {
    double s = double(nu) * nu + params.B;
    return params.hbar * (principal_sqrt(Complex(s, params.C)) +
                          principal_sqrt(Complex(s, -params.C)));
}

} // namespace

double lambda_value(const PhysicalParams& params, int nu) {
    if (nu < 0) throw DomainError("lambda_value: nu must be >= 0");
    double s = double(nu) * nu + params.B;
    if (params.C == 0.0 && s < 0.0)
        throw BrokenPhaseError("lambda_value: nu^2 + B on the negative real axis with C = 0");
    Complex lam = lambda_complex(params, nu);
    if (std::abs(lam.imag()) > 1e-12 * (1.0 + std::abs(lam)))
        throw BrokenPhaseError("lambda_value: lambda has a non-negligible imaginary part");
    return lam.real();
}

double energy(const PhysicalParams& params, const QuantumNumbers& qn) {
    if (!(params.alpha > 0.0))
        throw DomainError("energy: alpha must be > 0 for bound states");
    double lam = lambda_value(params, qn.nu);
    double n1 = double(qn.n2 + qn.nt2 + 1);
    double d1 = n1 * params.hbar + 0.5 * lam;
    double e1 = -params.m * params.alpha * params.alpha / (2.0 * d1 * d1);
    double d2 = 2.0 * n1 * params.hbar + lam;
    double e2 = -2.0 * params.m * params.alpha * params.alpha / (d2 * d2);
    if (std::abs(e1 - e2) > 1e-14 * std::abs(e1))
        throw DomainError("energy: the two closed forms disagree");
    return e1;
}

double omega_for_level(const PhysicalParams& params, const QuantumNumbers& qn) {
    if (!(params.alpha > 0.0))
        throw DomainError("omega_for_level: alpha must be > 0");
    double lam = lambda_value(params, qn.nu);
    return params.alpha / (2.0 * double(qn.n2 + qn.nt2 + 1) * params.hbar + lam);
}

int degeneracy(int s, int nu) {
    return (s + 1) * (nu == 0 ? 1 : 2);
}

SpectrumTable spectrum_table(const PhysicalParams& params, int max_principal, int max_nu) {
    if (max_principal < 0 || max_nu < 0)
        throw DomainError("spectrum_table: bounds must be >= 0");
    SpectrumTable table;
    for (int nu = 0; nu <= max_nu; ++nu) {
        double lam;
        try {
            lam = lambda_value(params, nu);
        } catch (const BrokenPhaseError&) {
            table.excluded_nus.push_back(nu);
            continue;
        }
        for (int s = 0; s <= max_principal; ++s) {
            QuantumNumbers qn(s, 0, nu);
            table.entries.push_back({qn, lam, omega_for_level(params, qn),
                                     energy(params, qn), degeneracy(s, nu)});
        }
    }
    std::sort(table.entries.begin(), table.entries.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) {
                  return std::tuple(a.energy, a.qn.nu, a.qn.n2 + a.qn.nt2) <
                         std::tuple(b.energy, b.qn.nu, b.qn.n2 + b.qn.nt2);
              });
    return table;
}

namespace {

PhaseReport classify_point(const PhysicalParams& base, double B, double C, int nu_max) {
    PhysicalParams p(base.m, base.hbar, base.alpha, B, C);
    PhaseReport report{B, C, PhaseClass::Unbroken, std::nullopt, 0.0};
    for (int nu = 0; nu <= nu_max; ++nu) {
        Complex lam = lambda_complex(p, nu);
        double d = 2.0 * p.hbar; // ground split n2 = nt2 = 0
        Complex e = -2.0 * p.m * p.alpha * p.alpha / ((d + lam) * (d + lam));
        report.max_imag_energy = std::max(report.max_imag_energy, std::abs(e.imag()));
        bool broken = (p.C == 0.0 && double(nu) * nu + p.B < 0.0) ||
                      std::abs(lam.imag()) > 1e-12 * (1.0 + std::abs(lam));
        if (broken && report.classification == PhaseClass::Unbroken) {
            report.classification = PhaseClass::Broken;
            report.offending_nu = nu;
        }
    }
    return report;
}

} // namespace

std::vector<PhaseReport> pt_phase_scan(const PhysicalParams& base,
                                       const std::vector<std::pair<double, double>>& grid,
                                       int nu_max, int threads) {
    std::vector<PhaseReport> out(grid.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < grid.size(); ++i)
            out[i] = classify_point(base, grid[i].first, grid[i].second, nu_max);
        return out;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++)
            out[i] = classify_point(base, grid[i].first, grid[i].second, nu_max);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return out;
}

} // namespace ptpara::spectrum
