// ptpara command line: bound-state spectrum, pseudo-time Green's function,
// PT-phase map, shooting-oracle residuals, and coordinate transforms for
// the non-central potential
//   V = -alpha/r + B hbar^2/(2 m r^2 sin^2 th) + i C hbar^2 cos th/(2 m r^2 sin^2 th).
//
// Output is deterministic: floats at 17 significant digits, fixed key and
// column order, no timestamps. Exit codes: 0 ok, 2 invalid configuration,
// 3 broken phase in --strict mode, 4 divergent pseudo-time integral.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ptpara/coords.hpp"
#include "ptpara/greens.hpp"
#include "ptpara/oracle.hpp"
#include "ptpara/spectrum.hpp"
#include "ptpara/types.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

struct Output {
    std::string path; // empty = stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw ptpara::DomainError("cannot open output file: " + path);
        f << text;
    }
};

std::string meta_json(const std::string& subcommand) {
    return "\"meta\": {\"tool\": \"ptpara\", \"version\": \"" + std::string(kVersion) +
           "\", \"subcommand\": \"" + subcommand + "\"}";
}

std::string params_json(const ptpara::PhysicalParams& p) {
    return "\"params\": {\"alpha\": " + fmt(p.alpha) + ", \"B\": " + fmt(p.B) +
           ", \"C\": " + fmt(p.C) + ", \"m\": " + fmt(p.m) + ", \"hbar\": " + fmt(p.hbar) + "}";
}

int scan_threads() {
    if (const char* env = std::getenv("PTPARA_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

struct ParamFlags {
    double alpha = 1.0, B = 0.0, C = 0.0, m = 1.0, hbar = 1.0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--alpha", alpha, "Coulomb strength alpha");
        cmd->add_option("--B", B, "real ring-shaped coupling B");
        cmd->add_option("--C", C, "imaginary (non-Hermitian) coupling C");
        cmd->add_option("--m", m, "mass (default 1, natural units)");
        cmd->add_option("--hbar", hbar, "hbar (default 1, natural units)");
    }

    ptpara::PhysicalParams params() const { return {m, hbar, alpha, B, C}; }
};

int run_spectrum(const ParamFlags& pf, int max_n, int max_nu, const std::string& format,
                 const Output& out, bool strict) {
    auto table = ptpara::spectrum::spectrum_table(pf.params(), max_n, max_nu);
    if (strict && !table.excluded_nus.empty()) {
        std::cerr << "broken phase: lambda not real for nu =";
        for (int nu : table.excluded_nus) std::cerr << ' ' << nu;
        std::cerr << '\n';
        return 3;
    }
    std::ostringstream os;
    if (format == "csv") {
        os << "n2,nt2,nu,lambda,omega,energy,degeneracy\n";
        for (const auto& e : table.entries)
            os << e.qn.n2 << ',' << e.qn.nt2 << ',' << e.qn.nu << ',' << fmt(e.lambda)
               << ',' << fmt(e.omega) << ',' << fmt(e.energy) << ',' << e.degeneracy << '\n';
        for (int nu : table.excluded_nus)
            std::cerr << "excluded nu (broken phase): " << nu << '\n';
    } else {
        os << "{\n  " << meta_json("spectrum") << ",\n  " << params_json(pf.params())
           << ",\n  \"entries\": [";
        for (std::size_t i = 0; i < table.entries.size(); ++i) {
            const auto& e = table.entries[i];
            os << (i ? "," : "") << "\n    {\"n2\": " << e.qn.n2 << ", \"nt2\": " << e.qn.nt2
               << ", \"nu\": " << e.qn.nu << ", \"lambda\": " << fmt(e.lambda)
               << ", \"omega\": " << fmt(e.omega) << ", \"energy\": " << fmt(e.energy)
               << ", \"degeneracy\": " << e.degeneracy << "}";
        }
        os << "\n  ],\n  \"excluded\": [";
        for (std::size_t i = 0; i < table.excluded_nus.size(); ++i)
            os << (i ? ", " : "") << table.excluded_nus[i];
        os << "]\n}\n";
    }
    out.write(os.str());
    return 0;
}

int run_greens(const ParamFlags& pf, double energy, const std::vector<double>& ea,
               const std::vector<double>& eb, double beta_max, double rel_tol,
               const Output& out) {
    ptpara::coords::OscillatorPoint a{{ea[0], ea[1]}, {ea[2], ea[3]}};
    ptpara::coords::OscillatorPoint b{{eb[0], eb[1]}, {eb[2], eb[3]}};
    ptpara::greens::GreensRequest req{pf.params(), energy, a, b, {1e-9, beta_max, rel_tol}};
    try {
        auto val = ptpara::greens::pseudo_greens(req);
        std::ostringstream os;
        os << "{\n  " << meta_json("greens") << ",\n  " << params_json(pf.params())
           << ",\n  \"energy\": " << fmt(energy) << ",\n  \"pseudo\": " << fmt(val.pseudo)
           << ",\n  \"physical\": " << fmt(val.physical)
           << ",\n  \"converged\": " << (val.converged ? "true" : "false")
           << ",\n  \"tail_estimate\": " << fmt(val.tail_estimate) << "\n}\n";
        out.write(os.str());
        return 0;
    } catch (const ptpara::DivergentIntegral& e) {
        double omega = std::sqrt(-energy / (2.0 * pf.m));
        double lam = ptpara::spectrum::lambda_value(pf.params(), 0);
        double best = 0.0, best_dist = -1.0;
        for (int n = 0; n < 16; ++n) {
            double w = pf.alpha / (2.0 * (n + 1) * pf.hbar + lam);
            double d = std::abs(w - omega);
            if (best_dist < 0.0 || d < best_dist) { best_dist = d; best = w; }
        }
        std::cerr << e.what() << "\n  nearest predicted pole (nu=0): omega = "
                  << fmt(best) << " (requested omega = " << fmt(omega) << ")\n";
        return 4;
    }
}

int run_phase_scan(const ParamFlags& pf, double b_min, double b_max, double c_min,
                   double c_max, int nb, int nc, int nu_max, const std::string& format,
                   const Output& out) {
    std::vector<std::pair<double, double>> grid;
    grid.reserve(std::size_t(nb) * nc);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nc; ++j)
            grid.emplace_back(nb > 1 ? b_min + (b_max - b_min) * i / double(nb - 1) : b_min,
                              nc > 1 ? c_min + (c_max - c_min) * j / double(nc - 1) : c_min);
    auto reports = ptpara::spectrum::pt_phase_scan(pf.params(), grid, nu_max, scan_threads());
    std::ostringstream os;
    if (format == "json") {
        os << "{\n  " << meta_json("phase-scan") << ",\n  \"points\": [";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            const auto& r = reports[i];
            os << (i ? "," : "") << "\n    {\"B\": " << fmt(r.B) << ", \"C\": " << fmt(r.C)
               << ", \"classification\": \""
               << (r.classification == ptpara::spectrum::PhaseClass::Unbroken ? "unbroken" : "broken")
               << "\"}";
        }
        os << "\n  ]\n}\n";
    } else {
        os << "B,C,classification\n";
        for (const auto& r : reports)
            os << fmt(r.B) << ',' << fmt(r.C) << ','
               << (r.classification == ptpara::spectrum::PhaseClass::Unbroken ? "unbroken" : "broken")
               << '\n';
    }
    out.write(os.str());
    return 0;
}

int run_oracle(const ParamFlags& pf, int max_n, int max_nu, const std::string& format,
               const Output& out) {
    auto params = pf.params();
    std::ostringstream os;
    struct Row { int n2, nt2, nu; double omega, residual; };
    std::vector<Row> rows;
    for (int nu = 0; nu <= max_nu; ++nu)
        for (int s = 0; s <= max_n; ++s)
            for (int n2 = 0; n2 <= s; ++n2) {
                ptpara::QuantumNumbers qn(n2, s - n2, nu);
                double omega = ptpara::spectrum::omega_for_level(params, qn);
                rows.push_back({n2, s - n2, nu, omega,
                                ptpara::oracle::assemble_level(params, qn, omega)});
            }
    if (format == "json") {
        os << "{\n  " << meta_json("oracle") << ",\n  " << params_json(params)
           << ",\n  \"levels\": [";
        for (std::size_t i = 0; i < rows.size(); ++i)
            os << (i ? "," : "") << "\n    {\"n2\": " << rows[i].n2 << ", \"nt2\": "
               << rows[i].nt2 << ", \"nu\": " << rows[i].nu << ", \"omega\": "
               << fmt(rows[i].omega) << ", \"residual\": " << fmt(rows[i].residual) << "}";
        os << "\n  ]\n}\n";
    } else {
        os << "n2,nt2,nu,omega,residual\n";
        for (const auto& r : rows)
            os << r.n2 << ',' << r.nt2 << ',' << r.nu << ',' << fmt(r.omega) << ','
               << fmt(r.residual) << '\n';
    }
    out.write(os.str());
    return 0;
}

int run_transform(double r, double theta, double phi, const Output& out) {
    auto bundle = ptpara::coords::make_bundle({r, theta, phi});
    std::ostringstream os;
    os << "{\n  " << meta_json("transform") << ",\n  \"spherical\": {\"r\": "
       << fmt(bundle.spherical.r) << ", \"theta\": " << fmt(bundle.spherical.theta)
       << ", \"phi\": " << fmt(bundle.spherical.phi) << "},\n  \"cylindrical\": {\"rho\": "
       << fmt(bundle.cylindrical.rho) << ", \"z\": " << fmt(bundle.cylindrical.z)
       << ", \"phi\": " << fmt(bundle.cylindrical.phi) << "},\n  \"parabolic\": {\"xi\": "
       << fmt(bundle.parabolic.xi) << ", \"eta\": " << fmt(bundle.parabolic.eta)
       << ", \"phi\": " << fmt(bundle.parabolic.phi) << "},\n  \"oscillator\": {\"u\": ["
       << fmt(bundle.oscillator.u[0]) << ", " << fmt(bundle.oscillator.u[1]) << "], \"v\": ["
       << fmt(bundle.oscillator.v[0]) << ", " << fmt(bundle.oscillator.v[1])
       << "]},\n  \"phi1\": " << fmt(bundle.phi1) << ",\n  \"phi2\": " << fmt(bundle.phi2)
       << "\n}\n";
    out.write(os.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spectrum and Green's function of a PT-symmetric non-central potential"};
    app.require_subcommand(1);
    app.fallthrough(); // --format/--out/--strict may follow the subcommand

    std::string format = "json";
    Output out;
    bool strict = false;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", out.path, "output path (default stdout)");
    app.add_flag("--strict", strict, "exit 3 when any nu sector is broken-phase");

    ParamFlags pf;
    int max_n = 2, max_nu = 2;

    auto* spectrum = app.add_subcommand("spectrum", "closed-form bound-state table");
    pf.attach(spectrum);
    spectrum->add_option("--max-n", max_n, "max n2+nt2");
    spectrum->add_option("--max-nu", max_nu, "max nu");

    double energy = -0.5, beta_max = 0.0, rel_tol = 1e-8;
    std::vector<double> ea{1.0, 0.0, 1.0, 0.0}, eb{0.0, 1.2, 0.8, 0.3};
    auto* greens = app.add_subcommand("greens", "pseudo-time Green's function");
    pf.attach(greens);
    greens->add_option("--energy", energy, "bound energy E < 0");
    greens->add_option("--endpoint-a", ea, "source point u1,u2,v1,v2")->expected(4)->delimiter(',');
    greens->add_option("--endpoint-b", eb, "sink point u1,u2,v1,v2")->expected(4)->delimiter(',');
    greens->add_option("--beta-max", beta_max, "quadrature cutoff (default 60/omega)");
    greens->add_option("--rel-tol", rel_tol, "quadrature relative tolerance");

    double b_min = -2.0, b_max = 2.0, c_min = -2.0, c_max = 2.0;
    int nb = 41, nc = 41, nu_max = 2;
    auto* phase = app.add_subcommand("phase-scan", "PT phase classification over a (B,C) grid");
    pf.attach(phase);
    phase->add_option("--B-min", b_min);
    phase->add_option("--B-max", b_max);
    phase->add_option("--C-min", c_min);
    phase->add_option("--C-max", c_max);
    phase->add_option("--nb", nb, "grid points in B")->check(CLI::PositiveNumber);
    phase->add_option("--nc", nc, "grid points in C")->check(CLI::PositiveNumber);
    phase->add_option("--nu-max", nu_max, "largest nu sector checked");

    auto* oracle = app.add_subcommand("oracle", "shooting-oracle residual per level");
    pf.attach(oracle);
    oracle->add_option("--max-n", max_n, "max n2+nt2");
    oracle->add_option("--max-nu", max_nu, "max nu");

    double r = 1.0, theta = M_PI / 2.0, phi = 0.0;
    auto* transform = app.add_subcommand("transform", "one point in all four representations");
    transform->add_option("--r", r)->check(CLI::PositiveNumber);
    transform->add_option("--theta", theta, "polar angle, strictly inside (0, pi)");
    transform->add_option("--phi", phi);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (spectrum->parsed()) return run_spectrum(pf, max_n, max_nu, format, out, strict);
        if (greens->parsed()) {
            if (beta_max <= 0.0)
                beta_max = 60.0 / std::sqrt(-energy / (2.0 * pf.m));
            return run_greens(pf, energy, ea, eb, beta_max, rel_tol, out);
        }
        if (phase->parsed())
            return run_phase_scan(pf, b_min, b_max, c_min, c_max, nb, nc, nu_max, format, out);
        if (oracle->parsed()) return run_oracle(pf, max_n, max_nu, format, out);
        if (transform->parsed()) return run_transform(r, theta, phi, out);
    } catch (const ptpara::BrokenPhaseError& e) {
        std::cerr << e.what() << '\n';
        return strict ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
    return 2;
}
