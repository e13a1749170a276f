#include "ptpara/oracle.hpp"

#include <cmath>

#include "ptpara/spectrum.hpp"

namespace ptpara::oracle {

namespace {

struct OdeState {
    Complex f, df;
};

/// f'' = -f'/u + [ l^2/u^2 + (2m/hbar^2)((m omega^2/2) u^2 - eps) ] f
struct RadialRhs {
    double m, hbar, omega;
    Complex l2, eps;

    Complex curvature(double u) const {
        return l2 / (u * u) +
               (2.0 * m / (hbar * hbar)) * (0.5 * m * omega * omega * u * u - eps);
    }

    OdeState deriv(double u, const OdeState& y) const {
        return {y.df, -y.df / u + curvature(u) * y.f};
    }
};

OdeState rk4_step(const RadialRhs& rhs, double u, const OdeState& y, double h) {
    auto add = [](const OdeState& a, const OdeState& b, double w) {
        return OdeState{a.f + w * b.f, a.df + w * b.df};
    };
    OdeState k1 = rhs.deriv(u, y);
    OdeState k2 = rhs.deriv(u + 0.5 * h, add(y, k1, 0.5 * h));
    OdeState k3 = rhs.deriv(u + 0.5 * h, add(y, k2, 0.5 * h));
    OdeState k4 = rhs.deriv(u + h, add(y, k3, h));
    OdeState out = y;
    out.f += h / 6.0 * (k1.f + 2.0 * k2.f + 2.0 * k3.f + k4.f);
    out.df += h / 6.0 * (k1.df + 2.0 * k2.df + 2.0 * k3.df + k4.df);
    return out;
}

void renormalize(OdeState& y) {
    double mag = std::abs(y.f);
    if (mag > 1e100 || (mag > 0.0 && mag < 1e-100)) {
        y.f /= mag;
        y.df /= mag;
    }
}

/// Log-derivative mismatch between the regular and decaying solutions at
/// the match point; zero at an eigenvalue.
Complex matching(const RadialProblem& pb, Complex eps, double u0, double u_match,
                 double u_max, int n_out, int n_in) {
    RadialRhs rhs{pb.m, pb.hbar, pb.omega, pb.l * pb.l, eps};

    // outward: Frobenius series f = u^l sum_k c_k u^{2k} with
    //   c_{k+1} = [ (m omega / hbar)^2 c_{k-1} - (2 m eps / hbar^2) c_k ]
    //             / (4 (k+1)(k+1+l)),
    // summed at a macroscopic u0 (the series is entire, so truncation
    // error decays factorially; a tiny u0 would make the u^l phase,
    // which winds like ln u for complex l, unresolvable by the stepper)
    const int kTerms = 16;
    double w2 = (pb.m * pb.omega / pb.hbar) * (pb.m * pb.omega / pb.hbar);
    Complex e2 = 2.0 * pb.m * eps / (pb.hbar * pb.hbar);
    Complex c_prev = 0.0, c_cur = 1.0;
    Complex f_ser = 1.0, df_ser = pb.l; // sums of c_k u^{2k} and (l+2k) c_k u^{2k}
    double u0sq = u0 * u0, upow = 1.0;
    for (int k = 0; k < kTerms; ++k) {
        Complex c_next = (w2 * c_prev - e2 * c_cur) / (4.0 * (k + 1.0) * (k + 1.0 + pb.l));
        upow *= u0sq;
        f_ser += c_next * upow;
        df_ser += (pb.l + 2.0 * (k + 1.0)) * c_next * upow;
        c_prev = c_cur;
        c_cur = c_next;
    }
    Complex ul = std::exp(pb.l * std::log(u0));
    OdeState out{ul * f_ser, ul / u0 * df_ser};
    double h = (u_match - u0) / n_out;
    for (int i = 0; i < n_out; ++i) {
        out = rk4_step(rhs, u0 + i * h, out, h);
        renormalize(out);
    }

    // inward: Gaussian-decay seed
    OdeState in{1.0, Complex(-pb.m * pb.omega * u_max / pb.hbar, 0.0)};
    double hi = (u_match - u_max) / n_in; // negative
    for (int i = 0; i < n_in; ++i) {
        in = rk4_step(rhs, u_max + i * hi, in, hi);
        renormalize(in);
    }

    double k_norm = std::sqrt(2.0 * pb.m * std::abs(eps)) / pb.hbar + 1.0 / u_match;
    return (out.df / out.f - in.df / in.f) / k_norm;
}

} // namespace

ShootingResult radial_shoot(const RadialProblem& problem) {
    if (problem.l.real() < 0.0)
        throw DomainError("radial_shoot: Re(l) must be >= 0 (principal branch)");
    if (problem.n_r < 0) throw DomainError("radial_shoot: n_r must be >= 0");

    double hw = problem.hbar * problem.omega;
    Complex expected = hw * (2.0 * problem.n_r + problem.l + 1.0);

    double u_turn = std::sqrt(2.0 * std::max(expected.real(), hw) / problem.m) / problem.omega;
    double u_max = problem.grid.u_max > 0.0 ? problem.grid.u_max : 6.0 * u_turn;
    if (0.5 * problem.m * problem.omega * (u_max * u_max - u_turn * u_turn) / problem.hbar < 18.0)
        throw GridError("radial_shoot: eigenfunction not decayed at u_max");

    double u0 = 0.2 * std::sqrt(problem.hbar / (problem.m * problem.omega));
    double u_match = std::max(0.7 * u_turn, 2.0 * u0);
    double kbar = std::sqrt(2.0 * problem.m * std::max(expected.real(), hw)) / problem.hbar;
    int steps = problem.grid.steps > 0
                    ? problem.grid.steps
                    : std::max(8000, int(60.0 * u_max * kbar));
    int n_out = std::max(64, int(steps * (u_match - u0) / (u_max - u0)));
    int n_in = std::max(64, steps - n_out);

    Complex eps = expected * 1.01; // perturbed initial guess
    double h_eps = 1e-7 * std::max(hw, std::abs(eps));
    Complex f_val = matching(problem, eps, u0, u_match, u_max, n_out, n_in);
    for (int it = 1; it <= 50; ++it) {
        Complex fp = matching(problem, eps + h_eps, u0, u_match, u_max, n_out, n_in);
        Complex fm = matching(problem, eps - h_eps, u0, u_match, u_max, n_out, n_in);
        Complex deriv = (fp - fm) / (2.0 * h_eps);
        Complex step = f_val / deriv;
        // stay within the level spacing
        double cap = 0.5 * hw;
        if (std::abs(step) > cap) step *= cap / std::abs(step);
        eps -= step;
        f_val = matching(problem, eps, u0, u_match, u_max, n_out, n_in);
        if (std::abs(step) < 1e-11 * hw || std::abs(f_val) < 1e-12)
            return {eps, std::abs(f_val), it};
    }
    throw NoConvergence("radial_shoot: complex Newton did not converge in 50 steps");
}

double assemble_level(const PhysicalParams& params, const QuantumNumbers& qn, double omega) {
    double s = double(qn.nu) * qn.nu + params.B;
    Complex l1 = principal_sqrt(Complex(s, params.C));
    Complex l2 = principal_sqrt(Complex(s, -params.C));
    RadialProblem p1{params.m, params.hbar, omega, l1, qn.n2, {}};
    RadialProblem p2{params.m, params.hbar, omega, l2, qn.nt2, {}};
    Complex total = radial_shoot(p1).eigenvalue + radial_shoot(p2).eigenvalue;
    return total.real() - params.alpha;
}

std::vector<double> hermite_functions(double m, double hbar, double omega,
                                      double x, int n_max) {
    double s = std::sqrt(m * omega / hbar);
    double y = s * x;
    std::vector<double> phi(n_max + 1);
    phi[0] = std::sqrt(s) * std::pow(M_PI, -0.25) * std::exp(-0.5 * y * y);
    if (n_max >= 1) phi[1] = std::sqrt(2.0) * y * phi[0];
    for (int n = 1; n < n_max; ++n)
        phi[n + 1] = std::sqrt(2.0 / (n + 1.0)) * y * phi[n] -
                     std::sqrt(n / (n + 1.0)) * phi[n - 1];
    return phi;
}

double hermite_spectral_sum(const PhysicalParams& params, double omega,
                            const coords::OscillatorPoint& a,
                            const coords::OscillatorPoint& b, int n_max,
                            double beta_damp) {
    if (n_max < 20) throw DomainError("hermite_spectral_sum: n_max must be >= 20");
    if (beta_damp < 0.0) throw DomainError("hermite_spectral_sum: beta_damp must be >= 0");
    const double qa[4] = {a.u[0], a.u[1], a.v[0], a.v[1]};
    const double qb[4] = {b.u[0], b.u[1], b.v[0], b.v[1]};
    bool distinct = false;
    for (int i = 0; i < 4; ++i) distinct = distinct || qa[i] != qb[i];
    if (!distinct) throw CoincidentEndpoints("hermite_spectral_sum: endpoints must differ");

    double hw = params.hbar * omega;
    std::vector<double> inv_denom(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        double d = hw * (n + 2.0) - params.alpha;
        if (std::abs(d) < 1e-10)
            throw PoleProximity("hermite_spectral_sum: denominator at a pole");
        inv_denom[n] = std::exp(-d * beta_damp / params.hbar) * params.hbar / d;
    }

    std::vector<std::vector<double>> prod(4);
    for (int i = 0; i < 4; ++i) {
        auto pa = hermite_functions(params.m, params.hbar, omega, qa[i], n_max);
        auto pb = hermite_functions(params.m, params.hbar, omega, qb[i], n_max);
        prod[i].resize(n_max + 1);
        for (int n = 0; n <= n_max; ++n) prod[i][n] = pa[n] * pb[n];
    }

    double sum = 0.0;
    for (int n1 = 0; n1 <= n_max; ++n1)
        for (int n2 = 0; n2 <= n_max - n1; ++n2) {
            double p12 = prod[0][n1] * prod[1][n2];
            if (p12 == 0.0) continue;
            for (int n3 = 0; n3 <= n_max - n1 - n2; ++n3) {
                double p123 = p12 * prod[2][n3];
                if (p123 == 0.0) continue;
                for (int n4 = 0; n4 <= n_max - n1 - n2 - n3; ++n4)
                    sum += p123 * prod[3][n4] * inv_denom[n1 + n2 + n3 + n4];
            }
        }
    return sum;
}

double hermite_spectral_sum_1d(double m, double hbar, double omega, double qa,
                               double qb, double alpha_shift, int n_max) {
    auto pa = hermite_functions(m, hbar, omega, qa, n_max);
    auto pb = hermite_functions(m, hbar, omega, qb, n_max);
    double sum = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        double d = hbar * omega * (n + 0.5) - alpha_shift;
        if (std::abs(d) < 1e-10)
            throw PoleProximity("hermite_spectral_sum_1d: denominator at a pole");
        sum += pa[n] * pb[n] * hbar / d;
    }
    return sum;
}

} // namespace ptpara::oracle
