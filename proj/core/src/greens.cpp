#include "ptpara/greens.hpp"

#include <cmath>
#include <limits>

#include "ptpara/propagator.hpp"
#include "ptpara/sector_kernel.hpp"
#include "ptpara/spectrum.hpp"

namespace ptpara::greens {

namespace {

template <typename F>
double simpson(F&& f, double a, double b) {
    return (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b));
}

template <typename F>
double adaptive_simpson(F&& f, double a, double b, double whole, double tol, int depth) {
    double mid = 0.5 * (a + b);
    double left = simpson(f, a, mid);
    double right = simpson(f, mid, b);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson(f, a, mid, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, mid, b, right, 0.5 * tol, depth - 1);
}

/// Least-squares slope of y against x.
double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double xm = 0.0, ym = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) { xm += x[i]; ym += y[i]; }
    xm /= double(x.size());
    ym /= double(x.size());
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += (x[i] - xm) * (y[i] - ym);
        den += (x[i] - xm) * (x[i] - xm);
    }
    return num / den;
}

} // namespace

GreensValue pseudo_greens(const GreensRequest& request) {
    const auto& p = request.params;
    if (!(request.energy < 0.0))
        throw DomainError("pseudo_greens: energy must be < 0 (bound sector)");
    double omega = std::sqrt(-request.energy / (2.0 * p.m));

    double diff2 = 0.0, scale2 = 0.0;
    auto acc = [&](double xa, double xb) {
        diff2 += (xa - xb) * (xa - xb);
        scale2 += xa * xa + xb * xb;
    };
    for (int i = 0; i < 2; ++i) {
        acc(request.a.u[i], request.b.u[i]);
        acc(request.a.v[i], request.b.v[i]);
    }
    if (diff2 <= 1e-28 * (1.0 + scale2))
        throw CoincidentEndpoints("pseudo_greens: coincident endpoints give a UV-divergent diagonal");

    auto integrand = [&](double beta) {
        propagator::KernelRequest kr{p, omega, request.a, request.b, beta,
                                     propagator::Representation::Euclidean};
        return propagator::total_kernel(kr).value.real();
    };

    double beta_max = request.quad.beta_max;

    // divergence check: slope of log f over the final decade
    {
        std::vector<double> xs, ys;
        double last = 0.0;
        for (int j = 0; j <= 12; ++j) {
            double beta = beta_max / 10.0 * std::pow(10.0, j / 12.0);
            double f = integrand(beta);
            last = f;
            if (f > 0.0) {
                xs.push_back(beta);
                ys.push_back(std::log(f));
            }
        }
        if (xs.size() >= 4 && last > 0.0 && ls_slope(xs, ys) >= 0.0)
            throw DivergentIntegral("pseudo_greens: integrand non-decreasing over the final decade");
    }

    // integrate on the log axis: beta = e^t
    if (!(request.quad.beta_min > 0.0 && request.quad.beta_min < beta_max))
        throw DomainError("pseudo_greens: need 0 < beta_min < beta_max");
    double t_lo = std::log(request.quad.beta_min);
    double t_hi = std::log(beta_max);
    auto g = [&](double t) {
        double beta = std::exp(t);
        return integrand(beta) * beta;
    };
    // coarse pass to set the absolute tolerance
    int n_coarse = 64;
    double coarse = 0.0, h = (t_hi - t_lo) / n_coarse;
    for (int i = 0; i < n_coarse; ++i) coarse += simpson(g, t_lo + i * h, t_lo + (i + 1) * h);
    double tol = request.quad.rel_tol * std::abs(coarse);
    if (tol <= 0.0) tol = std::numeric_limits<double>::min();

    double pseudo = 0.0;
    for (int i = 0; i < n_coarse; ++i) {
        double a = t_lo + i * h, b = t_lo + (i + 1) * h;
        pseudo += adaptive_simpson(g, a, b, simpson(g, a, b), tol / n_coarse, 40);
    }

    // tail bound from the measured decay rate near beta_max
    double f1 = integrand(0.8 * beta_max);
    double f2 = integrand(beta_max);
    double tail = std::numeric_limits<double>::infinity();
    if (f2 == 0.0) {
        tail = 0.0;
    } else if (f2 < f1) {
        double rate = std::log(f1 / f2) / (0.2 * beta_max);
        tail = f2 / rate;
    }
    bool converged = tail < request.quad.rel_tol * std::abs(pseudo);
    return {pseudo, pseudo_to_physical(pseudo, request.a), converged, tail};
}

double pseudo_to_physical(double pseudo, const coords::OscillatorPoint& a) {
    double n2 = a.u[0] * a.u[0] + a.u[1] * a.u[1] + a.v[0] * a.v[0] + a.v[1] * a.v[1];
    if (!(n2 > 0.0))
        throw DomainError("pseudo_to_physical: Liouville weight undefined at the origin");
    return pseudo * 4.0 / n2;
}

namespace {

struct SectorProbe {
    double m, hbar, alpha, omega, lambda;
    Complex l1, l2;
    int n_deflate;

    /// log |deflated sector integrand| at pseudo-time beta. For
    /// n_deflate = 0 this is the closed-form kernel product; for
    /// n_deflate > 0 the remainder above the deflated levels is evaluated
    /// as its exact spectral tail (the identity between the two routes is
    /// covered by the test suite), which avoids subtractive cancellation.
    double log_abs(double beta, const double* ru, const double* rv) const {
        Complex k;
        if (n_deflate == 0) {
            k = sector::sector_kernel_2d(m, hbar, omega, l1, ru[0], ru[1], beta) *
                sector::sector_kernel_2d(m, hbar, omega, l2, rv[0], rv[1], beta);
        } else {
            const int tail = 60;
            std::vector<Complex> au(n_deflate + tail + 1), bv(n_deflate + tail + 1);
            for (int n = 0; n < int(au.size()); ++n) {
                au[n] = sector::radial_eigenfunction(n, l1, m, hbar, omega, ru[0]) *
                        sector::radial_eigenfunction(n, l1, m, hbar, omega, ru[1]);
                bv[n] = sector::radial_eigenfunction(n, l2, m, hbar, omega, rv[0]) *
                        sector::radial_eigenfunction(n, l2, m, hbar, omega, rv[1]);
            }
            k = 0.0;
            for (int s = n_deflate; s <= n_deflate + tail; ++s) {
                Complex ps = 0.0;
                for (int n2 = 0; n2 <= s; ++n2) ps += au[n2] * bv[s - n2];
                k += ps * std::exp(-omega * (2.0 * s + 2.0 + lambda / hbar) * beta);
            }
        }
        double mag = std::abs(k);
        if (mag <= 0.0) return -1e6;
        return std::log(mag) + alpha * beta / hbar;
    }

    /// Measured decay slope of the deflated integrand at trial omega; the
    /// onset of divergence is where this crosses zero from below.
    double slope(double trial_omega) {
        omega = trial_omega;
        double s = std::sqrt(hbar / (m * omega));
        double ru[2] = {0.9 * s, 1.3 * s};
        double rv[2] = {1.1 * s, 0.7 * s};
        // late enough that levels above the target have decayed
        double ba, bb;
        if (n_deflate == 0) {
            ba = 8.0 / omega;
            bb = 24.0 / omega;
        } else {
            ba = 6.0 / omega;
            bb = 10.0 / omega;
        }
        const int npts = 12;
        std::vector<double> xs(npts), ys(npts);
        for (int j = 0; j < npts; ++j) {
            double beta = ba + (bb - ba) * j / double(npts - 1);
            xs[j] = beta;
            ys[j] = log_abs(beta, ru, rv);
        }
        return ls_slope(xs, ys);
    }
};

} // namespace

PoleScanResult pole_scan(const PhysicalParams& params, int nu, double omega_lo,
                         double omega_hi, int steps, int n_levels) {
    if (!(omega_lo > 0.0 && omega_hi > omega_lo))
        throw DomainError("pole_scan: omega range must be positive and increasing");
    if (steps < 2) throw DomainError("pole_scan: need at least 2 grid steps");
    double lambda = spectrum::lambda_value(params, nu);
    double s = double(nu) * nu + params.B;
    Complex l1 = principal_sqrt(Complex(s, params.C));
    Complex l2 = principal_sqrt(Complex(s, -params.C));

    const double nan = std::numeric_limits<double>::quiet_NaN();
    PoleScanResult result{nu, {}, {}, nan};
    for (int n = 0; n < n_levels; ++n) {
        result.predicted_omegas.push_back(
            params.alpha / (2.0 * double(n + 1) * params.hbar + lambda));

        SectorProbe probe{params.m, params.hbar, params.alpha, 0.0, lambda, l1, l2, n};
        // sweep downward for the convergent -> divergent flip
        double detected = nan;
        double prev_omega = omega_hi;
        double prev_slope = probe.slope(prev_omega);
        for (int i = 1; i < steps && std::isnan(detected); ++i) {
            double w = omega_hi + (omega_lo - omega_hi) * i / double(steps - 1);
            double sl = probe.slope(w);
            if (prev_slope < 0.0 && sl >= 0.0) {
                double hi = prev_omega, lo = w; // convergent at hi, divergent at lo
                while (hi - lo > 1e-6 * hi) {
                    double mid = 0.5 * (hi + lo);
                    if (probe.slope(mid) < 0.0)
                        hi = mid;
                    else
                        lo = mid;
                }
                detected = 0.5 * (hi + lo);
            }
            prev_omega = w;
            prev_slope = sl;
        }
        result.detected_omegas.push_back(detected);
    }

    double max_mismatch = nan;
    for (int n = 0; n < n_levels; ++n) {
        double det = result.detected_omegas[n];
        double pred = result.predicted_omegas[n];
        if (std::isnan(det) || pred < omega_lo || pred > omega_hi) continue;
        double mismatch = std::abs(det - pred) / pred;
        if (std::isnan(max_mismatch) || mismatch > max_mismatch) max_mismatch = mismatch;
    }
    result.max_abs_mismatch = max_mismatch;
    return result;
}

} // namespace ptpara::greens
