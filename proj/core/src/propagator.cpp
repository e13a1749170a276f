#include "ptpara/propagator.hpp"

#include <cmath>

namespace ptpara::propagator {

namespace {

constexpr double kCausticTol = 1e-8;
constexpr double kLogUnderflow = -745.0; // exp() underflows to 0 below this

// Log-magnitude form of the Euclidean kernel: log K = 0.5*log(m w / (2 pi
// hbar sinh)) - (m w / 2 hbar sinh) [ (qa^2+qb^2) cosh - 2 qa qb ].
double log_euclidean_kernel(double m, double hbar, double omega, double beta,
                            double qa, double qb) {
    double wb = omega * beta;
    double sh = std::sinh(wb);
    double ch = std::cosh(wb);
    double pref = m * omega / (2.0 * M_PI * hbar * sh);
    double ex = -(m * omega / (2.0 * hbar * sh)) * ((qa * qa + qb * qb) * ch - 2.0 * qa * qb);
    return 0.5 * std::log(pref) + ex;
}

} // namespace

Complex sho_kernel_1d(double m, double hbar, double omega, double time,
                      double qa, double qb, Representation rep) {
    if (!(time > 0.0)) throw DomainError("sho_kernel_1d: time must be > 0");
    if (!(m > 0.0 && hbar > 0.0 && omega > 0.0))
        throw DomainError("sho_kernel_1d: m, hbar, omega must be > 0");
    if (rep == Representation::Euclidean) {
        double lk = log_euclidean_kernel(m, hbar, omega, time, qa, qb);
        if (lk < kLogUnderflow) return {0.0, 0.0};
        return {std::exp(lk), 0.0};
    }
    double s = std::sin(omega * time);
    if (std::abs(s) < kCausticTol)
        throw CausticError("sho_kernel_1d: omega*tau too close to a multiple of pi");
    // 1/i = -i in the prefactor
    Complex pref = principal_sqrt(Complex(0.0, -m * omega / (2.0 * M_PI * hbar * s)));
    double phase = (m * omega / (2.0 * hbar * s)) *
                   ((qa * qa + qb * qb) * std::cos(omega * time) - 2.0 * qa * qb);
    return pref * std::exp(Complex(0.0, phase));
}

KernelValue total_kernel(const KernelRequest& request) {
    const auto& p = request.params;
    const double qa[4] = {request.a.u[0], request.a.u[1], request.a.v[0], request.a.v[1]};
    const double qb[4] = {request.b.u[0], request.b.u[1], request.b.v[0], request.b.v[1]};
    if (request.rep == Representation::Euclidean) {
        // accumulate in log space so the alpha factor cannot overflow
        // against four underflowing Gaussians
        double lk = p.alpha * request.time / p.hbar;
        for (int i = 0; i < 4; ++i)
            lk += log_euclidean_kernel(p.m, p.hbar, request.omega, request.time, qa[i], qb[i]);
        if (lk < kLogUnderflow) return {Complex(0.0, 0.0), request.rep, true};
        return {Complex(std::exp(lk), 0.0), request.rep, false};
    }
    Complex k = std::exp(Complex(0.0, p.alpha * request.time / p.hbar));
    for (int i = 0; i < 4; ++i)
        k *= sho_kernel_1d(p.m, p.hbar, request.omega, request.time, qa[i], qb[i],
                           Representation::RealTime);
    return {k, request.rep, false};
}

double semigroup_residual(double m, double hbar, double omega, double beta1,
                          double beta2, double qa, double qb,
                          const SemigroupGrid& grid) {
    auto kern = [&](double xa, double xb, double beta) {
        return sho_kernel_1d(m, hbar, omega, beta, xa, xb, Representation::Euclidean).real();
    };
    double reference = kern(qa, qb, beta1 + beta2);

    // thermal width of the intermediate-point Gaussian
    double var = (hbar / m) * std::min(beta1 + beta2, 1.0 / omega);
    double sigma = std::sqrt(var);
    double lo = std::min(qa, qb) - grid.widths * sigma;
    double hi = std::max(qa, qb) + grid.widths * sigma;

    auto integrand = [&](double x) { return kern(qa, x, beta1) * kern(x, qb, beta2); };

    int n = grid.initial_points;
    double h = (hi - lo) / n;
    double integral = 0.5 * (integrand(lo) + integrand(hi));
    for (int i = 1; i < n; ++i) integral += integrand(lo + i * h);
    integral *= h;

    for (int refine = 0; refine < grid.max_refine; ++refine) {
        double mid_sum = 0.0;
        for (int i = 0; i < n; ++i) mid_sum += integrand(lo + (i + 0.5) * h);
        double next = 0.5 * integral + 0.5 * h * mid_sum;
        n *= 2;
        h *= 0.5;
        bool done = std::abs(next - integral) <= 1e-8 * std::abs(reference);
        integral = next;
        if (done) return std::abs(integral - reference) / std::abs(reference);
    }
    throw GridTooCoarse("semigroup_residual: trapezoid refinement did not converge to 1e-7");
}

} // namespace ptpara::propagator
