#include "ptpara/sector_kernel.hpp"

#include <cmath>

namespace ptpara::sector {

Complex log_gamma(Complex z) {
    // Lanczos, g = 7, 9 coefficients
    static const double coeff[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7};
    if (z.real() < 0.5) {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return std::log(M_PI) - std::log(std::sin(M_PI * z)) - log_gamma(1.0 - z);
    }
    Complex x = coeff[0];
    Complex zm1 = z - 1.0;
    for (int i = 1; i < 9; ++i) x += coeff[i] / (zm1 + double(i));
    Complex t = zm1 + 7.5;
    return 0.5 * std::log(2.0 * M_PI) + (zm1 + 0.5) * std::log(t) - t + std::log(x);
}

Complex log_bessel_i(Complex order, double x) {
    if (!(x > 0.0)) throw DomainError("log_bessel_i: x must be > 0");
    if (x <= 30.0) {
        // I_l(x) = (x/2)^l / Gamma(l+1) * sum_k t_k, t_0 = 1,
        // t_{k+1} = t_k * (x/2)^2 / ((k+1)(l+k+1)); all |t_k| decreasing
        // eventually, no sign alternation in magnitude.
        double q = 0.25 * x * x;
        Complex term = 1.0;
        Complex sum = 1.0;
        for (int k = 0; k < 400; ++k) {
            term *= q / ((k + 1.0) * (order + double(k + 1)));
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        }
        return order * std::log(0.5 * x) - log_gamma(order + 1.0) + std::log(sum);
    }
    // I_l(x) ~ e^x / sqrt(2 pi x) * sum_k (-1)^k a_k(l) / x^k with
    // a_k = prod_{j=1..k} (mu - (2j-1)^2) / (k! 8^k), mu = 4 l^2.
    Complex mu = 4.0 * order * order;
    Complex sum = 1.0;
    Complex num = 1.0;
    double denom = 1.0;
    for (int k = 1; k <= 6; ++k) {
        double odd = 2.0 * k - 1.0;
        num *= mu - odd * odd;
        denom *= 8.0 * k * x;
        sum += ((k % 2) ? -1.0 : 1.0) * num / denom;
    }
    return x - 0.5 * std::log(2.0 * M_PI * x) + std::log(sum);
}

Complex laguerre(int n, Complex a, double x) {
    if (n < 0) throw DomainError("laguerre: n must be >= 0");
    Complex lm1 = 1.0;
    if (n == 0) return lm1;
    Complex l = 1.0 + a - x;
    for (int k = 1; k < n; ++k) {
        Complex next = ((2.0 * k + 1.0 + a - x) * l - (double(k) + a) * lm1) / double(k + 1);
        lm1 = l;
        l = next;
    }
    return l;
}

Complex sector_kernel_2d(double m, double hbar, double omega, Complex l,
                         double ra, double rb, double beta) {
    if (!(beta > 0.0)) throw DomainError("sector_kernel_2d: beta must be > 0");
    double wb = omega * beta;
    double sh = std::sinh(wb);
    double coth = std::cosh(wb) / sh;
    double arg = m * omega * ra * rb / (hbar * sh);
    Complex lk = std::log(m * omega / (hbar * sh)) -
                 (m * omega / (2.0 * hbar)) * (ra * ra + rb * rb) * coth +
                 log_bessel_i(l, arg);
    if (lk.real() < -745.0) return {0.0, 0.0};
    return std::exp(lk);
}

Complex radial_eigenfunction(int n, Complex l, double m, double hbar,
                             double omega, double r) {
    double b = m * omega / hbar;
    double x = b * r * r;
    // N^2 = 2 b n! / Gamma(n+l+1)
    Complex logN = 0.5 * (std::log(2.0 * b) + log_gamma(Complex(n + 1.0)) -
                          log_gamma(l + double(n + 1)));
    Complex pref = std::exp(logN + 0.5 * l * std::log(x) - 0.5 * x);
    return pref * laguerre(n, l, x);
}

} // namespace ptpara::sector
