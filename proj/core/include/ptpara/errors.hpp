#ifndef PTPARA_ERRORS_HPP
#define PTPARA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ptpara {

/// Input lies on a singular manifold (axis, origin) or fails a range check.
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// The reality argument for lambda does not apply: nu^2 + B is on the
/// negative real axis with C = 0, so lambda would be purely imaginary.
struct BrokenPhaseError : std::runtime_error {
    explicit BrokenPhaseError(const std::string& what) : std::runtime_error(what) {}
};

/// Real-time kernel requested too close to a zero of sin(omega*tau).
struct CausticError : std::runtime_error {
    explicit CausticError(const std::string& what) : std::runtime_error(what) {}
};

/// Trapezoid refinement failed to reach the requested tolerance.
struct GridTooCoarse : std::runtime_error {
    explicit GridTooCoarse(const std::string& what) : std::runtime_error(what) {}
};

/// The pseudo-time integrand grows over the final decade: at or above a pole.
struct DivergentIntegral : std::runtime_error {
    explicit DivergentIntegral(const std::string& what) : std::runtime_error(what) {}
};

/// Diagonal resolvent requested; the beta->0 kernel divergence is not regularized.
struct CoincidentEndpoints : std::runtime_error {
    explicit CoincidentEndpoints(const std::string& what) : std::runtime_error(what) {}
};

/// A spectral-sum denominator is numerically at a pole.
struct PoleProximity : std::runtime_error {
    explicit PoleProximity(const std::string& what) : std::runtime_error(what) {}
};

/// Complex Newton iteration did not converge.
struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// Shooting grid does not contain the decay region of the eigenfunction.
struct GridError : std::runtime_error {
    explicit GridError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ptpara

#endif
