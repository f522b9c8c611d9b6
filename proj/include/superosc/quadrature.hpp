#pragma once

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace superosc {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
};

/// n-point rule; computed once per order and cached.
const GaussRule& gauss_legendre(int n);

struct QuadratureResult {
    std::complex<double> value{0.0, 0.0};
    double error_estimate = 0.0;
    int panels_used = 0;
    bool converged = false;

    double real() const { return value.real(); }
};

struct QuadratureConfig {
    int points_per_panel = 32;
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_doublings = 20;
    int initial_panels = 1;
};

/// Composite Gauss-Legendre over [a, b]. The panel count doubles until two
/// successive composite estimates agree within tolerance; the last observed
/// difference is the error estimate.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& cfg = {});

QuadratureResult integrate_complex(const std::function<std::complex<double>(double)>& f,
                                   double a, double b, const QuadratureConfig& cfg = {});

/// Composite rule with the domain pre-split at the given breakpoints, so the
/// integrand is smooth on every panel. Breakpoints outside (a, b) are ignored.
QuadratureResult integrate_piecewise(const std::function<std::complex<double>(double)>& f,
                                     double a, double b, const std::vector<double>& breakpoints,
                                     const QuadratureConfig& cfg = {});

}  // namespace superosc
