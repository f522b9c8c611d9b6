#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "superosc/piecewise_poly.hpp"

namespace superosc {

/// sin(pi x)/(pi x); evaluated by its Taylor series for |pi x| < 1e-4.
double sinc(double x);

enum class EnvelopeFamily { sinc_power, bump };

struct BumpConfig {
    double cache_step = 1.0 / 256.0;   // time-grid spacing of the e(t) cache
    double cache_horizon = 64.0;       // |t| beyond this falls back to direct quadrature
    double quad_abs_tol = 1e-12;       // panel-doubling stop for e(t)
    int max_panel_level = 10;          // quadrature levels up to 2^level panels
};

/// Bandlimited envelope e(t) with e(0) = 1 and transform E supported on
/// [-pi, pi]. Two families:
///   sinc_power(m): e(t) = sinc(t/m)^m; E is an exact piecewise polynomial of
///     degree m-1 (the m-fold self-convolution of the rectangle transform of
///     sinc(t/m), with the 1/2pi product-convolution factor per step).
///   bump: E(omega) = c * exp(-1/(pi^2 - omega^2)) on (-pi, pi), c fixed by
///     the e(0) = 1 normalization; e(t) by quadrature of the inverse
///     transform, cached on a uniform grid.
/// Immutable after construction; copies share the underlying data.
class Envelope {
public:
    EnvelopeFamily family() const;
    /// m for sinc_power; throws for bump.
    int sinc_exponent() const;
    /// Largest admissible polynomial degree: m-1 for sinc_power(m),
    /// unbounded (nullopt) for bump.
    std::optional<int> max_poly_order() const;
    double support_half_width() const;  // always pi
    /// Scale applied to the raw bump transform so that e(0) = 1
    /// (1 for sinc_power, where the normalization is automatic).
    double normalization() const;

    double eval_time(double t) const;

    /// n-th derivative of E at omega. For sinc_power, n must not exceed m-1;
    /// at breakpoints where the (m-1)-th derivative jumps the average of the
    /// one-sided limits is returned. Bump derivatives use the closed
    /// recursion E^(n) = (rational in omega) * E with underflow clamped to 0
    /// near the support edge.
    double eval_freq_deriv(int n, double omega) const;

    /// True iff `omega` is a jump point of the n-th derivative.
    bool derivative_jump_at(int n, double omega) const;

    /// Exact piecewise representation of E^(n) (sinc_power only).
    const PiecewisePoly& piecewise_spectrum(int n = 0) const;

    /// Interior smoothness boundaries of E (lattice for sinc_power, support
    /// edges only for bump).
    std::vector<double> spectrum_breakpoints() const;

    /// Integral of E^(n)(u)^2 over the support: exact for sinc_power,
    /// adaptive quadrature for bump.
    double freq_deriv_sq_integral(int n) const;

    struct Impl;

private:
    explicit Envelope(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;

    friend Envelope make_sinc_power(int m);
    friend Envelope make_bump(const BumpConfig& cfg);
};

Envelope make_sinc_power(int m);
Envelope make_bump(const BumpConfig& cfg = {});

}  // namespace superosc
