#pragma once

#include <functional>
#include <vector>

#include "superosc/quadrature.hpp"
#include "superosc/synthesis.hpp"

namespace superosc {

/// (1/2pi) * Int F(omega) e^{i omega t} domega over the compact support,
/// integrated piecewise between the spectrum's breakpoints. This is the
/// authoritative numerical route back to the time domain.
QuadratureResult inverse_transform_point(const Spectrum& F, double t,
                                         const QuadratureConfig& cfg = {});

struct ForwardTransformResult {
    QuadratureResult quadrature;  // value of the truncated integral
    double tail_bound = 0.0;      // analytic estimate of the omitted |t| > T mass
    bool marginal_decay = false;  // envelope decay barely integrable: O(1/T) convergence
};

/// Int_{-T}^{T} f(t) e^{-i omega t} dt. Convergence in T is slow (O(1/T))
/// when the spec sits at the minimal smoothness margin m = N+1; the tail
/// bound reports this honestly. Offered for spot checks only; the inverse
/// direction is the oracle.
ForwardTransformResult forward_transform_point(const SuperoscSpec& spec, double omega, double T,
                                               const QuadratureConfig& cfg = {});

/// Central finite difference of order n at x, step ~ eps^(1/(n+2)). Throws if
/// the stencil crosses one of the given breakpoints.
double finite_difference_derivative(const std::function<double(double)>& f, double x, int n,
                                    const std::vector<double>& breakpoints = {},
                                    double step_hint = 0.0);

}  // namespace superosc
