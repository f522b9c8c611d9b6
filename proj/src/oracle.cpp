#include "superosc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace superosc {

namespace {
constexpr double kPi = std::numbers::pi;
}

QuadratureResult inverse_transform_point(const Spectrum& F, double t, const QuadratureConfig& cfg) {
    const double half = F.support_half_width();
    QuadratureConfig run = cfg;
    // Seed the panel count so each panel sees at most a few oscillation cycles.
    run.initial_panels = std::max(1, static_cast<int>(std::abs(t) * half / (4.0 * kPi)));
    QuadratureResult res = integrate_piecewise(
        [&F, t](double w) {
            return F(w) * std::complex<double>(std::cos(w * t), std::sin(w * t));
        },
        -half, half, F.breakpoints(), run);
    res.value /= 2.0 * kPi;
    res.error_estimate /= 2.0 * kPi;
    return res;
}

ForwardTransformResult forward_transform_point(const SuperoscSpec& spec, double omega, double T,
                                               const QuadratureConfig& cfg) {
    if (!(T > 0.0)) throw std::invalid_argument("forward_transform_point: horizon T must be > 0");
    ForwardTransformResult out;

    QuadratureConfig run = cfg;
    // f is bandlimited to pi and the kernel adds |omega|: keep panels short.
    const double cycles = T * (kPi + std::abs(omega)) / kPi;
    run.initial_panels = std::max(4, static_cast<int>(cycles / 4.0));
    out.quadrature = integrate_complex(
        [&spec, omega](double t) {
            return synthesize_at(spec, t) *
                   std::complex<double>(std::cos(omega * t), -std::sin(omega * t));
        },
        -T, T, run);

    const Eigen::VectorXd& a = spec.poly().coeffs();
    const double D = spec.dilation();
    if (spec.envelope().family() == EnvelopeFamily::sinc_power) {
        // |e(t/D)| <= (m D / (pi |t|))^m, so each term decays like t^(n-m).
        const int m = spec.envelope().sinc_exponent();
        const double env_const = std::pow(m * D / kPi, m);
        double tail = 0.0;
        for (Eigen::Index n = 0; n < a.size(); ++n) {
            if (a[n] == 0.0) continue;
            const double amp = std::abs(a[n]) * env_const * std::pow(T, static_cast<double>(n) - m);
            const int decay = m - static_cast<int>(n);  // integrand ~ t^(-decay)
            if (decay >= 2) {
                tail += 2.0 * amp * T / (decay - 1);  // Int_T^inf amplitude dt, both tails
            } else {
                // Marginal 1/t term: bound the oscillatory remainder by
                // 2*amp/delta with delta the gap to the nearest band edge.
                out.marginal_decay = true;
                const double delta = std::max(1e-3, std::abs(std::abs(omega) - kPi / D));
                tail += 4.0 * amp / delta;
            }
        }
        out.tail_bound = tail;
    } else {
        // Bump envelopes decay faster than any power; use the sampled edge
        // magnitude as an order-of-magnitude tail estimate.
        const double edge = std::abs(synthesize_at(spec, T)) + std::abs(synthesize_at(spec, -T));
        out.tail_bound = 4.0 * edge;
    }
    out.quadrature.error_estimate += out.tail_bound;
    return out;
}

double finite_difference_derivative(const std::function<double(double)>& f, double x, int n,
                                    const std::vector<double>& breakpoints, double step_hint) {
    if (n < 0) throw std::invalid_argument("finite_difference_derivative: order must be >= 0");
    if (n == 0) return f(x);
    const double eps = std::numeric_limits<double>::epsilon();
    const double h = step_hint > 0.0 ? step_hint : std::pow(eps, 1.0 / (n + 2));

    // n-th central difference: sum_k (-1)^(n-k) C(n,k) f(x + (k - n/2) h) / h^n
    std::vector<double> offsets;
    offsets.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) offsets.push_back((k - 0.5 * n) * h);

    const double lo = x + offsets.front(), hi = x + offsets.back();
    for (double b : breakpoints)
        if (b > lo - 0.25 * h && b < hi + 0.25 * h)
            throw std::invalid_argument(
                "finite_difference_derivative: stencil crosses a breakpoint at " +
                std::to_string(b));

    double acc = 0.0;
    double binom = 1.0;
    for (int k = 0; k <= n; ++k) {
        const double sign = ((n - k) % 2 == 0) ? 1.0 : -1.0;
        acc += sign * binom * f(x + offsets[static_cast<std::size_t>(k)]);
        binom *= static_cast<double>(n - k) / static_cast<double>(k + 1);
    }
    return acc / std::pow(h, n);
}

}  // namespace superosc
