#include "superosc/envelope.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "superosc/poly_ops.hpp"
#include "superosc/quadrature.hpp"

namespace superosc {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr int kMaxBumpDerivOrder = 40;
constexpr int kMaxSincExponent = 64;
constexpr double kBreakpointTol = 1e-12;
}  // namespace

double sinc(double x) {
    const double z = kPi * x;
    if (std::abs(z) < 1e-4) {
        const double z2 = z * z;
        return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
    }
    return std::sin(z) / z;
}

struct Envelope::Impl {
    EnvelopeFamily family;
    int m = 0;  // sinc exponent; 0 for bump
    double norm = 1.0;

    // sinc_power: E and its formal derivatives, orders 0..m-1
    std::vector<PiecewisePoly> freq_derivs;

    // bump: numerator polynomials of E^(n)/E = P_n / (pi^2-omega^2)^(2n)
    std::vector<Eigen::VectorXd> deriv_numerators;
    // quadrature levels: flattened nodes/weights over [-pi, pi] and E values
    struct QuadLevel {
        Eigen::VectorXd nodes, weights, e_values;
    };
    std::vector<QuadLevel> levels;
    BumpConfig bump_cfg;
    Eigen::VectorXd time_cache;  // e(k * cache_step), k = 0..N (even function)

    double bump_freq(double omega) const {
        const double u = (kPi - omega) * (kPi + omega);
        if (u <= 0.0) return 0.0;
        return norm * std::exp(-1.0 / u);
    }

    double bump_freq_deriv(int n, double omega) const {
        if (n == 0) return bump_freq(omega);
        const double u = (kPi - omega) * (kPi + omega);
        if (u <= 0.0) return 0.0;
        const double arg = -1.0 / u - 2.0 * n * std::log(u);
        if (arg < -745.0) return 0.0;  // underflow region near the support edge
        return norm * poly_ops::eval(deriv_numerators[static_cast<std::size_t>(n)], omega) *
               std::exp(arg);
    }

    // (1/2pi) * Int E(omega) cos(omega t) domega at a fixed panel level.
    double bump_time_at_level(double t, int level) const {
        const QuadLevel& ql = levels[static_cast<std::size_t>(level)];
        double acc = 0.0;
        for (Eigen::Index k = 0; k < ql.nodes.size(); ++k)
            acc += ql.weights[k] * ql.e_values[k] * std::cos(ql.nodes[k] * t);
        return acc / (2.0 * kPi);
    }

    double bump_time_direct(double t) const {
        const int max_level = static_cast<int>(levels.size()) - 1;
        int level = 0;
        const double needed = 0.4 * std::abs(t);
        while (level < max_level && (1 << level) < needed) ++level;
        double prev = bump_time_at_level(t, level);
        while (level < max_level) {
            ++level;
            const double cur = bump_time_at_level(t, level);
            if (std::abs(cur - prev) < bump_cfg.quad_abs_tol) return cur;
            prev = cur;
        }
        return prev;
    }

    double bump_time(double t) const {
        const double x = std::abs(t) / bump_cfg.cache_step;
        const auto last = static_cast<double>(time_cache.size() - 1);
        if (x + 2.0 > last) return bump_time_direct(t);
        const auto i = static_cast<Eigen::Index>(std::floor(x));
        const double f = x - static_cast<double>(i);
        // 4-point Lagrange on the uniform grid; index -1 mirrors to +1.
        const double ym1 = time_cache[i > 0 ? i - 1 : 1];
        const double y0 = time_cache[i];
        const double y1 = time_cache[i + 1];
        const double y2 = time_cache[i + 2];
        const double wm1 = -f * (f - 1.0) * (f - 2.0) / 6.0;
        const double w0 = (f * f - 1.0) * (f - 2.0) / 2.0;
        const double w1 = -f * (f + 1.0) * (f - 2.0) / 2.0;
        const double w2 = f * (f * f - 1.0) / 6.0;
        return wm1 * ym1 + w0 * y0 + w1 * y1 + w2 * y2;
    }
};

namespace {

std::shared_ptr<const Envelope::Impl> build_sinc_power(int m) {
    if (m < 2)
        throw std::invalid_argument(
            "make_sinc_power: m must be >= 2 (m = 1 leaves no bounded-variation margin)");
    if (m > kMaxSincExponent)
        throw std::invalid_argument("make_sinc_power: m must be <= " +
                                    std::to_string(kMaxSincExponent));
    auto impl = std::make_shared<Envelope::Impl>();
    impl->family = EnvelopeFamily::sinc_power;
    impl->m = m;

    const double h = kPi / m;
    PiecewisePoly spectrum = PiecewisePoly::rectangle(h, static_cast<double>(m));
    for (int step = 1; step < m; ++step)
        spectrum = spectrum.convolve_rectangle(h, static_cast<double>(m), 1.0 / (2.0 * kPi));

    impl->freq_derivs.reserve(static_cast<std::size_t>(m));
    impl->freq_derivs.push_back(std::move(spectrum));
    for (int n = 1; n < m; ++n) impl->freq_derivs.push_back(impl->freq_derivs.back().derivative());
    return impl;
}

std::shared_ptr<const Envelope::Impl> build_bump(const BumpConfig& cfg) {
    if (!(cfg.cache_step > 0.0) || !(cfg.cache_horizon >= 0.0) || cfg.max_panel_level < 1 ||
        cfg.max_panel_level > 16)
        throw std::invalid_argument("make_bump: invalid cache configuration");
    auto impl = std::make_shared<Envelope::Impl>();
    impl->family = EnvelopeFamily::bump;
    impl->bump_cfg = cfg;

    // Normalization: e(0) = (1/2pi) * norm * Int E_raw = 1.
    QuadratureConfig qcfg;
    qcfg.abs_tol = 1e-15;
    qcfg.rel_tol = 1e-14;
    const QuadratureResult raw = integrate(
        [](double w) {
            const double u = (kPi - w) * (kPi + w);
            return u > 0.0 ? std::exp(-1.0 / u) : 0.0;
        },
        -kPi, kPi, qcfg);
    impl->norm = 2.0 * kPi / raw.real();

    // Derivative numerators: P_1 = -2w; P_{n+1} = P_n' u^2 + (4n w u - 2w) P_n
    // with u = pi^2 - w^2, from E^(n) = P_n * E / u^(2n).
    Eigen::VectorXd u(3);
    u << kPi * kPi, 0.0, -1.0;
    const Eigen::VectorXd u2 = poly_ops::mul(u, u);
    Eigen::VectorXd w(2);
    w << 0.0, 1.0;
    const Eigen::VectorXd wu = poly_ops::mul(w, u);
    impl->deriv_numerators.resize(kMaxBumpDerivOrder + 1);
    impl->deriv_numerators[0] = Eigen::VectorXd::Ones(1);
    Eigen::VectorXd p(2);
    p << 0.0, -2.0;
    impl->deriv_numerators[1] = p;
    for (int n = 1; n < kMaxBumpDerivOrder; ++n) {
        const Eigen::VectorXd& pn = impl->deriv_numerators[static_cast<std::size_t>(n)];
        Eigen::VectorXd next = poly_ops::mul(poly_ops::derivative(pn), u2);
        next = poly_ops::add(next, poly_ops::mul((4.0 * n * wu).eval(), pn));
        next = poly_ops::sub(next, poly_ops::mul((2.0 * w).eval(), pn));
        impl->deriv_numerators[static_cast<std::size_t>(n + 1)] = poly_ops::trim(next);
    }

    // Quadrature levels, shared across all time-domain evaluations.
    const GaussRule& rule = gauss_legendre(32);
    impl->levels.resize(static_cast<std::size_t>(cfg.max_panel_level) + 1);
    for (int level = 0; level <= cfg.max_panel_level; ++level) {
        const int panels = 1 << level;
        auto& ql = impl->levels[static_cast<std::size_t>(level)];
        const Eigen::Index total = static_cast<Eigen::Index>(panels) * rule.nodes.size();
        ql.nodes.resize(total);
        ql.weights.resize(total);
        ql.e_values.resize(total);
        const double width = 2.0 * kPi / panels;
        Eigen::Index pos = 0;
        for (int pnl = 0; pnl < panels; ++pnl) {
            const double mid = -kPi + (pnl + 0.5) * width;
            for (Eigen::Index k = 0; k < rule.nodes.size(); ++k, ++pos) {
                ql.nodes[pos] = mid + 0.5 * width * rule.nodes[k];
                ql.weights[pos] = 0.5 * width * rule.weights[k];
                ql.e_values[pos] = impl->bump_freq(ql.nodes[pos]);
            }
        }
    }

    const auto cache_points = static_cast<Eigen::Index>(cfg.cache_horizon / cfg.cache_step) + 1;
    impl->time_cache.resize(cache_points);
    for (Eigen::Index i = 0; i < cache_points; ++i)
        impl->time_cache[i] = impl->bump_time_direct(static_cast<double>(i) * cfg.cache_step);
    return impl;
}

}  // namespace

Envelope make_sinc_power(int m) { return Envelope(build_sinc_power(m)); }

Envelope make_bump(const BumpConfig& cfg) { return Envelope(build_bump(cfg)); }

EnvelopeFamily Envelope::family() const { return impl_->family; }

int Envelope::sinc_exponent() const {
    if (impl_->family != EnvelopeFamily::sinc_power)
        throw std::logic_error("sinc_exponent: not a sinc_power envelope");
    return impl_->m;
}

std::optional<int> Envelope::max_poly_order() const {
    if (impl_->family == EnvelopeFamily::sinc_power) return impl_->m - 1;
    return std::nullopt;
}

double Envelope::support_half_width() const { return kPi; }

double Envelope::normalization() const { return impl_->norm; }

double Envelope::eval_time(double t) const {
    if (impl_->family == EnvelopeFamily::sinc_power) {
        const double base = sinc(t / impl_->m);
        double acc = 1.0;
        for (int i = 0; i < impl_->m; ++i) acc *= base;
        return acc;
    }
    return impl_->bump_time(t);
}

double Envelope::eval_freq_deriv(int n, double omega) const {
    if (n < 0) throw std::invalid_argument("eval_freq_deriv: order must be >= 0");
    if (impl_->family == EnvelopeFamily::bump) {
        if (n > kMaxBumpDerivOrder)
            throw std::invalid_argument("eval_freq_deriv: bump derivatives supported up to order " +
                                        std::to_string(kMaxBumpDerivOrder));
        return impl_->bump_freq_deriv(n, omega);
    }
    const int m = impl_->m;
    if (n > m - 1)
        throw std::invalid_argument("eval_freq_deriv: order " + std::to_string(n) +
                                    " exceeds max_poly_order " + std::to_string(m - 1) +
                                    " of sinc_power(" + std::to_string(m) + ")");
    const PiecewisePoly& d = impl_->freq_derivs[static_cast<std::size_t>(n)];
    if (n == m - 1) {
        // Piecewise constant: at a jump return the mean of the one-sided limits.
        const int idx = d.breakpoint_index(omega, kBreakpointTol);
        if (idx >= 0) {
            const double left = idx > 0 ? d.eval_piece(idx - 1, omega) : 0.0;
            const double right = idx < d.piece_count() ? d.eval_piece(idx, omega) : 0.0;
            return 0.5 * (left + right);
        }
    }
    return d(omega);
}

bool Envelope::derivative_jump_at(int n, double omega) const {
    if (impl_->family != EnvelopeFamily::sinc_power || n != impl_->m - 1) return false;
    return impl_->freq_derivs[0].breakpoint_index(omega, kBreakpointTol) >= 0;
}

const PiecewisePoly& Envelope::piecewise_spectrum(int n) const {
    if (impl_->family != EnvelopeFamily::sinc_power)
        throw std::logic_error("piecewise_spectrum: only sinc_power has an exact piecewise form");
    if (n < 0 || n >= impl_->m) throw std::invalid_argument("piecewise_spectrum: bad order");
    return impl_->freq_derivs[static_cast<std::size_t>(n)];
}

std::vector<double> Envelope::spectrum_breakpoints() const {
    if (impl_->family == EnvelopeFamily::sinc_power) return impl_->freq_derivs[0].breakpoints();
    return {-kPi, kPi};
}

double Envelope::freq_deriv_sq_integral(int n) const {
    if (impl_->family == EnvelopeFamily::sinc_power)
        return piecewise_spectrum(n).squared().integral();
    if (n > kMaxBumpDerivOrder)
        throw std::invalid_argument("freq_deriv_sq_integral: order too large for bump");
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-30;
    cfg.rel_tol = 1e-11;
    const auto res = integrate(
        [this, n](double w) {
            const double v = impl_->bump_freq_deriv(n, w);
            return v * v;
        },
        -kPi, kPi, cfg);
    return res.real();
}

}  // namespace superosc
