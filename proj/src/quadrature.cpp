#include "superosc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace superosc {

namespace {

// Newton iteration on the Legendre polynomial recurrence.
GaussRule compute_gauss_rule(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-like initial guess
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

template <typename T, typename F>
T composite_pass(const F& f, double a, double b, int panels, const GaussRule& rule) {
    const double width = (b - a) / panels;
    T total{};
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * width;
        const double mid = lo + 0.5 * width;
        const double scale = 0.5 * width;
        T acc{};
        for (Eigen::Index k = 0; k < rule.nodes.size(); ++k)
            acc += rule.weights[k] * f(mid + scale * rule.nodes[k]);
        total += scale * acc;
    }
    return total;
}

template <typename T, typename F>
QuadratureResult adaptive(const F& f, double a, double b, const QuadratureConfig& cfg) {
    QuadratureResult out;
    if (!(b > a)) {
        out.converged = true;
        return out;
    }
    const GaussRule& rule = gauss_legendre(cfg.points_per_panel);
    int panels = std::max(1, cfg.initial_panels);
    T prev = composite_pass<T>(f, a, b, panels, rule);
    for (int d = 0; d < cfg.max_doublings; ++d) {
        panels *= 2;
        const T cur = composite_pass<T>(f, a, b, panels, rule);
        const double diff = std::abs(cur - prev);
        out.value = cur;
        out.error_estimate = diff;
        out.panels_used = panels;
        if (diff <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(cur))) {
            out.converged = true;
            return out;
        }
        prev = cur;
    }
    return out;  // converged stays false
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
    static std::map<int, GaussRule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gauss_rule(n)).first;
    return it->second;
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& cfg) {
    return adaptive<double>(f, a, b, cfg);
}

QuadratureResult integrate_complex(const std::function<std::complex<double>(double)>& f, double a,
                                   double b, const QuadratureConfig& cfg) {
    return adaptive<std::complex<double>>(f, a, b, cfg);
}

QuadratureResult integrate_piecewise(const std::function<std::complex<double>(double)>& f,
                                     double a, double b, const std::vector<double>& breakpoints,
                                     const QuadratureConfig& cfg) {
    std::vector<double> cuts;
    cuts.push_back(a);
    for (double c : breakpoints)
        if (c > a && c < b) cuts.push_back(c);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());

    QuadratureResult out;
    out.converged = true;
    const auto npieces = static_cast<double>(cuts.size() - 1);
    QuadratureConfig piece_cfg = cfg;
    piece_cfg.abs_tol = cfg.abs_tol / npieces;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i + 1] - cuts[i] < 1e-14) continue;
        const QuadratureResult piece = adaptive<std::complex<double>>(f, cuts[i], cuts[i + 1], piece_cfg);
        out.value += piece.value;
        out.error_estimate += piece.error_estimate;
        out.panels_used += piece.panels_used;
        out.converged = out.converged && piece.converged;
    }
    return out;
}

}  // namespace superosc
