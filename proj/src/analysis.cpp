#include "superosc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "superosc/quadrature.hpp"

namespace superosc {

namespace {

constexpr double kPi = std::numbers::pi;

QuadratureConfig quad_config(const AnalysisConfig& cfg) {
    QuadratureConfig q;
    q.abs_tol = cfg.quad_abs_tol;
    q.rel_tol = cfg.quad_rel_tol;
    q.points_per_panel = cfg.points_per_panel;
    return q;
}

double golden_refine(const std::function<double(double)>& score, double lo, double hi) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = score(c), fd = score(d);
    for (int it = 0; it < 200 && (b - a) > 1e-13 * std::max(1.0, std::abs(a) + std::abs(b)); ++it) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = score(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = score(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

ErrorReport l2_error(const SuperoscSpec& spec, const AnalysisConfig& cfg) {
    const double a = spec.interval().half_width;
    const auto residual_sq = [&spec](double t) {
        const double r = synthesize_at(spec, t) - eval(spec.poly(), t);
        return r * r;
    };
    QuadratureConfig q = quad_config(cfg);
    // Tolerances apply to the squared-norm integral; square them onto it so
    // the requested accuracy holds on the l2 scale.
    q.abs_tol = cfg.quad_abs_tol * cfg.quad_abs_tol;
    const QuadratureResult res = integrate(residual_sq, -a, a, q);
    const double integral = std::max(0.0, res.real());

    ErrorReport report;
    report.interval = spec.interval();
    report.l2_error = std::sqrt(integral);
    report.quadrature_estimate_error =
        integral > 0.0 ? res.error_estimate / (2.0 * report.l2_error) : std::sqrt(res.error_estimate);
    report.panels_used = res.panels_used;
    report.reliable = res.converged &&
                      (report.quadrature_estimate_error < 0.01 * report.l2_error ||
                       (report.l2_error == 0.0 && report.quadrature_estimate_error == 0.0));
    return report;
}

SweepResult dilation_sweep(const SuperoscSpec& base, const std::vector<double>& dilations,
                           const AnalysisConfig& cfg) {
    if (dilations.empty()) throw std::invalid_argument("dilation_sweep: empty dilation list");
    for (std::size_t i = 0; i < dilations.size(); ++i) {
        if (!(dilations[i] >= 1.0))
            throw std::invalid_argument("dilation_sweep: dilations must satisfy D >= 1");
        if (i > 0 && !(dilations[i] > dilations[i - 1]))
            throw std::invalid_argument("dilation_sweep: dilations must increase strictly");
    }

    SweepResult out;
    out.points.reserve(dilations.size());
    for (double d : dilations) {
        SuperoscSpec spec(base.poly(), base.envelope(), d, base.interval());
        out.points.push_back({d, l2_error(spec, cfg)});
    }

    if (out.points.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        bool usable = true;
        for (const auto& p : out.points) {
            if (!(p.report.l2_error > 0.0)) {
                usable = false;
                break;
            }
            const double x = std::log(p.dilation), y = std::log(p.report.l2_error);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const auto n = static_cast<double>(out.points.size());
        const double var = sxx - sx * sx / n;
        if (usable && var > 0.0) out.log_slope = (sxy - sx * sy / n) / var;
    }
    return out;
}

std::vector<double> find_zeros(const SuperoscSpec& spec, double t_lo, double t_hi,
                               const AnalysisConfig& cfg) {
    if (!(t_hi > t_lo)) throw std::invalid_argument("find_zeros: need t_lo < t_hi");
    const int n = std::max(8, cfg.zero_grid_points);
    const double step = (t_hi - t_lo) / n;

    const auto f = [&spec](double t) { return synthesize_at(spec, t); };
    std::vector<double> zeros;
    auto push_zero = [&](double z) {
        if (zeros.empty() || z - zeros.back() > 16.0 * cfg.zero_bisection_tol) zeros.push_back(z);
    };

    double prev_t = t_lo;
    double prev_v = f(prev_t);
    if (prev_v == 0.0) push_zero(prev_t);
    for (int i = 1; i <= n; ++i) {
        const double t = (i == n) ? t_hi : t_lo + i * step;
        const double v = f(t);
        if (v == 0.0) {
            push_zero(t);
        } else if (prev_v != 0.0 && (prev_v < 0.0) != (v < 0.0)) {
            double a = prev_t, b = t, fa = prev_v;
            while (b - a > cfg.zero_bisection_tol) {
                const double mid = 0.5 * (a + b);
                const double fm = f(mid);
                if (fm == 0.0) {
                    a = b = mid;
                    break;
                }
                if ((fa < 0.0) != (fm < 0.0)) {
                    b = mid;
                } else {
                    a = mid;
                    fa = fm;
                }
            }
            push_zero(0.5 * (a + b));
        }
        prev_t = t;
        prev_v = v;
    }
    return zeros;
}

LocalFrequencyResult local_frequency(const SuperoscSpec& spec, double t_lo, double t_hi,
                                     const AnalysisConfig& cfg) {
    LocalFrequencyResult out;
    out.band_limit = kPi / spec.dilation();
    const std::vector<double> zeros = find_zeros(spec, t_lo, t_hi, cfg);
    if (zeros.size() < 2) return out;  // no superoscillation evidence

    out.superoscillation_evidence = true;
    out.min_frequency = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < zeros.size(); ++i) {
        const double gap = zeros[i + 1] - zeros[i];
        const double freq = kPi / gap;
        out.points.push_back({0.5 * (zeros[i] + zeros[i + 1]), freq});
        out.min_frequency = std::min(out.min_frequency, freq);
    }
    return out;
}

AmplitudePeak amplitude_growth(const SuperoscSpec& spec, const AnalysisConfig& cfg) {
    const double d = spec.dilation();
    double horizon;
    if (spec.envelope().family() == EnvelopeFamily::sinc_power) {
        horizon = cfg.amplitude_horizon_scale * d * spec.envelope().sinc_exponent();
    } else {
        // Bump transforms decay like exp(-sqrt(t/pi)); |p * e| peaks near
        // t ~ 4 N^2 pi, so pad the polynomial-growth horizon accordingly.
        const double n = spec.poly().degree();
        horizon = std::max(cfg.amplitude_horizon_scale * d * (n + 1),
                           8.0 * kPi * n * n * d + cfg.amplitude_horizon_scale * d);
    }

    const auto score = [&spec](double t) { return std::abs(synthesize_at(spec, t)); };
    const int half_points = 4000;
    const double step = horizon / half_points;
    double best_t = 0.0, best_v = score(0.0);
    for (int i = -half_points; i <= half_points; ++i) {
        const double t = i * step;
        const double v = score(t);
        if (v > best_v) {
            best_v = v;
            best_t = t;
        }
    }
    const double refined =
        golden_refine(score, std::max(-horizon, best_t - step), std::min(horizon, best_t + step));
    if (score(refined) >= best_v) {
        best_t = refined;
        best_v = score(refined);
    }

    AmplitudePeak peak;
    peak.t_max = best_t;
    peak.max_abs = best_v;
    peak.search_horizon = horizon;
    return peak;
}

DominanceReport spectrum_dominance(const SuperoscSpec& spec) {
    const Eigen::VectorXd& a = spec.poly().coeffs();
    const double d = spec.dilation();
    DominanceReport report;
    report.contributions.resize(a.size());
    for (Eigen::Index n = 0; n < a.size(); ++n) {
        if (a[n] == 0.0) {
            report.contributions[n] = 0.0;
            continue;
        }
        const double sq = spec.envelope().freq_deriv_sq_integral(static_cast<int>(n));
        report.contributions[n] =
            std::abs(a[n]) * std::pow(d, static_cast<double>(n) + 0.5) * std::sqrt(sq);
    }
    const double leading = report.contributions[a.size() - 1];
    report.ratios = report.contributions / (leading > 0.0 ? leading : 1.0);
    return report;
}

namespace {

// Frequency-side energy (1/2pi) Int |F|^2 over the support.
double frequency_energy(const SuperoscSpec& spec, const AnalysisConfig& cfg) {
    const Spectrum F(spec);
    const double d = spec.dilation();
    if (spec.envelope().family() == EnvelopeFamily::sinc_power) {
        const Eigen::VectorXd& a = spec.poly().coeffs();
        std::vector<const PiecewisePoly*> even_polys, odd_polys;
        std::vector<double> even_w, odd_w;
        double dpow = d;
        for (Eigen::Index n = 0; n < a.size(); ++n, dpow *= d) {
            if (a[n] == 0.0) continue;
            const auto* piece = &spec.envelope().piecewise_spectrum(static_cast<int>(n));
            if (n % 2 == 0) {
                even_polys.push_back(piece);
                even_w.push_back(a[n] * ((n % 4 == 0) ? 1.0 : -1.0) * dpow);
            } else {
                odd_polys.push_back(piece);
                odd_w.push_back(a[n] * ((n % 4 == 1) ? 1.0 : -1.0) * dpow);
            }
        }
        double sq = 0.0;
        if (!even_polys.empty())
            sq += PiecewisePoly::linear_combination(even_polys, even_w).squared().integral();
        if (!odd_polys.empty())
            sq += PiecewisePoly::linear_combination(odd_polys, odd_w).squared().integral();
        return sq / (2.0 * kPi * d);
    }
    QuadratureConfig q = quad_config(cfg);
    q.rel_tol = 1e-10;
    const double half = F.support_half_width();
    const QuadratureResult res = integrate(
        [&F](double w) { return std::norm(F(w)); }, -half, half, q);
    return res.real() / (2.0 * kPi);
}

// Analytic bound on Int_{|t|>T} f^2 dt for sinc_power envelopes, from
// |e(t/D)| <= (m D / (pi |t|))^m.
double sinc_energy_tail(const SuperoscSpec& spec, double T) {
    const Eigen::VectorXd& a = spec.poly().coeffs();
    const int m = spec.envelope().sinc_exponent();
    const double env_const = std::pow(m * spec.dilation() / kPi, m);
    double tail = 0.0;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        for (Eigen::Index j = 0; j < a.size(); ++j) {
            if (a[i] == 0.0 || a[j] == 0.0) continue;
            const double p = 2.0 * m - static_cast<double>(i + j) - 1.0;  // tail ~ T^-p / p
            tail += 2.0 * std::abs(a[i] * a[j]) * env_const * env_const * std::pow(T, -p) / p;
        }
    }
    return tail;
}

}  // namespace

ParsevalReport energy_parseval_check(const SuperoscSpec& spec, const AnalysisConfig& cfg) {
    ParsevalReport report;
    report.freq_energy = frequency_energy(spec, cfg);

    const double d = spec.dilation();
    const double a = spec.interval().half_width;
    const bool is_sinc = spec.envelope().family() == EnvelopeFamily::sinc_power;
    const int n_deg = spec.poly().degree();
    const bool marginal = is_sinc && spec.envelope().sinc_exponent() == n_deg + 1;
    const double cap = is_sinc ? cfg.parseval_max_horizon * d : 256.0 * d;

    const auto f_sq = [&spec](double t) {
        const double v = synthesize_at(spec, t);
        return v * v;
    };
    auto segment = [&](double lo, double hi) {
        QuadratureConfig q = quad_config(cfg);
        q.rel_tol = 1e-10;
        q.abs_tol = 1e-16 * std::max(1.0, report.freq_energy);
        q.initial_panels = std::max(4, static_cast<int>((hi - lo) / (2.0 * d)));
        return integrate(f_sq, lo, hi, q).real();
    };

    double T = std::max({8.0 * a, is_sinc ? 4.0 * d * spec.envelope().sinc_exponent() : 32.0 * d});
    T = std::min(T, cap);
    double energy = segment(-T, T);
    double last_annulus = energy;
    while (true) {
        const double tail =
            is_sinc ? sinc_energy_tail(spec, T) : 2.0 * std::abs(last_annulus);
        report.time_tail_bound = tail;
        if (tail < cfg.parseval_rel_tol * energy) break;
        if (2.0 * T > cap || (marginal && T >= 8192.0 * d)) {
            report.time_side_slow = true;
            break;
        }
        last_annulus = segment(T, 2.0 * T) + segment(-2.0 * T, -T);
        energy += last_annulus;
        T *= 2.0;
    }

    report.horizon = T;
    report.time_energy = energy;
    report.relative_gap = std::abs(report.time_energy - report.freq_energy) /
                          std::max(report.freq_energy, 1e-300);
    if (marginal) report.time_side_slow = true;
    return report;
}

}  // namespace superosc
