#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "superosc/synthesis.hpp"

namespace superosc {

struct AnalysisConfig {
    double quad_abs_tol = 1e-10;
    double quad_rel_tol = 1e-8;
    int points_per_panel = 32;
    int zero_grid_points = 2000;       // sign-change scan resolution
    double zero_bisection_tol = 1e-12;
    double amplitude_horizon_scale = 20.0;  // horizon = scale * D * m for sinc_power
    double parseval_rel_tol = 1e-8;
    double parseval_max_horizon = 1 << 16;
};

/// L2 error of Eq.-style norm (Int_{-a}^{a} [f - p]^2 dt)^(1/2).
struct ErrorReport {
    double l2_error = 0.0;
    double quadrature_estimate_error = 0.0;
    Interval interval{1.0};
    bool reliable = false;  // quadrature error below 1% of the value
    int panels_used = 0;
};

ErrorReport l2_error(const SuperoscSpec& spec, const AnalysisConfig& cfg = {});

struct SweepPoint {
    double dilation;
    ErrorReport report;
};

struct SweepResult {
    std::vector<SweepPoint> points;
    /// Fitted slope of log(error) vs log(D); absent for a single point.
    std::optional<double> log_slope;
};

/// Re-synthesizes the spec at each dilation and measures the shape error.
SweepResult dilation_sweep(const SuperoscSpec& base, const std::vector<double>& dilations,
                           const AnalysisConfig& cfg = {});

/// Sign-change zeros of f in [t_lo, t_hi]: grid scan plus bisection.
/// Tangential (non-crossing) zeros are out of scope.
std::vector<double> find_zeros(const SuperoscSpec& spec, double t_lo, double t_hi,
                               const AnalysisConfig& cfg = {});

struct LocalFrequencyPoint {
    double midpoint;
    double frequency;  // pi / zero gap (half-period convention)
};

struct LocalFrequencyResult {
    std::vector<LocalFrequencyPoint> points;
    bool superoscillation_evidence = false;  // false when fewer than two zeros
    double band_limit = 0.0;                 // pi / D, the spectrum support edge
    double min_frequency = 0.0;              // 0 when no evidence
};

LocalFrequencyResult local_frequency(const SuperoscSpec& spec, double t_lo, double t_hi,
                                     const AnalysisConfig& cfg = {});

struct AmplitudePeak {
    double t_max = 0.0;
    double max_abs = 0.0;
    double search_horizon = 0.0;
};

/// Global maximum of |f|: dense grid scan over the decay-justified horizon,
/// refined by golden-section search.
AmplitudePeak amplitude_growth(const SuperoscSpec& spec, const AnalysisConfig& cfg = {});

/// L2 norms of the per-order spectrum terms a_n i^n D^(n+1) E^(n)(D omega).
struct DominanceReport {
    Eigen::VectorXd contributions;  // c_n, n = 0..N
    Eigen::VectorXd ratios;         // c_n / c_N
};

DominanceReport spectrum_dominance(const SuperoscSpec& spec);

struct ParsevalReport {
    double time_energy = 0.0;
    double freq_energy = 0.0;
    double relative_gap = 0.0;
    bool time_side_slow = false;  // marginal decay (m = N+1) or capped horizon;
                                  // the frequency side is then authoritative
    double time_tail_bound = 0.0;
    double horizon = 0.0;
};

/// Int f^2 dt (adaptively extended horizon, analytic tail bound) against
/// (1/2pi) Int |F|^2 domega (exact piecewise integral for sinc_power
/// envelopes, quadrature for bump).
ParsevalReport energy_parseval_check(const SuperoscSpec& spec, const AnalysisConfig& cfg = {});

}  // namespace superosc
