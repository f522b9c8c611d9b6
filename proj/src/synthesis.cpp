#include "superosc/synthesis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace superosc {

namespace {
constexpr double kPi = std::numbers::pi;
}

AdmissibilityReport admissibility_check(const Polynomial& poly, const Envelope& env) {
    AdmissibilityReport report;
    report.degree = poly.degree();
    report.max_order = env.max_poly_order();
    report.required_m = report.degree + 1;
    report.suggested_m = report.degree + 2;
    if (!report.max_order.has_value()) {
        report.ok = true;
        report.message = "degree " + std::to_string(report.degree) +
                         " vs bump envelope (unlimited admissible order): ok";
        return report;
    }
    report.ok = report.degree <= *report.max_order;
    if (report.ok) {
        report.message = "degree " + std::to_string(report.degree) + " <= max admissible order " +
                         std::to_string(*report.max_order) + ": ok";
    } else {
        report.message =
            "degree " + std::to_string(report.degree) + " exceeds max admissible order " +
            std::to_string(*report.max_order) + "; need sinc_power(m) with m >= " +
            std::to_string(report.required_m) + " (m = " + std::to_string(report.suggested_m) +
            " adds one order of time-domain decay)";
    }
    return report;
}

SuperoscSpec::SuperoscSpec(Polynomial poly, Envelope env, double dilation, Interval interval)
    : poly_(std::move(poly)), env_(std::move(env)), dilation_(dilation), interval_(interval) {
    const AdmissibilityReport report = admissibility_check(poly_, env_);
    if (!report.ok) throw std::invalid_argument("SuperoscSpec: " + report.message);
    if (!(dilation_ >= 1.0) || !std::isfinite(dilation_))
        throw std::invalid_argument("SuperoscSpec: dilation D must satisfy D >= 1");
}

double synthesize_at(const SuperoscSpec& spec, double t) {
    return eval(spec.poly(), t) * spec.envelope().eval_time(t / spec.dilation());
}

std::function<double(double)> synthesize(const SuperoscSpec& spec) {
    return [spec](double t) { return synthesize_at(spec, t); };
}

Spectrum::Spectrum(const SuperoscSpec& spec)
    : env_(spec.envelope()),
      coeffs_(spec.poly().coeffs()),
      dilation_(spec.dilation()),
      support_half_width_(kPi / spec.dilation()) {
    bool any_even = false, any_odd = false;
    for (Eigen::Index n = 0; n < coeffs_.size(); ++n) {
        if (coeffs_[n] == 0.0) continue;
        (n % 2 == 0 ? any_even : any_odd) = true;
    }
    parity_ = any_even && any_odd ? SpectrumParity::mixed
              : any_odd           ? SpectrumParity::odd_imaginary
                                  : SpectrumParity::even_real;
    for (double b : env_.spectrum_breakpoints()) breakpoints_.push_back(b / dilation_);
}

double Spectrum::real_part(double omega) const {
    if (std::abs(omega) > support_half_width_) return 0.0;
    if (parity_ == SpectrumParity::odd_imaginary) return 0.0;
    double acc = 0.0;
    double dpow = dilation_;  // D^(n+1)
    for (Eigen::Index n = 0; n < coeffs_.size(); ++n, dpow *= dilation_) {
        if (n % 2 != 0 || coeffs_[n] == 0.0) continue;
        const double sign = (n % 4 == 0) ? 1.0 : -1.0;  // i^n for even n
        acc += coeffs_[n] * sign * dpow * env_.eval_freq_deriv(static_cast<int>(n), dilation_ * omega);
    }
    return acc;
}

double Spectrum::imag_part(double omega) const {
    if (std::abs(omega) > support_half_width_) return 0.0;
    if (parity_ == SpectrumParity::even_real) return 0.0;
    double acc = 0.0;
    double dpow = dilation_;
    for (Eigen::Index n = 0; n < coeffs_.size(); ++n, dpow *= dilation_) {
        if (n % 2 != 1 || coeffs_[n] == 0.0) continue;
        const double sign = (n % 4 == 1) ? 1.0 : -1.0;  // i^n = ±i for odd n
        acc += coeffs_[n] * sign * dpow * env_.eval_freq_deriv(static_cast<int>(n), dilation_ * omega);
    }
    return acc;
}

std::complex<double> Spectrum::operator()(double omega) const {
    return {real_part(omega), imag_part(omega)};
}

Spectrum spectrum(const SuperoscSpec& spec) { return Spectrum(spec); }

}  // namespace superosc
