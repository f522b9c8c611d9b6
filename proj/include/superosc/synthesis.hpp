#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "superosc/envelope.hpp"
#include "superosc/polynomial.hpp"

namespace superosc {

struct AdmissibilityReport {
    bool ok = false;
    int degree = 0;
    std::optional<int> max_order;  // envelope's admissible order; nullopt = unlimited
    int required_m = 0;            // minimal sinc exponent for this degree (N+1)
    int suggested_m = 0;           // N+2, one extra order of time-domain decay
    std::string message;
};

/// ok iff degree(poly) <= max_poly_order(env); the report names the minimal
/// and suggested sinc exponents either way.
AdmissibilityReport admissibility_check(const Polynomial& poly, const Envelope& env);

/// The full recipe f(t) = p(t) * e(t/D) with superoscillation interval
/// (-a, a). Construction enforces the admissibility rule and D >= 1.
class SuperoscSpec {
public:
    SuperoscSpec(Polynomial poly, Envelope env, double dilation, Interval interval);

    const Polynomial& poly() const { return poly_; }
    const Envelope& envelope() const { return env_; }
    double dilation() const { return dilation_; }
    const Interval& interval() const { return interval_; }

private:
    Polynomial poly_;
    Envelope env_;
    double dilation_;
    Interval interval_;
};

/// Pointwise f(t) = p(t) * e(t/D).
double synthesize_at(const SuperoscSpec& spec, double t);

/// The same as an evaluable closure.
std::function<double(double)> synthesize(const SuperoscSpec& spec);

enum class SpectrumParity { even_real, odd_imaginary, mixed };

/// Exact transform F(omega) = sum_n a_n i^n D^(n+1) E^(n)(D omega) on
/// [-pi/D, pi/D], zero outside. Real and imaginary parts come from the even
/// and odd coefficients respectively, so parity is exact by bookkeeping.
class Spectrum {
public:
    explicit Spectrum(const SuperoscSpec& spec);

    double support_half_width() const { return support_half_width_; }
    SpectrumParity parity() const { return parity_; }
    /// Dilated envelope breakpoints (includes the support edges), sorted.
    const std::vector<double>& breakpoints() const { return breakpoints_; }

    std::complex<double> operator()(double omega) const;
    double real_part(double omega) const;
    double imag_part(double omega) const;

    const Envelope& envelope() const { return env_; }
    const Eigen::VectorXd& poly_coeffs() const { return coeffs_; }
    double dilation() const { return dilation_; }

private:
    Envelope env_;
    Eigen::VectorXd coeffs_;
    double dilation_;
    double support_half_width_;
    SpectrumParity parity_;
    std::vector<double> breakpoints_;
};

Spectrum spectrum(const SuperoscSpec& spec);

}  // namespace superosc
