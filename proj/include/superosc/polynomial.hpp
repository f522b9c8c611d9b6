#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace superosc {

/// Real polynomial in the monomial basis, coefficients stored ascending in
/// power of t. Trailing zero coefficients are trimmed on construction so the
/// leading coefficient is nonzero; the zero polynomial is the singleton [0].
class Polynomial {
public:
    static constexpr int kMaxDegree = 30;
    // Monomial conditioning degrades past this; fits report a warning.
    static constexpr int kConditioningWarningDegree = 15;

    Polynomial() : coeffs_(Eigen::VectorXd::Zero(1)) {}
    explicit Polynomial(Eigen::VectorXd coeffs);
    Polynomial(std::initializer_list<double> coeffs);

    const Eigen::VectorXd& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_.size() == b.coeffs_.size() && a.coeffs_ == b.coeffs_;
    }

private:
    Eigen::VectorXd coeffs_;
};

/// Symmetric interval (-a, a) centered on t = 0.
struct Interval {
    double half_width;
    explicit Interval(double a);
};

/// Horner evaluation of p at t.
double eval(const Polynomial& p, double t);

/// Formal derivative; the derivative of a constant is the zero polynomial.
Polynomial derivative(const Polynomial& p);

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(double c, const Polynomial& p);

/// The degree-3 prototype (3*sqrt(3)/2) * ((t/s)^3 - t/s): zeros at -s, 0, s
/// and extremal magnitude exactly 1 on (-s, s).
Polynomial cubic_prototype(double s);

/// leading * prod_k (t/s - r_k). Expansion convolves the linear factors in
/// ascending order of |root|. An empty root list yields the constant
/// polynomial [leading].
Polynomial from_roots(const std::vector<double>& roots, double scale, double leading);

struct FitResult {
    Polynomial poly;
    double residual_rms = 0.0;  // root-mean-square residual over the samples
    bool conditioning_warning = false;
};

/// Least-squares fit of degree <= `degree` to (t, value) samples taken inside
/// `domain`. Throws on rank-deficient designs (duplicate abscissae, degree too
/// large for the sample count).
FitResult fit_polynomial(const std::vector<std::pair<double, double>>& samples, int degree,
                         const Interval& domain);

}  // namespace superosc
