#include "superosc/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "superosc/poly_ops.hpp"

namespace superosc {

namespace {

Eigen::VectorXd normalized(Eigen::VectorXd coeffs) {
    if (coeffs.size() == 0) return Eigen::VectorXd::Zero(1);
    if (!coeffs.allFinite()) throw std::invalid_argument("Polynomial: coefficients must be finite");
    Eigen::Index n = coeffs.size();
    while (n > 1 && coeffs[n - 1] == 0.0) --n;
    if (n - 1 > Polynomial::kMaxDegree)
        throw std::invalid_argument("Polynomial: degree " + std::to_string(n - 1) +
                                    " exceeds the supported cap " +
                                    std::to_string(Polynomial::kMaxDegree));
    return coeffs.head(n).eval();
}

}  // namespace

Polynomial::Polynomial(Eigen::VectorXd coeffs) : coeffs_(normalized(std::move(coeffs))) {}

Polynomial::Polynomial(std::initializer_list<double> coeffs)
    : Polynomial(Eigen::Map<const Eigen::VectorXd>(coeffs.begin(),
                                                   static_cast<Eigen::Index>(coeffs.size()))) {}

Interval::Interval(double a) : half_width(a) {
    if (!(a > 0.0) || !std::isfinite(a))
        throw std::invalid_argument("Interval: half width must be positive and finite");
}

double eval(const Polynomial& p, double t) { return poly_ops::eval(p.coeffs(), t); }

Polynomial derivative(const Polynomial& p) { return Polynomial(poly_ops::derivative(p.coeffs())); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return Polynomial(poly_ops::add(a.coeffs(), b.coeffs()));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return Polynomial(poly_ops::sub(a.coeffs(), b.coeffs()));
}

Polynomial operator*(double c, const Polynomial& p) {
    return Polynomial((c * p.coeffs()).eval());
}

Polynomial cubic_prototype(double s) {
    if (!(s > 0.0) || !std::isfinite(s))
        throw std::invalid_argument("cubic_prototype: scale s must be positive");
    const double amp = 1.5 * std::sqrt(3.0);
    Eigen::VectorXd c = Eigen::VectorXd::Zero(4);
    c[1] = -amp / s;
    c[3] = amp / (s * s * s);
    return Polynomial(std::move(c));
}

Polynomial from_roots(const std::vector<double>& roots, double scale, double leading) {
    if (!(scale > 0.0) || !std::isfinite(scale))
        throw std::invalid_argument("from_roots: scale s must be positive");
    for (double r : roots)
        if (!std::isfinite(r)) throw std::invalid_argument("from_roots: roots must be finite");
    if (static_cast<int>(roots.size()) > Polynomial::kMaxDegree)
        throw std::invalid_argument("from_roots: too many roots (degree cap " +
                                    std::to_string(Polynomial::kMaxDegree) + ")");

    std::vector<double> ordered = roots;
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](double a, double b) { return std::abs(a) < std::abs(b); });

    Eigen::VectorXd acc(1);
    acc[0] = leading;
    Eigen::VectorXd factor(2);
    for (double r : ordered) {
        factor[0] = -r;
        factor[1] = 1.0 / scale;
        acc = poly_ops::mul(acc, factor);
    }
    return Polynomial(std::move(acc));
}

FitResult fit_polynomial(const std::vector<std::pair<double, double>>& samples, int degree,
                         const Interval& domain) {
    if (degree < 0) throw std::invalid_argument("fit_polynomial: degree must be >= 0");
    if (degree > Polynomial::kMaxDegree)
        throw std::invalid_argument("fit_polynomial: degree exceeds the supported cap " +
                                    std::to_string(Polynomial::kMaxDegree));
    const auto n = static_cast<Eigen::Index>(samples.size());
    if (n < degree + 1)
        throw std::invalid_argument("fit_polynomial: need at least degree+1 samples");

    const double a = domain.half_width;
    Eigen::MatrixXd design(n, degree + 1);
    Eigen::VectorXd rhs(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& [t, value] = samples[static_cast<std::size_t>(i)];
        if (!std::isfinite(t) || !std::isfinite(value))
            throw std::invalid_argument("fit_polynomial: samples must be finite");
        if (std::abs(t) > a * (1.0 + 1e-12))
            throw std::invalid_argument("fit_polynomial: sample abscissa outside the interval");
        double power = 1.0;
        for (int j = 0; j <= degree; ++j) {
            design(i, j) = power;
            power *= t;
        }
        rhs[i] = value;
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    qr.setThreshold(1e-12);
    if (qr.rank() < degree + 1)
        throw std::invalid_argument(
            "fit_polynomial: rank-deficient design (duplicate abscissae or degree too large for "
            "the sample set)");
    const Eigen::VectorXd coeffs = qr.solve(rhs);
    const double rms = std::sqrt((design * coeffs - rhs).squaredNorm() / static_cast<double>(n));

    FitResult out;
    out.poly = Polynomial(coeffs);
    out.residual_rms = rms;
    out.conditioning_warning = degree > Polynomial::kConditioningWarningDegree;
    return out;
}

}  // namespace superosc
