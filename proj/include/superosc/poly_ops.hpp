#pragma once

#include <Eigen/Dense>

// Low-level operations on raw monomial coefficient vectors (ascending powers).
// Shared by the piecewise-polynomial machinery and the bump-transform
// derivative recursion, where degrees exceed the cap enforced by Polynomial.
namespace superosc::poly_ops {

inline double eval(const Eigen::VectorXd& c, double x) {
    double acc = 0.0;
    for (Eigen::Index i = c.size() - 1; i >= 0; --i) acc = acc * x + c[i];
    return acc;
}

inline Eigen::VectorXd trim(const Eigen::VectorXd& c) {
    Eigen::Index n = c.size();
    while (n > 1 && c[n - 1] == 0.0) --n;
    return c.head(n);
}

inline Eigen::VectorXd add(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(std::max(a.size(), b.size()));
    out.head(a.size()) = a;
    out.head(b.size()) += b;
    return out;
}

inline Eigen::VectorXd sub(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(std::max(a.size(), b.size()));
    out.head(a.size()) = a;
    out.head(b.size()) -= b;
    return out;
}

inline Eigen::VectorXd mul(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(a.size() + b.size() - 1);
    for (Eigen::Index i = 0; i < a.size(); ++i)
        for (Eigen::Index j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline Eigen::VectorXd derivative(const Eigen::VectorXd& c) {
    if (c.size() <= 1) return Eigen::VectorXd::Zero(1);
    Eigen::VectorXd out(c.size() - 1);
    for (Eigen::Index i = 1; i < c.size(); ++i) out[i - 1] = c[i] * static_cast<double>(i);
    return out;
}

// Antiderivative with constant term `c0`.
inline Eigen::VectorXd antiderivative(const Eigen::VectorXd& c, double c0 = 0.0) {
    Eigen::VectorXd out(c.size() + 1);
    out[0] = c0;
    for (Eigen::Index i = 0; i < c.size(); ++i) out[i + 1] = c[i] / static_cast<double>(i + 1);
    return out;
}

// Coefficients of p(u + delta) given those of p(u).
inline Eigen::VectorXd taylor_shift(const Eigen::VectorXd& c, double delta) {
    const Eigen::Index n = c.size();
    Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        double binom = 1.0;  // C(k, j) * delta^(k-j), built from j = k downwards
        double dp = 1.0;
        out[k] += c[k];
        for (Eigen::Index j = k - 1; j >= 0; --j) {
            binom *= static_cast<double>(j + 1) / static_cast<double>(k - j);
            dp *= delta;
            out[j] += c[k] * binom * dp;
        }
    }
    return out;
}

}  // namespace superosc::poly_ops
