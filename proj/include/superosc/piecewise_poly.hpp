#pragma once

#include <vector>

#include <Eigen/Dense>

namespace superosc {

/// Piecewise polynomial with compact support. Piece i covers
/// [breakpoints[i], breakpoints[i+1]] with coefficients in the local variable
/// (x - breakpoints[i]); the function is identically zero outside
/// [breakpoints.front(), breakpoints.back()].
class PiecewisePoly {
public:
    PiecewisePoly() = default;
    PiecewisePoly(std::vector<double> breakpoints, std::vector<Eigen::VectorXd> pieces);

    static PiecewisePoly rectangle(double half_width, double height);

    double operator()(double x) const;

    /// One-sided evaluation of piece i extended to x (for limits at jumps).
    double eval_piece(int i, double x) const;

    int piece_count() const { return static_cast<int>(pieces_.size()); }
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const Eigen::VectorXd& piece(int i) const { return pieces_[static_cast<std::size_t>(i)]; }
    double support_min() const { return breakpoints_.front(); }
    double support_max() const { return breakpoints_.back(); }

    /// Index of the breakpoint matching x within tol, or -1.
    int breakpoint_index(double x, double tol) const;

    PiecewisePoly derivative() const;
    PiecewisePoly squared() const;

    /// Integral over the full support.
    double integral() const;
    /// Integral over [a, b] (clipped to the support), exact.
    double integral(double a, double b) const;

    /// scale * (f * rect)(x) where rect has the given half-width and height:
    /// scale * height * Int_{x-h}^{x+h} f. Exact; breakpoints of the result
    /// are the inputs' shifted by +-h.
    PiecewisePoly convolve_rectangle(double half_width, double height, double scale) const;

    /// sum_k weights[k] * polys[k]; all inputs must share one breakpoint grid.
    static PiecewisePoly linear_combination(const std::vector<const PiecewisePoly*>& polys,
                                            const std::vector<double>& weights);

private:
    std::vector<double> breakpoints_;
    std::vector<Eigen::VectorXd> pieces_;
};

}  // namespace superosc
