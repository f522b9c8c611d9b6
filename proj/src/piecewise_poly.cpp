#include "superosc/piecewise_poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "superosc/poly_ops.hpp"

namespace superosc {

namespace {

// Continuous antiderivative of a piecewise polynomial: per-piece local
// antiderivatives plus the cumulative integral up to each left breakpoint.
struct Antiderivative {
    const std::vector<double>* breakpoints;
    std::vector<Eigen::VectorXd> pieces;  // local coefficients, constant term = cumulative
    double total;

    // Polynomial (in u = x - origin) representing A(x + offset) on a window
    // that lies inside a single region; `witness` is any interior point of
    // the shifted window.
    Eigen::VectorXd shifted_local(double witness, double origin, double offset) const {
        const auto& bp = *breakpoints;
        if (witness <= bp.front()) return Eigen::VectorXd::Zero(1);
        if (witness >= bp.back()) {
            Eigen::VectorXd c(1);
            c[0] = total;
            return c;
        }
        const auto it = std::upper_bound(bp.begin(), bp.end(), witness);
        const auto i = static_cast<std::size_t>(std::distance(bp.begin(), it)) - 1;
        return poly_ops::taylor_shift(pieces[i], origin + offset - bp[i]);
    }
};

Antiderivative make_antiderivative(const std::vector<double>& breakpoints,
                                   const std::vector<Eigen::VectorXd>& pieces) {
    Antiderivative anti;
    anti.breakpoints = &breakpoints;
    anti.pieces.reserve(pieces.size());
    double cum = 0.0;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        anti.pieces.push_back(poly_ops::antiderivative(pieces[i], cum));
        cum = poly_ops::eval(anti.pieces.back(), breakpoints[i + 1] - breakpoints[i]);
    }
    anti.total = cum;
    return anti;
}

}  // namespace

PiecewisePoly::PiecewisePoly(std::vector<double> breakpoints, std::vector<Eigen::VectorXd> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (breakpoints_.size() < 2 || pieces_.size() + 1 != breakpoints_.size())
        throw std::invalid_argument("PiecewisePoly: need K+1 breakpoints for K pieces");
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
        if (!(breakpoints_[i] < breakpoints_[i + 1]))
            throw std::invalid_argument("PiecewisePoly: breakpoints must increase strictly");
}

PiecewisePoly PiecewisePoly::rectangle(double half_width, double height) {
    if (!(half_width > 0.0)) throw std::invalid_argument("rectangle: half width must be positive");
    Eigen::VectorXd c(1);
    c[0] = height;
    return PiecewisePoly({-half_width, half_width}, {c});
}

double PiecewisePoly::operator()(double x) const {
    if (x < breakpoints_.front() || x > breakpoints_.back()) return 0.0;
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    std::size_t i = (it == breakpoints_.begin())
                        ? 0
                        : static_cast<std::size_t>(std::distance(breakpoints_.begin(), it)) - 1;
    if (i >= pieces_.size()) i = pieces_.size() - 1;  // x at the right support edge
    return poly_ops::eval(pieces_[i], x - breakpoints_[i]);
}

double PiecewisePoly::eval_piece(int i, double x) const {
    return poly_ops::eval(pieces_[static_cast<std::size_t>(i)],
                          x - breakpoints_[static_cast<std::size_t>(i)]);
}

int PiecewisePoly::breakpoint_index(double x, double tol) const {
    for (std::size_t i = 0; i < breakpoints_.size(); ++i)
        if (std::abs(x - breakpoints_[i]) <= tol) return static_cast<int>(i);
    return -1;
}

PiecewisePoly PiecewisePoly::derivative() const {
    std::vector<Eigen::VectorXd> dp;
    dp.reserve(pieces_.size());
    for (const auto& p : pieces_) dp.push_back(poly_ops::derivative(p));
    return PiecewisePoly(breakpoints_, std::move(dp));
}

PiecewisePoly PiecewisePoly::squared() const {
    std::vector<Eigen::VectorXd> sq;
    sq.reserve(pieces_.size());
    for (const auto& p : pieces_) sq.push_back(poly_ops::mul(p, p));
    return PiecewisePoly(breakpoints_, std::move(sq));
}

double PiecewisePoly::integral() const {
    return make_antiderivative(breakpoints_, pieces_).total;
}

double PiecewisePoly::integral(double a, double b) const {
    if (!(b > a)) return 0.0;
    const Antiderivative anti = make_antiderivative(breakpoints_, pieces_);
    auto value_at = [&](double x) {
        if (x <= breakpoints_.front()) return 0.0;
        if (x >= breakpoints_.back()) return anti.total;
        auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
        const auto i = static_cast<std::size_t>(std::distance(breakpoints_.begin(), it)) - 1;
        return poly_ops::eval(anti.pieces[i], x - breakpoints_[i]);
    };
    return value_at(b) - value_at(a);
}

PiecewisePoly PiecewisePoly::convolve_rectangle(double half_width, double height,
                                                double scale) const {
    const double h = half_width;
    if (!(h > 0.0)) throw std::invalid_argument("convolve_rectangle: half width must be positive");

    std::vector<double> candidates;
    candidates.reserve(2 * breakpoints_.size());
    for (double b : breakpoints_) {
        candidates.push_back(b - h);
        candidates.push_back(b + h);
    }
    std::sort(candidates.begin(), candidates.end());
    const double tol = 1e-12 * std::max(1.0, std::abs(candidates.back()));
    std::vector<double> bps;
    for (double c : candidates)
        if (bps.empty() || c - bps.back() > tol) bps.push_back(c);

    const Antiderivative anti = make_antiderivative(breakpoints_, pieces_);
    const double factor = scale * height;
    std::vector<Eigen::VectorXd> pieces;
    pieces.reserve(bps.size() - 1);
    for (std::size_t j = 0; j + 1 < bps.size(); ++j) {
        const double mid = 0.5 * (bps[j] + bps[j + 1]);
        const Eigen::VectorXd plus = anti.shifted_local(mid + h, bps[j], h);
        const Eigen::VectorXd minus = anti.shifted_local(mid - h, bps[j], -h);
        pieces.push_back(factor * poly_ops::sub(plus, minus));
    }
    return PiecewisePoly(std::move(bps), std::move(pieces));
}

PiecewisePoly PiecewisePoly::linear_combination(const std::vector<const PiecewisePoly*>& polys,
                                                const std::vector<double>& weights) {
    if (polys.empty() || polys.size() != weights.size())
        throw std::invalid_argument("linear_combination: need matching non-empty inputs");
    const auto& grid = polys.front()->breakpoints_;
    for (const auto* p : polys) {
        if (p->breakpoints_.size() != grid.size())
            throw std::invalid_argument("linear_combination: breakpoint grids differ");
        for (std::size_t i = 0; i < grid.size(); ++i)
            if (std::abs(p->breakpoints_[i] - grid[i]) > 1e-12)
                throw std::invalid_argument("linear_combination: breakpoint grids differ");
    }
    std::vector<Eigen::VectorXd> pieces;
    pieces.reserve(grid.size() - 1);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        Eigen::VectorXd acc = weights[0] * polys[0]->pieces_[i];
        for (std::size_t k = 1; k < polys.size(); ++k)
            acc = poly_ops::add(acc, (weights[k] * polys[k]->pieces_[i]).eval());
        pieces.push_back(std::move(acc));
    }
    return PiecewisePoly(grid, std::move(pieces));
}

}  // namespace superosc
