#include "qslab/analysis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace qslab {

namespace {

constexpr double kLog3Of2 = 0.63092975357145743710;  // ln 2 / ln 3

void check_s(std::size_t s) {
    if (s == 0) throw std::invalid_argument("s must be >= 1");
}

}  // namespace

MeanVariance mean_unbiased_variance(std::span<const double> xs) {
    if (xs.size() < 2) throw std::invalid_argument("mean_unbiased_variance: need at least 2 samples");
    const double n = static_cast<double>(xs.size());
    const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return {mean, ss / (n - 1.0)};
}

FitResult fit_nlnn(std::span<const SizePoint> points, Weighting weighting) {
    if (points.empty()) throw std::invalid_argument("fit_nlnn: no points");
    for (const auto& p : points) {
        if (!(p.n >= 2.0)) throw std::invalid_argument("fit_nlnn: sizes must be >= 2");
    }
    const bool distinct = std::any_of(points.begin(), points.end(),
                                      [&](const SizePoint& p) { return p.n != points.front().n; });
    if (!distinct) throw std::invalid_argument("fit_nlnn: need at least two distinct sizes");

    const auto rows = static_cast<Eigen::Index>(points.size());
    Eigen::MatrixXd x(rows, 2);
    Eigen::VectorXd y(rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto& p = points[static_cast<std::size_t>(i)];
        const double w = weighting == Weighting::Relative ? 1.0 / p.n : 1.0;
        x(i, 0) = w * p.n * std::log(p.n);
        x(i, 1) = w * p.n;
        y(i) = w * p.y;
    }

    // Column scaling keeps the unweighted design (entries up to ~1e7) well conditioned.
    const Eigen::Vector2d scale(x.col(0).norm(), x.col(1).norm());
    const Eigen::MatrixXd xs = x * scale.cwiseInverse().asDiagonal();
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(xs);
    const Eigen::Matrix2d r = qr.matrixQR().topRows(2).triangularView<Eigen::Upper>();
    if (std::abs(r(1, 1)) < 1e-12 * std::abs(r(0, 0))) {
        throw std::invalid_argument("fit_nlnn: degenerate design");
    }
    const Eigen::Vector2d coef = qr.solve(y).cwiseQuotient(scale);

    FitResult out;
    out.a = coef(0);
    out.b = coef(1);

    const Eigen::VectorXd weighted_residual = y - x * coef;
    double raw_ss = 0.0;
    for (const auto& p : points) {
        const double r0 = p.y - (out.a * p.n * std::log(p.n) + out.b * p.n);
        raw_ss += r0 * r0;
    }
    out.residual_rms = std::sqrt(raw_ss / static_cast<double>(points.size()));

    const auto dof = static_cast<double>(points.size()) - 2.0;
    if (dof <= 0.0) {
        out.a_stderr = out.b_stderr = std::numeric_limits<double>::infinity();
        return out;
    }
    const double sigma2 = weighted_residual.squaredNorm() / dof;
    // cov = sigma^2 (X^T X)^-1 = sigma^2 D^-1 R^-1 R^-T D^-1 for X = Q R D
    const Eigen::Matrix2d rinv = r.inverse();
    const Eigen::Matrix2d cov_scaled = rinv * rinv.transpose();
    out.a_stderr = std::sqrt(sigma2 * cov_scaled(0, 0)) / scale(0);
    out.b_stderr = std::sqrt(sigma2 * cov_scaled(1, 1)) / scale(1);
    return out;
}

double entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("entropy: p must lie in [0, 1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log(p) - (1.0 - p) * std::log1p(-p);
}

double tbfprt_worst_coeff_upper(std::size_t s, double c1) {
    check_s(s);
    const auto sd = static_cast<double>(s);
    return (1.0 + c1 / sd) / entropy(0.3 / sd);
}

double tbfprt_worst_coeff_lower(std::size_t s, double c1) {
    check_s(s);
    return 1.443 * (1.0 + c1 / static_cast<double>(s));
}

double pmed3l_depth_estimate(double n, std::size_t s) {
    check_s(s);
    if (!(n >= 2.0)) throw std::invalid_argument("pmed3l_depth_estimate: n must be >= 2");
    return static_cast<double>(s) * std::pow(n, 1.0 - kLog3Of2) * std::log(n);
}

double pmed3l_best_coeff(std::size_t s) {
    check_s(s);
    return 1.443 + 1.924 / static_cast<double>(s);
}

}  // namespace qslab
