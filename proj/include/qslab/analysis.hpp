#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>

namespace qslab {

/// One (method, s, n, trial) measurement.
struct TrialRecord {
    std::string method;
    std::size_t s = 1;
    std::size_t n = 0;
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::uint64_t comparisons = 0;
    std::uint64_t swaps = 0;
    std::uint64_t max_depth = 0;

    friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct MeanVariance {
    double mean = 0.0;
    double variance = 0.0;  // divisor N - 1
};

/// Throws std::invalid_argument for fewer than two samples.
MeanVariance mean_unbiased_variance(std::span<const double> xs);

/// Mean comparison count y measured at size n.
struct SizePoint {
    double n = 0.0;
    double y = 0.0;
};

enum class Weighting : std::uint8_t {
    // minimise sum ((y - model) / n)^2: every size carries the same relative weight
    Relative,
    // plain least squares on y; dominated by the largest sizes
    Unweighted,
};

/// Coefficients of y ~ a n ln n + b n.
struct FitResult {
    double a = 0.0;
    double b = 0.0;
    double a_stderr = 0.0;
    double b_stderr = 0.0;
    double residual_rms = 0.0;  // in units of y, unweighted
};

/// Least-squares fit of a n ln n + b n. Needs at least two distinct sizes, all >= 2;
/// throws std::invalid_argument otherwise. With exactly two points the standard errors
/// are reported as +infinity.
FitResult fit_nlnn(std::span<const SizePoint> points, Weighting weighting = Weighting::Relative);

inline constexpr double kInvLn2 = 1.0 / std::numbers::ln2;

/// Natural-log binary entropy, H(0) = H(1) = 0. Throws std::invalid_argument outside [0, 1].
double entropy(double p);

/// Worst-case n ln n coefficient bound for thinned BFPRT: (1 + c1/s) / H(0.3/s).
double tbfprt_worst_coeff_upper(std::size_t s, double c1);

/// Companion lower estimate 1.443 (1 + c1/s).
double tbfprt_worst_coeff_lower(std::size_t s, double c1);

/// Worst-case recursion depth of quicksort with thinned pseudo-median of 3^L:
/// s n^(1 - log3 2) ln n.
double pmed3l_depth_estimate(double n, std::size_t s);

/// Best-case n ln n coefficient for thinned pseudo-median of 3^L: 1.443 + 1.924/s.
double pmed3l_best_coeff(std::size_t s);

}  // namespace qslab
