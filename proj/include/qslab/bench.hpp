#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qslab/analysis.hpp"
#include "qslab/generators.hpp"
#include "qslab/sort_core.hpp"

namespace qslab {

// Error classes map one-to-one onto CLI exit codes.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InsufficientData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kCsvHeader = "method,s,n,trial,seed,comparisons,swaps,max_depth";

/// A strategy plus its thinning parameter. Text form is NAME or NAME:s, e.g. "TBfprt:40".
struct MethodSpec {
    Strategy strategy = Strategy::Med3;
    std::size_t s = 1;

    [[nodiscard]] std::string label() const;
    friend bool operator==(const MethodSpec&, const MethodSpec&) = default;
};

/// Parses "NAME" or "NAME:s". Throws UsageError.
MethodSpec parse_method(std::string_view text);

/// Expands a comma-separated method list. Thinned strategies given without ":s" are
/// crossed with every value in `s_values`; the others always get s = 1.
std::vector<MethodSpec> expand_methods(std::string_view list, std::span<const std::size_t> s_values);

/// n = 2^10, 2^11, ..., 2^20.
std::vector<std::size_t> default_sizes();

struct RunPlan {
    std::vector<MethodSpec> methods;
    std::vector<std::size_t> sizes = default_sizes();
    std::size_t trials = 100;
    std::uint64_t master_seed = 1;
    GeneratorKind generator = GeneratorKind::RandomDistinct;
    bool adaptive_small = false;
    BfprtPivot bfprt_pivot = BfprtPivot::MedianOfMedians;
    unsigned jobs = 1;

    /// Throws UsageError.
    void validate() const;
};

/// Stable per-trial seed; independent of execution order.
std::uint64_t trial_seed(std::uint64_t master_seed, const MethodSpec& method, std::size_t n,
                         std::size_t trial);

/// What a trial measures. Defaults to quicksort; tests substitute synthetic counts.
using Measure = std::function<Counters(std::span<Key>, const SortConfig&)>;

/// Runs every (method, n, trial) of the plan, possibly on several threads, and returns the
/// records in (method, n, trial) order.
std::vector<TrialRecord> run_plan(const RunPlan& plan, const Measure& measure = quicksort);

void write_csv(std::ostream& out, std::span<const TrialRecord> records);
/// Throws IoError on malformed input.
std::vector<TrialRecord> read_csv(std::istream& in);

/// Distinct (method, s) pairs in first-appearance order.
std::vector<MethodSpec> methods_in(std::span<const TrialRecord> records);

/// Mean comparisons per size for one method, ascending in n.
std::vector<SizePoint> mean_by_size(std::span<const TrialRecord> records, const MethodSpec& method);

/// Fits the per-size means of one method. Throws InsufficientData below three sizes.
FitResult fit_records(std::span<const TrialRecord> records, const MethodSpec& method,
                      Weighting weighting = Weighting::Relative);

struct SweepRow {
    std::size_t s = 1;
    FitResult fit;
};

/// One run + fit per thinning value. `base` supplies sizes, trials, seed, generator and jobs;
/// its method list is ignored.
std::vector<SweepRow> sweep_s(Strategy strategy, std::span<const std::size_t> s_values,
                              const RunPlan& base, Weighting weighting = Weighting::Relative,
                              const Measure& measure = quicksort);
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);

/// Closed-form bounds for a strategy, formatted for the terminal.
std::string bounds_report(Strategy strategy, std::size_t s, double c1);

}  // namespace qslab
