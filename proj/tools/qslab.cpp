// qslab: run quicksort pivot-selection experiments and fit their comparison counts.
//
//   qslab run     --methods Rand,Med3,TBfprt:40 --trials 100 --out runs.csv
//   qslab fit     runs.csv [--methods TBfprt:40]
//   qslab sweep-s --methods TBfprt --s 1,5,10,20,40 --out sweep.csv
//   qslab bounds  --methods TBfprt --s 40 --c1 0
//
// Exit codes: 0 success, 1 usage, 2 I/O, 3 insufficient data.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "qslab/bench.hpp"

namespace {

using namespace qslab;

enum Exit : int { kOk = 0, kUsage = 1, kIo = 2, kInsufficient = 3 };

struct Options {
    std::string methods;
    std::vector<std::size_t> s_values;
    std::vector<std::size_t> sizes;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    std::string generator = "random";
    std::string out = "-";
    std::string csv_in;
    unsigned jobs = 0;
    bool adaptive_small = false;
    bool exact_median = false;
    bool unweighted = false;
    double c1 = 0.0;
};

RunPlan make_plan(const Options& o) {
    RunPlan plan;
    if (!o.sizes.empty()) plan.sizes = o.sizes;
    plan.trials = o.trials;
    plan.master_seed = o.seed;
    const auto kind = parse_generator(o.generator);
    if (!kind) throw UsageError("unknown generator '" + o.generator + "'");
    plan.generator = *kind;
    plan.adaptive_small = o.adaptive_small;
    plan.bfprt_pivot = o.exact_median ? BfprtPivot::ExactMedian : BfprtPivot::MedianOfMedians;
    plan.jobs = o.jobs;
    return plan;
}

template <class Write>
void emit(const std::string& path, Write&& write) {
    if (path == "-") {
        write(std::cout);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    write(file);
    file.flush();
    if (!file) throw IoError("failed writing '" + path + "'");
}

int cmd_run(const Options& o) {
    const std::vector<std::size_t> default_s{40};
    RunPlan plan = make_plan(o);
    plan.methods = expand_methods(o.methods, o.s_values.empty() ? default_s : o.s_values);
    const auto records = run_plan(plan);
    emit(o.out, [&](std::ostream& out) { write_csv(out, records); });
    return kOk;
}

int cmd_fit(const Options& o) {
    std::ifstream file(o.csv_in, std::ios::binary);
    if (!file) throw IoError("cannot open '" + o.csv_in + "'");
    const auto records = read_csv(file);

    // A bare thinned name without --s selects every s present in the file.
    const auto present = methods_in(records);
    std::vector<MethodSpec> methods;
    for (const auto& p : present) {
        bool wanted = o.methods.empty();
        for (std::size_t pos = 0; !wanted && pos <= o.methods.size();) {
            const std::size_t comma = std::min(o.methods.find(',', pos), o.methods.size());
            const std::string token = o.methods.substr(pos, comma - pos);
            pos = comma + 1;
            if (token.empty()) continue;
            const MethodSpec m = parse_method(token);
            if (m.strategy != p.strategy) continue;
            if (token.find(':') != std::string::npos || !is_thinned(m.strategy)) {
                wanted = m.s == p.s;
            } else {
                wanted = o.s_values.empty() ||
                         std::find(o.s_values.begin(), o.s_values.end(), p.s) != o.s_values.end();
            }
        }
        if (wanted) methods.push_back(p);
    }
    if (methods.empty()) throw InsufficientData("no matching rows in '" + o.csv_in + "'");

    const auto weighting = o.unweighted ? Weighting::Unweighted : Weighting::Relative;
    std::cout << std::left << std::setw(14) << "method" << std::right << std::setw(10) << "a"
              << std::setw(10) << "+-" << std::setw(11) << "b" << std::setw(10) << "+-"
              << std::setw(8) << "sizes" << '\n';
    for (const auto& m : methods) {
        const auto fit = fit_records(records, m, weighting);
        std::cout << std::left << std::setw(14) << m.label() << std::right << std::fixed
                  << std::setprecision(4) << std::setw(10) << fit.a << std::setw(10) << fit.a_stderr
                  << std::setprecision(3) << std::setw(11) << fit.b << std::setw(10) << fit.b_stderr
                  << std::setw(8) << mean_by_size(records, m).size() << '\n';
    }
    return kOk;
}

int cmd_sweep(const Options& o) {
    const auto strategy = parse_strategy(o.methods);
    if (!strategy || !is_thinned(*strategy)) throw UsageError("sweep-s needs --methods TBfprt or TPMed3L");
    const std::vector<std::size_t> default_s{1, 5, 10, 20, 40};
    const auto& s_values = o.s_values.empty() ? default_s : o.s_values;
    const auto rows = sweep_s(*strategy, s_values, make_plan(o),
                              o.unweighted ? Weighting::Unweighted : Weighting::Relative);
    emit(o.out, [&](std::ostream& out) { write_sweep_csv(out, rows); });
    return kOk;
}

int cmd_bounds(const Options& o) {
    const auto strategy = parse_strategy(o.methods);
    if (!strategy) throw UsageError("bounds needs --methods TBfprt or TPMed3L");
    if (o.s_values.size() > 1) throw UsageError("bounds takes a single --s value");
    const std::size_t s = o.s_values.empty() ? 40 : o.s_values.front();
    std::cout << bounds_report(*strategy, s, o.c1);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Instrumented quicksort pivot-selection lab"};
    app.require_subcommand(1);
    Options o;

    auto add_run_flags = [&](CLI::App* cmd) {
        cmd->add_option("--sizes", o.sizes, "Array sizes (default 2^10..2^20)")->delimiter(',');
        cmd->add_option("--trials", o.trials, "Trials per (method, n)")->capture_default_str();
        cmd->add_option("--seed", o.seed, "Master seed")->capture_default_str();
        cmd->add_option("--generator", o.generator, "random|ascending|descending|adversary")
            ->capture_default_str();
        cmd->add_option("--out", o.out, "Output path, '-' for stdout")->capture_default_str();
        cmd->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)");
        cmd->add_flag("--adaptive-small", o.adaptive_small, "Median-of-three below the size threshold");
        cmd->add_flag("--exact-median", o.exact_median, "t-BFPRT selects the exact sample median");
    };

    auto* run = app.add_subcommand("run", "Run the experiment matrix and write per-trial CSV");
    run->add_option("--methods", o.methods, "e.g. Rand,Med3,PMed9,TBfprt:40,TPMed3L")->required();
    run->add_option("--s", o.s_values, "Thinning values for TBfprt/TPMed3L given without :s")
        ->delimiter(',');
    add_run_flags(run);

    auto* fit = app.add_subcommand("fit", "Fit a n ln n + b n to mean comparisons per size");
    fit->add_option("csv", o.csv_in, "CSV written by 'run'")->required();
    fit->add_option("--methods", o.methods, "Only these methods");
    fit->add_option("--s", o.s_values, "Only these thinning values")->delimiter(',');
    fit->add_flag("--unweighted", o.unweighted, "Plain least squares instead of relative weighting");

    auto* sweep = app.add_subcommand("sweep-s", "Fit coefficients for a range of s");
    sweep->add_option("--methods", o.methods, "TBfprt or TPMed3L")->required();
    sweep->add_option("--s", o.s_values, "Thinning values (default 1,5,10,20,40)")->delimiter(',');
    sweep->add_flag("--unweighted", o.unweighted, "Plain least squares instead of relative weighting");
    add_run_flags(sweep);

    auto* bounds = app.add_subcommand("bounds", "Print closed-form coefficient and depth bounds");
    bounds->add_option("--methods", o.methods, "TBfprt or TPMed3L")->required();
    bounds->add_option("--s", o.s_values, "Thinning parameter (default 40)");
    bounds->add_option("--c1", o.c1, "Linear cost coefficient of the selector")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*run) return cmd_run(o);
        if (*fit) return cmd_fit(o);
        if (*sweep) return cmd_sweep(o);
        if (*bounds) return cmd_bounds(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const InsufficientData& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInsufficient;
    }
    return kUsage;
}
