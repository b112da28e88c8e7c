#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "qslab/bench.hpp"

using namespace qslab;

namespace {

std::string to_csv(const std::vector<TrialRecord>& records) {
    std::ostringstream out;
    write_csv(out, records);
    return out.str();
}

// Reports a n ln n + b n (rounded) comparisons without sorting.
Measure synthetic(double a, double b) {
    return [a, b](std::span<Key> input, const SortConfig&) {
        const auto n = static_cast<double>(input.size());
        Counters c;
        c.comparisons = static_cast<std::uint64_t>(std::llround(a * n * std::log(n) + b * n));
        return c;
    };
}

}  // namespace

TEST_CASE("method parsing") {
    CHECK(parse_method("TBfprt:40") == MethodSpec{Strategy::TBfprt, 40});
    CHECK(parse_method("Med3") == MethodSpec{Strategy::Med3, 1});
    CHECK(parse_method("Med3:7") == MethodSpec{Strategy::Med3, 1});
    CHECK(MethodSpec{Strategy::TPMed3L, 3}.label() == "TPMed3L:3");
    CHECK(MethodSpec{Strategy::Rand, 1}.label() == "Rand");
    CHECK_THROWS_AS(parse_method("Quick"), UsageError);
    CHECK_THROWS_AS(parse_method("TBfprt:0"), UsageError);
    CHECK_THROWS_AS(parse_method("TBfprt:x"), UsageError);

    const std::vector<std::size_t> s{1, 40};
    const auto m = expand_methods("Rand,TBfprt,TPMed3L:3", s);
    REQUIRE(m.size() == 4);
    CHECK(m[1] == MethodSpec{Strategy::TBfprt, 1});
    CHECK(m[2] == MethodSpec{Strategy::TBfprt, 40});
    CHECK(m[3] == MethodSpec{Strategy::TPMed3L, 3});
    CHECK_THROWS_AS(expand_methods("", s), UsageError);
}

TEST_CASE("default size grid is 2^10..2^20") {
    const auto sizes = default_sizes();
    REQUIRE(sizes.size() == 11);
    CHECK(sizes.front() == 1024);
    CHECK(sizes.back() == 1048576);
}

TEST_CASE("run_plan: one row per trial in (method, n, trial) order") {
    RunPlan plan;
    plan.methods = {{Strategy::Med3, 1}};
    plan.sizes = {16};
    plan.trials = 2;
    const auto records = run_plan(plan);
    REQUIRE(records.size() == 2);
    CHECK(records[0].trial == 0);
    CHECK(records[1].trial == 1);
    CHECK(records[0].method == "Med3");
    CHECK(records[0].comparisons >= 15);

    const auto csv = to_csv(records);
    CHECK(csv.rfind(std::string(kCsvHeader) + "\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}

TEST_CASE("run_plan: byte-identical output, sequential or parallel") {
    RunPlan plan;
    plan.methods = {{Strategy::Rand, 1}, {Strategy::TBfprt, 5}, {Strategy::TPMed3L, 3}};
    plan.sizes = {100, 1000};
    plan.trials = 7;
    plan.master_seed = 2024;
    const auto first = to_csv(run_plan(plan));
    CHECK(to_csv(run_plan(plan)) == first);
    plan.jobs = 4;
    CHECK(to_csv(run_plan(plan)) == first);
    plan.master_seed = 2025;
    CHECK(to_csv(run_plan(plan)) != first);
}

TEST_CASE("trial seeds depend on every component") {
    const MethodSpec m{Strategy::TBfprt, 40};
    const auto base = trial_seed(1, m, 1024, 0);
    CHECK(trial_seed(1, m, 1024, 0) == base);
    CHECK(trial_seed(2, m, 1024, 0) != base);
    CHECK(trial_seed(1, {Strategy::TBfprt, 41}, 1024, 0) != base);
    CHECK(trial_seed(1, {Strategy::TPMed3L, 40}, 1024, 0) != base);
    CHECK(trial_seed(1, m, 2048, 0) != base);
    CHECK(trial_seed(1, m, 1024, 1) != base);
}

TEST_CASE("run_plan validation") {
    RunPlan plan;
    plan.methods = {{Strategy::Med3, 1}};
    plan.sizes = {1};
    CHECK_THROWS_AS(run_plan(plan), UsageError);
    plan.sizes = {100};
    plan.trials = 0;
    CHECK_THROWS_AS(run_plan(plan), UsageError);
    plan.trials = 1;
    plan.generator = GeneratorKind::TBfprtAdversary;
    CHECK_THROWS_AS(run_plan(plan), UsageError);  // s = 1
    plan.methods = {{Strategy::TBfprt, 4}};
    CHECK(run_plan(plan).size() == 1);
    plan.methods.clear();
    CHECK_THROWS_AS(run_plan(plan), UsageError);
}

TEST_CASE("CSV round trip and malformed input") {
    RunPlan plan;
    plan.methods = {{Strategy::PMed9, 1}, {Strategy::TBfprt, 40}};
    plan.sizes = {64, 128};
    plan.trials = 3;
    const auto records = run_plan(plan);
    std::istringstream in(to_csv(records));
    CHECK(read_csv(in) == records);

    std::istringstream bad_header("method,n\nMed3,1\n");
    CHECK_THROWS_AS(read_csv(bad_header), IoError);
    std::istringstream bad_row(std::string(kCsvHeader) + "\nMed3,1,16,0,5,x,0,0\n");
    CHECK_THROWS_AS(read_csv(bad_row), IoError);
    std::istringstream bad_method(std::string(kCsvHeader) + "\nHeap,1,16,0,5,1,0,0\n");
    CHECK_THROWS_AS(read_csv(bad_method), IoError);
    std::istringstream empty("");
    CHECK_THROWS_AS(read_csv(empty), IoError);
}

TEST_CASE("fit over run output recovers injected coefficients") {
    RunPlan plan;
    plan.methods = {{Strategy::Med3, 1}};
    plan.sizes = {1 << 16, 1 << 17, 1 << 18, 1 << 19, 1 << 20};
    plan.trials = 2;
    const auto records = run_plan(plan, synthetic(2.0, -3.0));
    std::istringstream in(to_csv(records));
    const auto back = read_csv(in);
    const auto fit = fit_records(back, plan.methods.front());
    // counts are integers: |dy/n| <= 0.5 / 2^16 bounds the recovery error
    CHECK(std::abs(fit.a - 2.0) < 1e-5);
    CHECK(std::abs(fit.b + 3.0) < 1e-4);
}

TEST_CASE("fit needs three sizes") {
    RunPlan plan;
    plan.methods = {{Strategy::Med3, 1}};
    plan.sizes = {100, 200};
    plan.trials = 2;
    const auto records = run_plan(plan);
    CHECK_THROWS_AS(fit_records(records, plan.methods.front()), InsufficientData);
    CHECK_THROWS_AS(fit_records(records, {Strategy::Rand, 1}), InsufficientData);
}

TEST_CASE("mean_by_size and methods_in") {
    std::vector<TrialRecord> r{
        {"Med3", 1, 10, 0, 0, 30}, {"Med3", 1, 10, 1, 0, 40}, {"TBfprt", 40, 10, 0, 0, 99},
        {"Med3", 1, 20, 0, 0, 70},
    };
    const auto pts = mean_by_size(r, {Strategy::Med3, 1});
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].y == 35.0);
    CHECK(pts[1].n == 20.0);
    const auto ms = methods_in(r);
    REQUIRE(ms.size() == 2);
    CHECK(ms[1] == MethodSpec{Strategy::TBfprt, 40});
}

TEST_CASE("sweep_s fits once per s") {
    RunPlan base;
    base.sizes = {1 << 16, 1 << 18, 1 << 20};
    base.trials = 1;
    const std::vector<std::size_t> s{1, 5, 40};
    const auto rows = sweep_s(Strategy::TBfprt, s, base, Weighting::Relative, synthetic(1.5, -0.5));
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) CHECK(std::abs(row.fit.a - 1.5) < 1e-5);
    CHECK(rows[2].s == 40);
    CHECK_THROWS_AS(sweep_s(Strategy::Med3, s, base), UsageError);

    std::ostringstream out;
    write_sweep_csv(out, rows);
    CHECK(out.str().find("# inv_ln2=1.442695041") == 0);
    CHECK(out.str().find("\ns,a,b,a_stderr,b_stderr\n") != std::string::npos);
}

TEST_CASE("bounds report") {
    const auto t = bounds_report(Strategy::TBfprt, 40, 0);
    CHECK(t.find("22.64") != std::string::npos);
    CHECK(t.find("1.4430") != std::string::npos);
    const auto p = bounds_report(Strategy::TPMed3L, 40, 0);
    CHECK(p.find("1.4911") != std::string::npos);
    CHECK_THROWS_AS(bounds_report(Strategy::Med3, 1, 0), UsageError);
}
