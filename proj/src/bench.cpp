#include "qslab/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <iomanip>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace qslab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// The generator and the random pivot stream must not share a seed.
std::uint64_t pivot_seed(std::uint64_t trial_seed) { return splitmix64(trial_seed ^ 0x70697674ULL); }

template <class T>
bool parse_number(std::string_view text, T& out) {
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

}  // namespace

std::string MethodSpec::label() const {
    std::string out(to_string(strategy));
    if (is_thinned(strategy)) out += ":" + std::to_string(s);
    return out;
}

MethodSpec parse_method(std::string_view text) {
    const std::size_t colon = text.find(':');
    const auto name = text.substr(0, colon);
    const auto strategy = parse_strategy(name);
    if (!strategy) throw UsageError("unknown method '" + std::string(name) + "'");
    MethodSpec spec{*strategy, 1};
    if (colon != std::string_view::npos) {
        if (!parse_number(text.substr(colon + 1), spec.s) || spec.s == 0) {
            throw UsageError("bad thinning parameter in '" + std::string(text) + "'");
        }
        if (!is_thinned(*strategy)) spec.s = 1;
    }
    return spec;
}

std::vector<MethodSpec> expand_methods(std::string_view list, std::span<const std::size_t> s_values) {
    std::vector<MethodSpec> out;
    for (auto token : split(list, ',')) {
        if (token.empty()) continue;
        MethodSpec spec = parse_method(token);
        if (is_thinned(spec.strategy) && token.find(':') == std::string_view::npos) {
            if (s_values.empty()) throw UsageError("method '" + std::string(token) + "' needs --s");
            for (std::size_t s : s_values) {
                if (s == 0) throw UsageError("s must be >= 1");
                out.push_back({spec.strategy, s});
            }
        } else {
            out.push_back(spec);
        }
    }
    if (out.empty()) throw UsageError("no methods given");
    return out;
}

std::vector<std::size_t> default_sizes() {
    std::vector<std::size_t> sizes;
    for (int p = 10; p <= 20; ++p) sizes.push_back(std::size_t{1} << p);
    return sizes;
}

void RunPlan::validate() const {
    if (methods.empty()) throw UsageError("plan has no methods");
    if (sizes.empty()) throw UsageError("plan has no sizes");
    if (trials == 0) throw UsageError("trials must be >= 1");
    for (std::size_t n : sizes) {
        if (n < 2) throw UsageError("sizes must be >= 2");
    }
    for (const auto& m : methods) {
        if (m.s == 0) throw UsageError("s must be >= 1");
        if (generator != GeneratorKind::TBfprtAdversary) continue;
        for (std::size_t n : sizes) {
            if (m.s < 2 || n < 5 * m.s) {
                throw UsageError("adversary input needs s >= 2 and n >= 5s (method " + m.label() +
                                 ", n=" + std::to_string(n) + ")");
            }
        }
    }
}

std::uint64_t trial_seed(std::uint64_t master_seed, const MethodSpec& method, std::size_t n,
                         std::size_t trial) {
    std::uint64_t h = splitmix64(master_seed ^ fnv1a(to_string(method.strategy)));
    h = splitmix64(h ^ method.s);
    h = splitmix64(h ^ n);
    return splitmix64(h ^ trial);
}

std::vector<TrialRecord> run_plan(const RunPlan& plan, const Measure& measure) {
    plan.validate();

    struct Task {
        MethodSpec method;
        std::size_t n;
        std::size_t trial;
    };
    std::vector<Task> tasks;
    for (const auto& m : plan.methods) {
        for (std::size_t n : plan.sizes) {
            for (std::size_t t = 0; t < plan.trials; ++t) tasks.push_back({m, n, t});
        }
    }

    std::vector<TrialRecord> records(tasks.size());
    auto execute = [&](std::size_t i) {
        const Task& task = tasks[i];
        const std::uint64_t seed = trial_seed(plan.master_seed, task.method, task.n, task.trial);
        std::vector<Key> input =
            generate(GeneratorSpec{plan.generator, task.n, task.method.s, seed});
        SortConfig cfg{task.method.strategy, task.method.s, plan.adaptive_small, pivot_seed(seed),
                       plan.bfprt_pivot};
        const Counters c = measure(input, cfg);
        records[i] = TrialRecord{std::string(to_string(task.method.strategy)),
                                 task.method.s,
                                 task.n,
                                 task.trial,
                                 seed,
                                 c.comparisons,
                                 c.swaps,
                                 c.max_depth};
    };

    unsigned jobs = plan.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : plan.jobs;
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, tasks.size()));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) execute(i);
        return records;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < jobs; ++w) {
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < tasks.size(); i = next++) {
                    try {
                        execute(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
    return records;
}

void write_csv(std::ostream& out, std::span<const TrialRecord> records) {
    out << kCsvHeader << '\n';
    for (const auto& r : records) {
        out << r.method << ',' << r.s << ',' << r.n << ',' << r.trial << ',' << r.seed << ','
            << r.comparisons << ',' << r.swaps << ',' << r.max_depth << '\n';
    }
    if (!out) throw IoError("failed writing CSV");
}

std::vector<TrialRecord> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw IoError("empty CSV");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kCsvHeader) throw IoError("unexpected CSV header: " + line);

    std::vector<TrialRecord> records;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto f = split(line, ',');
        TrialRecord r;
        bool ok = f.size() == 8;
        if (ok) {
            r.method = std::string(f[0]);
            ok = parse_strategy(f[0]).has_value() && parse_number(f[1], r.s) &&
                 parse_number(f[2], r.n) && parse_number(f[3], r.trial) &&
                 parse_number(f[4], r.seed) && parse_number(f[5], r.comparisons) &&
                 parse_number(f[6], r.swaps) && parse_number(f[7], r.max_depth);
        }
        if (!ok) throw IoError("malformed CSV row at line " + std::to_string(line_no));
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<MethodSpec> methods_in(std::span<const TrialRecord> records) {
    std::vector<MethodSpec> out;
    for (const auto& r : records) {
        const MethodSpec m{*parse_strategy(r.method), r.s};
        if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    }
    return out;
}

std::vector<SizePoint> mean_by_size(std::span<const TrialRecord> records, const MethodSpec& method) {
    const auto name = to_string(method.strategy);
    std::map<std::size_t, std::pair<double, std::size_t>> sums;
    for (const auto& r : records) {
        if (r.method != name || r.s != method.s) continue;
        auto& [sum, count] = sums[r.n];
        sum += static_cast<double>(r.comparisons);
        ++count;
    }
    std::vector<SizePoint> points;
    for (const auto& [n, acc] : sums) {
        points.push_back({static_cast<double>(n), acc.first / static_cast<double>(acc.second)});
    }
    return points;
}

FitResult fit_records(std::span<const TrialRecord> records, const MethodSpec& method,
                      Weighting weighting) {
    const auto points = mean_by_size(records, method);
    if (points.size() < 3) {
        throw InsufficientData(method.label() + ": need at least 3 distinct sizes, have " +
                               std::to_string(points.size()));
    }
    return fit_nlnn(points, weighting);
}

std::vector<SweepRow> sweep_s(Strategy strategy, std::span<const std::size_t> s_values,
                              const RunPlan& base, Weighting weighting, const Measure& measure) {
    if (!is_thinned(strategy)) throw UsageError("sweep-s needs TBfprt or TPMed3L");
    if (s_values.empty()) throw UsageError("sweep-s needs at least one s value");
    std::vector<SweepRow> rows;
    for (std::size_t s : s_values) {
        RunPlan plan = base;
        plan.methods = {MethodSpec{strategy, s}};
        const auto records = run_plan(plan, measure);
        rows.push_back({s, fit_records(records, plan.methods.front(), weighting)});
    }
    return rows;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
    out << "# inv_ln2=" << std::setprecision(10) << kInvLn2 << '\n';
    out << "s,a,b,a_stderr,b_stderr\n";
    out << std::setprecision(8);
    for (const auto& r : rows) {
        out << r.s << ',' << r.fit.a << ',' << r.fit.b << ',' << r.fit.a_stderr << ','
            << r.fit.b_stderr << '\n';
    }
    if (!out) throw IoError("failed writing sweep CSV");
}

std::string bounds_report(Strategy strategy, std::size_t s, double c1) {
    if (s == 0) throw UsageError("s must be >= 1");
    std::ostringstream out;
    out << std::fixed << std::setprecision(4);
    switch (strategy) {
        case Strategy::TBfprt:
            out << "TBfprt s=" << s << " c1=" << c1 << '\n'
                << "  H(0.3/s)              " << entropy(0.3 / static_cast<double>(s)) << '\n'
                << "  worst-case a (upper)  " << tbfprt_worst_coeff_upper(s, c1) << '\n'
                << "  worst-case a (lower)  " << tbfprt_worst_coeff_lower(s, c1) << '\n';
            break;
        case Strategy::TPMed3L:
            out << "TPMed3L s=" << s << '\n'
                << "  best-case a           " << pmed3l_best_coeff(s) << '\n';
            for (double n : {1e3, 1e4, 1e5, 1e6}) {
                out << "  worst depth n=" << std::setprecision(0) << n << std::setprecision(1)
                    << "  " << pmed3l_depth_estimate(n, s) << std::setprecision(4) << '\n';
            }
            break;
        default:
            throw UsageError("bounds are defined for TBfprt and TPMed3L only");
    }
    out << "  limit 1/ln 2          " << kInvLn2 << '\n';
    return out.str();
}

}  // namespace qslab
