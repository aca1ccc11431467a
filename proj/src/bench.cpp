#include "edcb/bench.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <tuple>

#include "edcb/baselines.hpp"
#include "edcb/cds.hpp"
#include "edcb/edc.hpp"
#include "edcb/geo.hpp"
#include "edcb/graph.hpp"

namespace edcb {

namespace {

struct AlgoOutcome {
    int size = 0;
    bool valid = false;
    int iterations = 0;
};

AlgoOutcome run_algorithm(const Graph& g, const std::string& algo) {
    AlgoOutcome out;
    if (algo == "edc-ds" || algo == "edc-ds-improved") {
        DsResult r = algo == "edc-ds" ? edc_ds_basic(g) : edc_ds_improved(g);
        out.size = static_cast<int>(r.dominators.size());
        out.valid = is_dominating_set(g, r.dominators);
        out.iterations = r.iterations;
    } else if (algo == "edc-cds") {
        DsResult ds = edc_ds_improved(g);
        CdsResult c = edc_cds(g, ds.dominators);
        out.size = static_cast<int>(c.cds.size());
        out.valid = is_cds_per_component(g, c.cds);
        out.iterations = ds.iterations;
    } else if (algo == "greedy-ds") {
        std::vector<NodeId> s = greedy_ds(g);
        out.size = static_cast<int>(s.size());
        out.valid = is_dominating_set(g, s);
    } else if (algo == "wu-li") {
        std::vector<NodeId> s = wu_li_cds(g);
        out.size = static_cast<int>(s.size());
        out.valid = is_cds_per_component(g, s);
    } else if (algo == "greedy-cds") {
        std::vector<NodeId> s = das_cds(g);
        out.size = static_cast<int>(s.size());
        out.valid = is_cds_per_component(g, s);
    } else {
        throw std::invalid_argument("run_bench: unknown algorithm '" + algo + "'");
    }
    return out;
}

void validate_config(const BenchConfig& config) {
    if (config.n_values.empty()) {
        throw std::invalid_argument("run_bench: n_values must be nonempty");
    }
    for (int n : config.n_values) {
        if (n < 1) {
            throw std::invalid_argument("run_bench: every n must be >= 1, got " +
                                        std::to_string(n));
        }
    }
    if (config.radii.empty()) {
        throw std::invalid_argument("run_bench: radii must be nonempty");
    }
    for (double r : config.radii) {
        if (!(r > 0.0)) {
            throw std::invalid_argument("run_bench: every radius must be > 0");
        }
    }
    if (!(config.area_side > 0.0)) {
        throw std::invalid_argument("run_bench: area_side must be > 0");
    }
    if (config.trials < 1) {
        throw std::invalid_argument("run_bench: trials must be >= 1");
    }
    const auto& known = known_algorithms();
    for (const std::string& algo : config.algorithms) {
        if (std::find(known.begin(), known.end(), algo) == known.end()) {
            throw std::invalid_argument("run_bench: unknown algorithm '" + algo + "'");
        }
    }
}

std::string format_double(const char* fmt, double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, value);
    return buf;
}

}  // namespace

const std::vector<std::string>& known_algorithms() {
    static const std::vector<std::string> names = {
        "edc-cds", "edc-ds", "edc-ds-improved", "greedy-cds", "greedy-ds", "wu-li",
    };
    return names;
}

std::uint64_t trial_seed(std::uint64_t base_seed, int n, double r, int trial) {
    std::uint64_t h = mix64(static_cast<std::uint64_t>(n));
    h = mix64(h ^ std::bit_cast<std::uint64_t>(r));
    h = mix64(h ^ static_cast<std::uint64_t>(trial));
    return base_seed ^ h;
}

std::vector<TrialRecord> run_bench(const BenchConfig& config) {
    validate_config(config);
    const std::vector<std::string>& algos =
        config.algorithms.empty() ? known_algorithms() : config.algorithms;

    std::vector<TrialRecord> records;
    records.reserve(config.n_values.size() * config.radii.size() *
                    static_cast<std::size_t>(config.trials) * algos.size());

    for (int n : config.n_values) {
        for (double r : config.radii) {
            for (int t = 0; t < config.trials; ++t) {
                const std::uint64_t seed = trial_seed(config.base_seed, n, r, t);
                const GeoGraph geo = generate_udg(n, r, config.area_side, seed);
                const Graph g = induced_graph(geo);
                const int components = static_cast<int>(connected_components(g).size());

                for (const std::string& algo : algos) {
                    TrialRecord rec;
                    rec.n = n;
                    rec.r = r;
                    rec.trial = t;
                    rec.seed = seed;
                    rec.algo = algo;
                    rec.connected_graph = components == 1;
                    rec.components = components;
                    std::chrono::steady_clock::time_point start;
                    if (config.measure_runtime) start = std::chrono::steady_clock::now();
                    const AlgoOutcome out = run_algorithm(g, algo);
                    if (config.measure_runtime) {
                        rec.runtime_us = std::chrono::duration_cast<std::chrono::microseconds>(
                                             std::chrono::steady_clock::now() - start)
                                             .count();
                    }
                    rec.size = out.size;
                    rec.valid = out.valid;
                    rec.iterations = out.iterations;
                    records.push_back(std::move(rec));
                }
            }
        }
    }

    std::sort(records.begin(), records.end(),
              [](const TrialRecord& a, const TrialRecord& b) {
                  return std::tie(a.n, a.r, a.trial, a.algo) <
                         std::tie(b.n, b.r, b.trial, b.algo);
              });
    return records;
}

std::vector<SummaryRow> summarize(const std::vector<TrialRecord>& records) {
    if (records.empty()) {
        throw std::invalid_argument("summarize: no records");
    }

    struct Accum {
        std::vector<int> sizes;
        int connected = 0;
    };
    std::map<std::tuple<double, std::string, int>, Accum> groups;
    for (const TrialRecord& rec : records) {
        Accum& acc = groups[{rec.r, rec.algo, rec.n}];
        acc.sizes.push_back(rec.size);
        acc.connected += rec.connected_graph ? 1 : 0;
    }

    std::vector<SummaryRow> rows;
    rows.reserve(groups.size());
    for (const auto& [key, acc] : groups) {
        SummaryRow row;
        std::tie(row.r, row.algo, row.n) = key;
        const double count = static_cast<double>(acc.sizes.size());
        double sum = 0.0;
        for (int s : acc.sizes) sum += s;
        row.mean_size = sum / count;
        double sq = 0.0;
        for (int s : acc.sizes) sq += (s - row.mean_size) * (s - row.mean_size);
        row.sd_size = std::sqrt(sq / count);
        row.mean_ratio = row.mean_size / row.n;
        row.connected_frac = acc.connected / count;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string trials_csv(const std::vector<TrialRecord>& records) {
    std::string out = "n,r,trial,seed,algo,size,valid,connected,components,iterations,runtime_us\n";
    for (const TrialRecord& rec : records) {
        out += std::to_string(rec.n);
        out += ',';
        out += format_double("%g", rec.r);
        out += ',';
        out += std::to_string(rec.trial);
        out += ',';
        out += std::to_string(rec.seed);
        out += ',';
        out += rec.algo;
        out += ',';
        out += std::to_string(rec.size);
        out += ',';
        out += rec.valid ? '1' : '0';
        out += ',';
        out += rec.connected_graph ? '1' : '0';
        out += ',';
        out += std::to_string(rec.components);
        out += ',';
        out += std::to_string(rec.iterations);
        out += ',';
        out += std::to_string(rec.runtime_us);
        out += '\n';
    }
    return out;
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
    std::string out = "r,algo,n,mean_size,sd_size,mean_ratio,connected_frac\n";
    for (const SummaryRow& row : rows) {
        out += format_double("%g", row.r);
        out += ',';
        out += row.algo;
        out += ',';
        out += std::to_string(row.n);
        out += ',';
        out += format_double("%.6f", row.mean_size);
        out += ',';
        out += format_double("%.6f", row.sd_size);
        out += ',';
        out += format_double("%.6f", row.mean_ratio);
        out += ',';
        out += format_double("%.6f", row.connected_frac);
        out += '\n';
    }
    return out;
}

}  // namespace edcb
