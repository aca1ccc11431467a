#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace edcb {

/// Sweep parameters. Defaults match the reference experiment: node counts
/// 10..100 step 10, radii 25 and 50, a 100x100 deployment area, 200 trials
/// per (n, r) cell, all six algorithms.
struct BenchConfig {
    std::vector<int> n_values = {10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
    std::vector<double> radii = {25.0, 50.0};
    double area_side = 100.0;
    int trials = 200;
    std::uint64_t base_seed = 1;
    std::vector<std::string> algorithms;  // empty means all known algorithms
    // Wall-clock timing is machine dependent, so it is off by default and the
    // runtime_us column stays 0; this keeps the CSV byte-stable across hosts.
    bool measure_runtime = false;
};

/// One algorithm run on one generated graph.
struct TrialRecord {
    int n = 0;
    double r = 0.0;
    int trial = 0;
    std::uint64_t seed = 0;
    std::string algo;
    int size = 0;
    bool valid = false;
    bool connected_graph = false;
    int components = 0;
    int iterations = 0;  // dominant-edge rounds; 0 for the baselines
    std::int64_t runtime_us = 0;
};

/// One (r, algo, n) aggregate. sd_size is the population standard deviation;
/// mean_ratio is mean set size divided by n; connected_frac is the fraction
/// of trials whose generated graph was connected.
struct SummaryRow {
    double r = 0.0;
    std::string algo;
    int n = 0;
    double mean_size = 0.0;
    double sd_size = 0.0;
    double mean_ratio = 0.0;
    double connected_frac = 0.0;
};

/// The algorithm names run_bench accepts, in canonical (sorted) order.
const std::vector<std::string>& known_algorithms();

/// Per-trial generator seed:
///   trial_seed = base_seed ^ mix64(mix64(mix64(n) ^ bits(r)) ^ trial)
/// where bits(r) is the IEEE-754 bit pattern of r and mix64 is the SplitMix64
/// finalizer from geo.hpp. Injective over any sweep in practice; replaying a
/// single trial needs only (base_seed, n, r, trial).
std::uint64_t trial_seed(std::uint64_t base_seed, int n, double r, int trial);

/// Runs the full sweep: for each (n, r, trial) generate one unit-disk graph
/// and run every configured algorithm on it, validating each output. Records
/// are returned sorted by (n, r, trial, algo) regardless of execution order.
/// Throws std::invalid_argument on an invalid config before doing any work.
std::vector<TrialRecord> run_bench(const BenchConfig& config);

/// Aggregates records per (n, r, algo); rows are sorted by (r, algo, n) so
/// each consecutive run of rows is one plottable series. Throws
/// std::invalid_argument on empty input.
std::vector<SummaryRow> summarize(const std::vector<TrialRecord>& records);

/// CSV with header n,r,trial,seed,algo,size,valid,connected,components,
/// iterations,runtime_us. Booleans are 1/0, r uses the shortest decimal form.
std::string trials_csv(const std::vector<TrialRecord>& records);

/// CSV with header r,algo,n,mean_size,sd_size,mean_ratio,connected_frac.
/// Aggregate columns use six decimal places.
std::string summary_csv(const std::vector<SummaryRow>& rows);

}  // namespace edcb
