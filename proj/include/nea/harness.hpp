#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nea/engine.hpp"
#include "nea/noise.hpp"
#include "nea/problems.hpp"

namespace nea {

/// Noise-parameter schedule over the problem size. Logarithms are natural
/// (base e) throughout; evaluated values are clamped to [0,1].
enum class ScheduleKind {
    Const,        // v
    LogNOverN2Sq, // (log n / n)^2
    LogNOverN32,  // log n / n^(3/2)
    LogNOverN,    // log n / n
    LogN2OverN3,  // (log n)^2 / n^3
    LogNOverN52,  // log n / n^(5/2)
    LogNOverN2,   // log n / n^2
    OneOverN,     // 1/n
};

struct Schedule {
    ScheduleKind kind = ScheduleKind::Const;
    double value = 0.0;  // Const only

    static Schedule constant(double v) { return {ScheduleKind::Const, v}; }
};

/// Evaluate at problem size n >= 2 (throws std::domain_error below that),
/// clamped to [0,1].
double schedule_eval(const Schedule& s, std::size_t n);

/// Text forms: a decimal constant, "1/n", "logn/n", "logn/n^2",
/// "(logn/n)^2", "logn/n^(3/2)", "logn/n^(5/2)", "logn^2/n^3".
Schedule parse_schedule(const std::string& text);
std::string schedule_to_string(const Schedule& s);

/// Sample size as a function of n: a constant or coef*n^exp ("4n^3").
struct SampleSizeSchedule {
    std::uint64_t coef = 1;
    unsigned exponent = 0;  // 0 means constant

    std::uint64_t resolve(std::size_t n) const;
};
SampleSizeSchedule parse_sample_size(const std::string& text);
std::string sample_size_to_string(const SampleSizeSchedule& s);

/// Noise model with scheduled parameters; "bitwise:p=logn/n,q=1/n".
struct NoiseFamily {
    NoiseKind kind = NoiseKind::Noiseless;
    Schedule p = Schedule::constant(0.0);
    Schedule q = Schedule::constant(0.0);

    NoiseSpec resolve(std::size_t n) const;
};
NoiseFamily parse_noise_family(const std::string& text);
std::string noise_family_to_string(const NoiseFamily& f);

struct ExperimentConfig {
    ProblemKind problem = ProblemKind::OneMax;
    NoiseFamily noise;
    SampleSizeSchedule m;
    std::vector<std::size_t> n_grid;  // strictly increasing
    std::uint64_t runs_per_n = 1000;
    std::uint64_t max_evaluations = 10'000'000;
    std::uint64_t master_seed = 0;
    std::string out_path = "results.csv";
    HittingRule hitting = HittingRule::State;
};

/// Flat key=value text ('#' starts a comment). Keys: problem, noise, m,
/// n_grid, runs_per_n, max_evaluations, master_seed, out, hitting.
ExperimentConfig parse_experiment_config(const std::string& text);
ExperimentConfig load_experiment_config(const std::string& path);

struct ResultRow {
    std::size_t n = 0;
    double p = 0.0;
    double q = 0.0;
    std::uint64_t m = 1;
    std::uint64_t runs = 0;
    std::uint64_t hits = 0;
    std::uint64_t censored = 0;
    double mean_evals = 0.0;
    double median_evals = 0.0;
    double stddev_evals = 0.0;
    double normalized = 0.0;  // ln(mean_evals) / ln(n)
    std::uint64_t master_seed = 0;
};

/// Seed for run run_index of problem size n; this derivation is part of
/// the interface so any single run can be replayed externally.
inline std::uint64_t derive_run_seed(std::uint64_t master_seed, std::size_t n,
                                     std::uint64_t run_index) {
    return stream_seed(master_seed, static_cast<std::uint64_t>(n), run_index);
}

/// One row per n in n_grid, aggregated over runs_per_n independent runs.
/// Runs execute on `workers` threads; results are identical for any
/// worker count because seeding and aggregation order depend only on
/// (n, run_index). Censored runs enter the evaluation statistics at the
/// cap max_evaluations and are counted in the censored column.
std::vector<ResultRow> run_experiment(const ExperimentConfig& config, std::size_t workers = 1);

/// Header plus one row per ResultRow, floats at 17 significant digits,
/// LF line endings. Throws std::runtime_error with path context on I/O
/// failure.
void write_csv(const std::vector<ResultRow>& rows, const std::string& path);
std::string csv_to_string(const std::vector<ResultRow>& rows);

}  // namespace nea
