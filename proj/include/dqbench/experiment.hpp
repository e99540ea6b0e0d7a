#pragma once

#include "dqbench/dataset.hpp"
#include "dqbench/manifest.hpp"
#include "dqbench/polluters.hpp"
#include "dqbench/scenarios.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace dqbench {

enum class Task { classification, regression, clustering };

std::string task_name(Task task);
Task parse_task(const std::string& name);

struct ExperimentConfig {
    std::string dataset_name;
    std::filesystem::path data_path;
    std::filesystem::path manifest_path;
    Task task = Task::classification;
    std::vector<Dimension> dimensions;       // empty: every applicable dimension
    std::vector<int> scenarios;              // empty: 1,2,3 (clustering always 3)
    std::vector<std::string> algorithms;     // empty: task defaults
    std::vector<std::uint64_t> master_seeds; // empty: 1..5
    double train_fraction = 0.8;
    std::size_t min_class_count = 10; // class-balance preprocessing of regression data
    std::optional<double> bin_step;   // overrides the manifest
    std::filesystem::path out_dir = "results";
    int threads = 1;
    bool keep_intermediate = false;
};

ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// One (dimension variant, scenario, level, seed, algorithm) measurement.
struct RunRecord {
    std::string dataset;
    std::string dimension; // variant label, e.g. consistent_representation_k2
    int scenario = 0;
    std::string algorithm;
    double level = 0.0;
    int seed_index = 0;
    double quality = 0.0;
    std::string metric;
    double value = 0.0;
};

/// Seed-aggregated result row.
struct ResultRecord {
    std::string dataset;
    std::string dimension;
    int scenario = 0;
    std::string algorithm;
    double level = 0.0;
    double quality = 0.0; // mean measured quality over seeds
    std::string metric;
    double mean = 0.0;
    double stddev = 0.0;
    int n_runs = 0;
};

struct ExperimentOutput {
    std::vector<RunRecord> runs;
    std::vector<ResultRecord> records;
    std::vector<std::string> diagnostics; // one line per failed grid cell
};

/// Execute the whole grid: dimensions x scenarios x levels x seeds x
/// algorithms. A failing cell is logged and skipped; everything else
/// proceeds. Results are byte-deterministic in (config, seeds) regardless of
/// the thread count.
ExperimentOutput run_experiment(const ExperimentConfig& cfg);

/// Aggregate per-run values into mean/std records (used by run_experiment
/// and by the report command when re-aggregating a runs file).
std::vector<ResultRecord> aggregate_runs(const std::vector<RunRecord>& runs);

enum class ReportFormat { csv, json, both };

/// Write results.csv/results.json (long form), runs.csv (per-run log),
/// per-(dimension, scenario) wide tables and diagnostics.log under out_dir.
void write_reports(const ExperimentOutput& output, const std::filesystem::path& out_dir,
                   ReportFormat format = ReportFormat::both);

std::string runs_to_csv(const std::vector<RunRecord>& runs);
std::vector<RunRecord> runs_from_csv(const std::string& text);
std::string results_to_csv(const std::vector<ResultRecord>& records);
std::string results_to_json(const std::vector<ResultRecord>& records);

/// Entry point behind the command-line tool; returns the process exit code
/// (0 ok, 1 usage, 2 data error, 3 internal error).
int run_cli(int argc, const char* const* argv);

} // namespace dqbench
