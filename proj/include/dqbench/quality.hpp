#pragma once

#include "dqbench/dataset.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dqbench {

// Partition of a categorical column's values into semantic-equivalence
// groups: each group lists every representation of one real-world value.
// Columns without an entry, and values outside every group, count as fully
// consistent.
struct RepresentationMap {
    std::map<std::string, std::vector<std::vector<Cell>>> by_column;

    std::string to_json() const;
    static RepresentationMap from_json(const std::string& text);

    /// Files carry group values as text; re-type them against the dataset's
    /// column kinds (e.g. integer categories) before scoring.
    RepresentationMap resolve_against(const Dataset& ds) const;
};

/// Minimum replacements to make the column single-representation per group,
/// divided by the row count. Numerical and date columns score 0.
double inconsistency(const Column& column,
                     const std::vector<std::vector<Cell>>& groups);

/// 1 - mean inconsistency over the non-target features. A categorical target
/// participates only when the map carries an entry for it.
double consistency(const Dataset& ds, const RepresentationMap& map);

/// 1 - (missing cells) / (n * f) over the non-target features.
double completeness(const Dataset& ds);

/// 1 - mismatches / n.
double feature_accuracy_cat(const Column& column, const Column& gt_column);

/// 1 - mean|value - truth| / mean(truth). Unbounded below; errors when the
/// ground-truth mean is zero (the scaling is undefined there).
double feature_accuracy_num(const Column& column, const Column& gt_column);

struct FeatureAccuracy {
    double categorical = 1.0; // mean over categorical features
    double numerical = 1.0;   // mean over numerical features
    double mean = 1.0;        // plain mean of the two, used for plotting
};

/// Per-type feature accuracy averages over the non-target features. A type
/// with no features reports the neutral value 1.
FeatureAccuracy feature_accuracy_report(const PairedDataset& pd);

/// Accuracy of the target column against its snapshot; numerical targets are
/// clamped at 0.
double target_accuracy(const PairedDataset& pd);

/// (distinct full rows - 1) / (n - 1); exact row equality, target included.
double uniqueness(const Dataset& ds);

/// Sum over class pairs of |n_ci - n_cj|.
std::int64_t imbalance(const Dataset& ds);

/// 1 - imbalance / epsilon, with epsilon = ceil(m/2) * floor(m/2) * n_cmax
/// and n_cmax the largest observed class count. Clamped to [0, 1].
double balance(const Dataset& ds);

/// Worst-case imbalance for m classes capped at n_cmax samples per class.
std::int64_t balance_epsilon(std::size_t class_count, std::int64_t n_cmax);

struct QualityReport {
    double consistency = 1.0;
    double completeness = 1.0;
    double cat_feature_accuracy = 1.0;
    double num_feature_accuracy = 1.0;
    double target_accuracy = 1.0;
    std::optional<double> uniqueness;  // needs n >= 2
    std::optional<double> balance;     // needs a classified target, m >= 2
    std::optional<std::int64_t> imbalance;
    std::optional<std::int64_t> epsilon;

    /// Stable-key-order JSON, suitable for golden tests.
    std::string to_json() const;
};

/// Score every dimension that applies. Accuracy scores need a ground truth
/// (otherwise they report 1); consistency scores against the map when given.
QualityReport measure_quality(const Dataset& current,
                              const Dataset* ground_truth = nullptr,
                              const RepresentationMap* map = nullptr);

} // namespace dqbench
