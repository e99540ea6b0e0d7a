#pragma once

#include "dqbench/dataset.hpp"
#include "dqbench/quality.hpp"
#include "dqbench/rng.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dqbench {

enum class Dimension {
    consistent_representation,
    completeness,
    feature_accuracy,
    target_accuracy,
    uniqueness,
    class_balance,
};

std::string dimension_name(Dimension dim);
Dimension parse_dimension(const std::string& name);
const std::vector<Dimension>& all_dimensions();

// ---- per-dimension parameter records ----

struct ConsistencySpec {
    double lambda = 0.0;     // fraction of rows polluted per categorical feature
    int representations = 2; // k: representation count per value, incl. the original
};

// Scalar rate applied to every pollutable feature, or a per-feature override
// map. Rates are target missing fractions, so features that already contain
// missing values are only topped up.
struct CompletenessSpec {
    double lambda = 0.0;
    std::map<std::string, double> per_feature;

    double rate_for(const std::string& feature) const;
};

// For categorical features the rate is the fraction of rows polluted; for
// numerical features it is the variance of the Gaussian noise factor.
struct FeatureAccuracySpec {
    double lambda = 0.0;
    std::map<std::string, double> per_feature;

    double rate_for(const std::string& feature) const;
};

struct TargetAccuracySpec {
    double lambda = 0.0;
};

enum class DupCountKind { always_one, uniform, normal, zipf };

struct DupCountDist {
    DupCountKind kind = DupCountKind::always_one;
    double a = 1.0; // uniform: lower bound; normal: mean; zipf: exponent
    double b = 1.0; // uniform: upper bound; normal: standard deviation

    /// One duplicate-count draw, clamped to [1, budget].
    std::int64_t draw(RngStream& rng, std::int64_t budget) const;
};

struct UniquenessSpec {
    double rho = 1.0; // duplication factor: polluted size / deduplicated size
    DupCountDist dist;
};

// Blueprint for a class-balance pollution: per-class sample counts that form
// an ascending arithmetic progression along the classes ordered by original
// size (largest first, ties by class id).
struct BalancePlan {
    double lambda_requested = 0.0;
    double lambda_effective = 0.0; // after the smallest-class cap
    std::int64_t n_target = 0;     // total rows of the polluted version
    double delta = 0.0;            // count difference between consecutive classes
    std::int64_t s_max = 0;        // largest planned count
    std::int64_t s_min = 0;        // smallest-class cap: ceil(0.01 * s_max)
    std::vector<Cell> class_order; // descending original size, ties by class id
    std::vector<std::int64_t> counts; // planned counts, aligned with class_order
    std::int64_t planned_imbalance = 0;
};

// ---- pollution log ----

struct CellEdit {
    std::size_t row = 0;
    std::size_t column = 0;
    Cell before;
    Cell after;
};

struct RowEvent {
    enum class Kind { removed, duplicated, selected };
    Kind kind = Kind::selected;
    std::size_t source_row = 0; // index into the input dataset
    std::int64_t copies = 0;    // duplicated: how many copies were appended
};

struct PollutionLog {
    std::vector<CellEdit> cell_edits;
    std::vector<RowEvent> row_events;

    /// JSON-lines serialization: one record per edit with cell coordinates
    /// and old/new values.
    std::string to_jsonl(const Dataset& input) const;
};

struct PollutionResult {
    Dataset data;
    PollutionLog log;
};

struct ConsistencyResult {
    Dataset data;
    RepresentationMap map;
    PollutionLog log;
};

// ---- the six polluters ----
// All are deterministic in (dataset, spec, stream), are the identity at their
// zero setting, and never touch the schema. Fractions convert to counts by
// round-half-up. Row subsets are prefixes of one per-feature permutation, so
// the cells polluted at a low rate are a subset of those at a higher rate
// under the same stream.

/// Rewrite a fraction of each categorical feature's cells to fresh
/// representations of their value and return the grouping needed to score
/// consistency afterwards.
ConsistencyResult pollute_consistent_representation(const Dataset& ds,
                                                    const ConsistencySpec& spec,
                                                    RngStream rng);

/// Top every pollutable feature up to its target missing fraction by writing
/// the column placeholder into uniformly chosen non-missing cells.
PollutionResult pollute_completeness(const Dataset& ds, const CompletenessSpec& spec,
                                     RngStream rng);

/// Categorical features: swap a fraction of cells to a different category
/// from the original domain. Numerical features: add Gaussian noise scaled by
/// the column mean to every cell.
PollutionResult pollute_feature_accuracy(const Dataset& ds,
                                         const FeatureAccuracySpec& spec,
                                         RngStream rng);

/// Feature-accuracy pollution restricted to the target column.
PollutionResult pollute_target_accuracy(const Dataset& ds,
                                        const TargetAccuracySpec& spec, RngStream rng);

/// Remove exact duplicates, then append per class round((rho-1) * n_cl)
/// duplicates of uniformly drawn rows, preserving the class ratios.
PollutionResult pollute_uniqueness(const Dataset& ds, const UniquenessSpec& spec,
                                   RngStream rng);

/// Compute the per-class counts realizing the requested degree of imbalance
/// for a polluted version with n_target rows (reduced to the next multiple of
/// the class count when needed).
BalancePlan plan_class_balance(const Dataset& ds, double lambda_cb,
                               std::int64_t n_target);

/// Draw each class's planned count of rows without replacement and emit the
/// deterministically shuffled result.
PollutionResult pollute_class_balance(const Dataset& ds, const BalancePlan& plan,
                                      RngStream rng);

} // namespace dqbench
