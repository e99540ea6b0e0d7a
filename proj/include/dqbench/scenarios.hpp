#pragma once

#include "dqbench/dataset.hpp"
#include "dqbench/polluters.hpp"
#include "dqbench/rng.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dqbench {

struct SplitResult {
    Dataset train;
    Dataset test;
    std::map<std::string, std::size_t> train_counts; // per class label

    /// Split provenance (seed path, fraction, per-class counts) as JSON.
    std::string manifest_json(double fraction, const RngStream& rng) const;
};

/// Per-class split: round(fraction * n_cl) rows to train, the rest to test,
/// chosen uniformly. The largest class is nudged by at most one row when that
/// brings the global train fraction closer to the request.
SplitResult stratified_split(const Dataset& ds, double train_fraction, RngStream rng);

/// One cell of the pollution grid.
struct GridPoint {
    Dimension dim = Dimension::completeness;
    double level = 0.0;      // fraction, variance, rho or degree of imbalance
    int representations = 0; // consistency only: k
};

/// The per-dimension level grids: fractions rise 0..1 in 0.1 steps
/// (consistency swept for k=2 and k=5), duplication factors walk 10/10..10/2
/// so nominal uniqueness falls 1.0..0.2 in 0.1 steps, and the degree of
/// imbalance rises 0..1 in 0.1 steps.
std::vector<GridPoint> quality_grid(Dimension dim);

/// One polluted train/test side: the clean input, the polluted output, and
/// everything needed to score quality against it.
struct ScenarioSide {
    Dataset clean;
    Dataset polluted;
    PollutionLog log;
    std::optional<RepresentationMap> repmap;
};

struct ScenarioRun {
    int scenario = 1; // 1: train polluted, 2: test polluted, 3: both
    GridPoint point;
    ScenarioSide train;
    ScenarioSide test;
};

/// Apply one grid point to one dataset. For class balance, n_target caps the
/// polluted size (defaults to a grid-safe size derived from the data).
ScenarioSide apply_pollution(const Dataset& ds, const GridPoint& point, RngStream rng,
                             std::optional<std::int64_t> n_target = std::nullopt);

/// Assemble one scenario: pollute the train side, the test side or both,
/// with independent sub-streams. Ground truths are the clean inputs.
ScenarioRun build_scenario(int scenario, const Dataset& clean_train,
                           const Dataset& clean_test, const GridPoint& point,
                           RngStream rng,
                           std::optional<std::int64_t> n_target_train = std::nullopt,
                           std::optional<std::int64_t> n_target_test = std::nullopt);

/// Post-pollution quality of one side, scored on the dimension that was
/// polluted (feature accuracy reports the categorical/numerical mean).
double measure_side_quality(const ScenarioSide& side, Dimension dim);

/// Quality of the run: the polluted side's score (train for scenarios 1 and
/// 3, test for scenario 2).
double measure_run_quality(const ScenarioRun& run);

/// Largest class-balance sample count that keeps every grid level feasible:
/// the heaviest planned class never exceeds twice the balanced share.
std::int64_t default_balance_sample_count(const Dataset& ds);

} // namespace dqbench
