#pragma once

#include "dqbench/dataset.hpp"

#include <span>
#include <string>
#include <vector>

namespace dqbench {

/// Dense row-major matrix of doubles.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    std::span<const double> row(std::size_t r) const {
        return {data.data() + r * cols, cols};
    }
};

/// Provenance of one encoded output column.
struct EncodedColumn {
    std::string source_name;
    std::optional<Cell> category; // nullopt -> numeric passthrough
    bool is_placeholder = false;  // indicator for the missing-value placeholder
};

// Feature encoding plan: each categorical (and date) feature expands into one
// indicator column per observed category, plus one for the placeholder when
// present; numerical features pass through; the target is excluded. Fitting
// on several datasets takes the union of observed categories so train and
// test land in the same space; categories unseen at fit time encode as an
// all-zero block.
struct OneHotMap {
    std::vector<EncodedColumn> out_columns;
};

OneHotMap fit_one_hot(std::span<const Dataset* const> datasets);
OneHotMap fit_one_hot(const Dataset& ds);
Matrix apply_one_hot(const Dataset& ds, const OneHotMap& map);
std::pair<Matrix, OneHotMap> one_hot_encode(const Dataset& ds);

/// Replace a numerical target by the class id floor(value / bin_step). The
/// continuous values are retained on the dataset for inverse lookup.
Dataset discretize_target(const Dataset& ds, double bin_step);

/// Restore the continuous target retained by discretize_target.
Dataset undiscretize_target(const Dataset& ds);

/// Remove the rows of every target class with fewer than min_count samples.
Dataset drop_small_classes(const Dataset& ds, std::size_t min_count);

/// Class ids for a classified (categorical) target: the index of each row's
/// target value in the sorted domain. Values must be in the domain.
std::vector<int> target_class_ids(const Dataset& ds);

/// Continuous regression targets: the retained originals when the target was
/// discretized, otherwise the numerical target column itself.
std::vector<double> regression_targets(const Dataset& ds);

} // namespace dqbench
