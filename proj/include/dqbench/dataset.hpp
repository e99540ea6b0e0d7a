#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dqbench {

/// Raised for anything wrong with input data: schema mismatches, unparseable
/// cells, infeasible pollution requests. Messages carry row/column
/// coordinates where applicable.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A cell is a typed value. Placeholders that stand in for missing entries are
// ordinary values of the same type (e.g. -1 or "empty"), never a NULL.
using Cell = std::variant<std::int64_t, double, std::string>;

std::string cell_to_string(const Cell& cell);
bool cell_less(const Cell& a, const Cell& b);

enum class ValueBase { text, integer };

struct CategoricalKind {
    ValueBase base = ValueBase::text;
    // Ordered, duplicate-free set of distinct non-missing values. Kept
    // sorted so class ids and tie-breaks are independent of row order.
    std::vector<Cell> domain;
};
struct NumericalKind {};
// Dates are carried as opaque text; they are excluded from pollution and
// always count as consistent.
struct DateKind {};

using FeatureKind = std::variant<CategoricalKind, NumericalKind, DateKind>;

bool is_categorical(const FeatureKind& kind);
bool is_numerical(const FeatureKind& kind);
bool is_date(const FeatureKind& kind);

struct ColumnMeta {
    std::string name;
    FeatureKind kind;
    std::optional<Cell> placeholder; // value representing a missing entry
    bool is_target = false;
};

struct Column {
    ColumnMeta meta;
    std::vector<Cell> cells;

    bool is_missing(std::size_t row) const {
        return meta.placeholder && cells[row] == *meta.placeholder;
    }
    const CategoricalKind& categorical() const;
    /// Recompute the categorical domain from observed non-missing cells.
    void refresh_domain();
};

// Column-major typed table with exactly one target column. Treated as
// immutable after construction: every operation returns a new value, so
// datasets can be shared read-only across parallel workers.
class Dataset {
public:
    std::vector<Column> columns;

    // Set by discretize_target: the continuous target values backing the
    // discretized class ids, kept row-aligned through all row operations.
    std::optional<std::vector<double>> original_target;

    std::size_t n_rows() const { return columns.empty() ? 0 : columns.front().cells.size(); }
    std::size_t feature_count() const; // non-target columns
    std::size_t column_count() const { return columns.size(); }

    std::size_t column_index(std::string_view name) const;
    std::size_t target_index() const;
    const Column& target() const { return columns[target_index()]; }
    Column& target() { return columns[target_index()]; }

    /// New dataset holding the given rows in order; indices may repeat.
    Dataset select_rows(std::span<const std::size_t> rows) const;

    /// Exact serialization of one full row (all columns, target included);
    /// equal keys iff the rows are exact duplicates.
    std::string row_key(std::size_t row) const;

    /// Distinct row indices in first-occurrence order.
    std::vector<std::size_t> deduplicated_row_indices() const;

    /// Enforce the structural invariants; throws DataError with coordinates.
    void validate() const;
};

/// A dataset together with the snapshot it is measured against.
struct PairedDataset {
    Dataset current;
    Dataset ground_truth;
};

/// Deep-copy snapshot; the ground truth stays fixed while current is mutated.
PairedDataset snapshot_ground_truth(const Dataset& ds);

/// round-half-up fraction-to-count conversion used by all polluters.
std::size_t round_count(double fraction, std::size_t n);

} // namespace dqbench
