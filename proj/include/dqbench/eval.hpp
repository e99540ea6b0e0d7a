#pragma once

#include <cstdint>
#include <vector>

namespace dqbench {

/// Unweighted mean of per-class F1 over the classes present in y_true.
/// Classes with undefined precision or recall contribute 0.
double macro_f1(const std::vector<int>& y_true, const std::vector<int>& y_pred);

/// Coefficient of determination, 1 - SS_res / SS_tot. Negative when the
/// prediction is worse than the mean; errors when y_true has zero variance.
double r2(const std::vector<double>& y_true, const std::vector<double>& y_pred);

/// Mutual information of two labelings, natural log.
double mutual_information(const std::vector<int>& a, const std::vector<int>& b);

/// Shannon entropy of a labeling, natural log.
double entropy(const std::vector<int>& labels);

/// Expected mutual information of two labelings with the given cluster sizes
/// under the fixed-marginal permutation model, via the exact hypergeometric
/// sum.
double expected_mutual_information(const std::vector<std::int64_t>& sizes_a,
                                   const std::vector<std::int64_t>& sizes_b,
                                   std::int64_t n);

/// Adjusted mutual information: (MI - E[MI]) / (mean(H_a, H_b) - E[MI]).
/// Two single-cluster labelings score 1; chance-level agreement scores ~0.
double adjusted_mutual_information(const std::vector<int>& a,
                                   const std::vector<int>& b);

} // namespace dqbench
