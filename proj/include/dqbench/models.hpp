#pragma once

#include "dqbench/dataset.hpp"
#include "dqbench/encode.hpp"
#include "dqbench/rng.hpp"

#include <memory>
#include <vector>

namespace dqbench {

using Labels = std::vector<int>;

/// Constant prediction of the most frequent training class; ties break to
/// the smallest class id.
struct MajorityClassifier {
    int cls = 0;
    static MajorityClassifier fit(const Labels& y_train);
    Labels predict(std::size_t n) const;
};

/// Predicts labels sampled with the training class frequencies.
struct ClassRatioClassifier {
    std::vector<std::int64_t> counts; // per class id
    static ClassRatioClassifier fit(const Labels& y_train, int n_classes);
    Labels predict(std::size_t n, RngStream& rng) const;
};

/// Euclidean nearest-neighbour majority vote. Distance ties break by the
/// lower training row index, vote ties by the smaller class id.
Labels knn_classify(const Matrix& x_train, const Labels& y_train,
                    const Matrix& x_test, int k);

enum class CartTask { classify, regress };

// Greedy binary decision tree: axis-parallel splits minimizing Gini impurity
// (classification) or variance (regression); leaves predict the modal class
// or the mean.
class CartModel {
public:
    static CartModel fit(const Matrix& x, const std::vector<double>& y, CartTask task,
                         int max_depth, int min_leaf);
    static CartModel fit_classifier(const Matrix& x, const Labels& y, int max_depth,
                                    int min_leaf);

    std::vector<double> predict(const Matrix& x) const;
    Labels predict_classes(const Matrix& x) const;
    int depth() const;

private:
    struct Node {
        int feature = -1; // -1: leaf
        double threshold = 0.0;
        double value = 0.0; // leaf prediction
        int left = -1, right = -1;
    };
    std::vector<Node> nodes_;
    CartTask task_ = CartTask::classify;

    int build(const Matrix& x, const std::vector<double>& y,
              std::vector<std::size_t>& rows, int depth, int max_depth, int min_leaf);
};

/// Closed-form ridge regression on an intercept-augmented design; the
/// intercept is not penalized. alpha = 0 degrades to ordinary least squares
/// and reports singular systems as errors suggesting alpha > 0.
struct RidgeModel {
    std::vector<double> weights; // per input column
    double intercept = 0.0;
    static RidgeModel fit(const Matrix& x, const std::vector<double>& y, double alpha);
    std::vector<double> predict(const Matrix& x) const;
};

struct MeanRegressor {
    double mean = 0.0;
    static MeanRegressor fit(const std::vector<double>& y);
    std::vector<double> predict(std::size_t n) const;
};

struct KMeansResult {
    Labels assignments;
    double inertia = 0.0;                // within-cluster sum of squares
    std::vector<double> objective_trace; // per Lloyd iteration of the best restart
    int iterations = 0;
};

/// Lloyd's algorithm, best of n_init seeded restarts by final inertia. Empty
/// clusters are repaired by stealing the point farthest from its centroid.
KMeansResult kmeans_cluster(const Matrix& x, int k, RngStream rng, int max_iter = 100,
                            int n_init = 5);

} // namespace dqbench
