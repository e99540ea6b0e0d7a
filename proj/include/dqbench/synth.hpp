#pragma once

#include "dqbench/dataset.hpp"
#include "dqbench/manifest.hpp"

#include <cstdint>

namespace dqbench {

struct SynthFixture {
    Dataset data;
    DatasetManifest manifest;
};

/// Three well-separated classes over two numerical blob coordinates, one
/// class-correlated categorical hint and one noise categorical. Balanced,
/// n rows (divisible by 3).
SynthFixture make_classification_fixture(std::size_t n = 1200, std::uint64_t seed = 7);

/// Mixed-type linear regression data: two numerical features and one
/// categorical shifter, bounded noise, continuous target. Rows landing in
/// thinly populated target bins (under the manifest's bin step) are
/// discarded, so stratified splitting is always possible.
SynthFixture make_regression_fixture(std::size_t n = 1500, std::uint64_t seed = 11);

/// Many moderately separated numerical blobs, one per class: clustering
/// recovers them imperfectly, the way letter-shaped data behaves.
SynthFixture make_clustering_fixture(std::size_t n_per_class = 60,
                                     std::size_t classes = 26,
                                     double spread = 1.3,
                                     std::uint64_t seed = 13);

} // namespace dqbench
