#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dqbench {

// Deterministic, path-derived random stream. Two streams with the same
// (master_seed, path) produce the same draw sequence on every platform and
// under any thread interleaving; streams with different paths are
// statistically independent. Labels are hashed with length framing, so
// ["a","b"] and ["ab"] derive different streams.
class RngStream {
public:
    RngStream() : RngStream(0, {}) {}
    explicit RngStream(std::uint64_t master_seed,
                       std::vector<std::string> path = {});

    /// Fresh stream for the extended path; independent of this stream's
    /// current position.
    RngStream child(std::string_view label) const;

    std::uint64_t next_u64();

    /// Uniform in [0, 1).
    double next_double();

    /// Uniform in [0, upper); upper must be > 0. Rejection sampled, no
    /// modulo bias.
    std::size_t uniform_index(std::size_t upper);

    /// Uniform integer in [lo, hi], inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    /// Box-Muller normal draw.
    double normal(double mu, double sigma);

    /// Fisher-Yates permutation of 0..n-1.
    std::vector<std::size_t> permutation(std::size_t n);

    std::uint64_t master_seed() const { return master_seed_; }
    const std::vector<std::string>& path() const { return path_; }

private:
    void reseed();

    std::uint64_t master_seed_ = 0;
    std::vector<std::string> path_;
    std::array<std::uint64_t, 4> state_{};
    bool has_cached_normal_ = false;
    double cached_normal_ = 0.0;
};

/// Derive the stream for (master_seed, path).
RngStream derive_rng(std::uint64_t master_seed, std::span<const std::string> path);

} // namespace dqbench
