#pragma once

#include <Eigen/Core>

#include <cstdint>

namespace specden {

/// Deterministic standard-normal stream. State is a xoshiro256++ generator
/// whose four words are drawn from a splitmix64 sequence initialized with
/// seed XOR (stream_id + 1) * 0x9E3779B97F4A7C15, so distinct stream ids give
/// statistically independent streams for the same seed. Normal variates come
/// from Box-Muller over 53-bit uniforms; the sequence is identical across
/// platforms up to libm rounding of exp/log/sin/cos.
class GaussianStream {
public:
    GaussianStream(std::uint64_t seed, std::uint64_t stream_id);

    double next();
    std::uint64_t next_u64();

private:
    std::uint64_t state_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// n-by-k block of independent standard normal entries, filled column by
/// column from GaussianStream(seed, stream_id). k = 0 yields an empty block.
Eigen::MatrixXd sample_gaussian(Eigen::Index n, Eigen::Index k, std::uint64_t seed,
                                std::uint64_t stream_id);

} // namespace specden
