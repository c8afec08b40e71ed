#include "specden/random.hpp"

#include <cmath>
#include <stdexcept>

namespace specden {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace

GaussianStream::GaussianStream(std::uint64_t seed, std::uint64_t stream_id) {
    std::uint64_t sm = seed ^ ((stream_id + 1) * 0x9E3779B97F4A7C15ULL);
    for (auto& word : state_) {
        word = splitmix64(sm);
    }
}

std::uint64_t GaussianStream::next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double GaussianStream::next() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // u1 in (0,1] so the logarithm stays finite.
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

Eigen::MatrixXd sample_gaussian(Eigen::Index n, Eigen::Index k, std::uint64_t seed,
                                std::uint64_t stream_id) {
    if (n < 0 || k < 0) {
        throw std::invalid_argument("sample_gaussian: dimensions must be non-negative");
    }
    Eigen::MatrixXd block(n, k);
    GaussianStream stream(seed, stream_id);
    for (Eigen::Index j = 0; j < k; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            block(i, j) = stream.next();
        }
    }
    return block;
}

} // namespace specden
