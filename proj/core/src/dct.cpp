#include "specden/dct.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace specden {

namespace {

// FFTW REDFT00 of length n computes
//   y_k = x_0 + (-1)^k x_{n-1} + 2 sum_{j=1}^{n-2} x_j cos(pi*j*k/(n-1)),
// which is self-inverse up to the factor 2(n-1). Plans are cached per length;
// planning is not thread-safe, execution on distinct arrays is.
struct CachedPlan {
    std::vector<double> in;
    std::vector<double> out;
    fftw_plan plan = nullptr;
};

fftw_plan plan_for_length(int n) {
    static std::mutex mutex;
    static std::unordered_map<int, CachedPlan> cache;

    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) {
        return it->second.plan;
    }
    CachedPlan entry;
    entry.in.resize(static_cast<std::size_t>(n));
    entry.out.resize(static_cast<std::size_t>(n));
    entry.plan = fftw_plan_r2r_1d(n, entry.in.data(), entry.out.data(),
                                  FFTW_REDFT00, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (entry.plan == nullptr) {
        throw std::runtime_error("dct: FFTW failed to create a REDFT00 plan of length " +
                                 std::to_string(n));
    }
    return cache.emplace(n, std::move(entry)).first->second.plan;
}

std::vector<double> redft00(std::span<const double> input) {
    const int n = static_cast<int>(input.size());
    fftw_plan plan = plan_for_length(n);
    std::vector<double> in(input.begin(), input.end());
    std::vector<double> out(input.size());
    fftw_execute_r2r(plan, in.data(), out.data());
    return out;
}

} // namespace

std::vector<double> chebyshev_nodes(int degree) {
    if (degree < 1) {
        throw std::invalid_argument("chebyshev_nodes: degree must be at least 1");
    }
    std::vector<double> nodes(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i <= degree; ++i) {
        nodes[static_cast<std::size_t>(i)] = std::cos(M_PI * i / degree);
    }
    return nodes;
}

std::vector<double> chebyshev_synthesis(std::span<const double> coeffs) {
    if (coeffs.size() < 2) {
        throw std::invalid_argument("chebyshev_synthesis: need at least two coefficients");
    }
    // Halving the interior terms turns REDFT00 into the plain cosine sum.
    std::vector<double> halved(coeffs.begin(), coeffs.end());
    for (std::size_t l = 1; l + 1 < halved.size(); ++l) {
        halved[l] *= 0.5;
    }
    return redft00(halved);
}

std::vector<double> dct_i(std::span<const double> values) {
    if (values.size() < 2) {
        throw std::invalid_argument("dct_i: need at least two samples");
    }
    const std::size_t m = values.size() - 1;
    std::vector<double> out = redft00(values);
    const double scale = 1.0 / static_cast<double>(2 * m);
    out.front() *= scale;
    out.back() *= scale;
    for (std::size_t l = 1; l < m; ++l) {
        out[l] *= 2.0 * scale;
    }
    return out;
}

std::vector<double> square_coeffs(std::span<const double> mu) {
    if (mu.size() < 2) {
        throw std::invalid_argument("square_coeffs: need degree at least 1");
    }
    const std::size_t m = mu.size() - 1;
    std::vector<double> padded(2 * m + 1, 0.0);
    std::copy(mu.begin(), mu.end(), padded.begin());
    std::vector<double> values = chebyshev_synthesis(padded);
    for (double& v : values) {
        v *= v;
    }
    return dct_i(values);
}

double evaluate_series(std::span<const double> coeffs, double s) {
    if (coeffs.empty()) {
        return 0.0;
    }
    double b1 = 0.0;
    double b2 = 0.0;
    for (std::size_t l = coeffs.size(); l-- > 1;) {
        const double b0 = coeffs[l] + 2.0 * s * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return coeffs[0] + s * b1 - b2;
}

} // namespace specden
