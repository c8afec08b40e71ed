#include "specden/reference.hpp"
#include "specden/chebyshev.hpp"
#include "specden/operator.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace specden;

namespace {

class HugeFakeOperator final : public SymmetricOperator {
public:
    Eigen::Index dim() const override { return 20001; }
    void apply_block(const Eigen::Ref<const Eigen::MatrixXd>&,
                     Eigen::Ref<Eigen::MatrixXd>) const override {
        throw std::logic_error("should not be applied");
    }
};

} // namespace

TEST_CASE("dense_spectrum sorts eigenvalues ascending") {
    Eigen::MatrixXd diag = Eigen::MatrixXd::Zero(3, 3);
    diag(0, 0) = 3.0;
    diag(1, 1) = 1.0;
    diag(2, 2) = 2.0;
    const EigenSpectrum spectrum = dense_spectrum(DenseSymmetric(diag));
    CHECK(spectrum.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(spectrum.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(spectrum.eigenvalues[2] == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("dense_spectrum knows the 2x2 swap matrix") {
    Eigen::MatrixXd swap(2, 2);
    swap << 0.0, 1.0, 1.0, 0.0;
    const EigenSpectrum spectrum = dense_spectrum(DenseSymmetric(swap));
    CHECK(spectrum.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(spectrum.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("dense_spectrum enforces the dimension guard") {
    CHECK_THROWS_WITH_AS(dense_spectrum(HugeFakeOperator()), doctest::Contains("20000"),
                         std::invalid_argument);
}

TEST_CASE("exact_density point values") {
    const double sigma = 0.2;
    EigenSpectrum one;
    one.eigenvalues = {0.0};
    const std::vector<double> at_zero = {0.0};
    CHECK(exact_density(one, sigma, at_zero).values[0] ==
          doctest::Approx(1.0 / (sigma * std::sqrt(2.0 * M_PI))).epsilon(1e-14));

    EigenSpectrum pair;
    pair.eigenvalues = {-0.4, 0.4};
    const GaussianKernel kernel(sigma);
    CHECK(exact_density(pair, sigma, at_zero).values[0] ==
          doctest::Approx(kernel(0.4)).epsilon(1e-14));
}

TEST_CASE("exact_density integrates to one") {
    const double sigma = 0.05;
    EigenSpectrum spectrum;
    for (int i = 0; i < 40; ++i) {
        spectrum.eigenvalues.push_back(-1.0 + 2.0 * i / 39.0);
    }
    const int n_nodes = 4001;
    std::vector<double> grid(n_nodes);
    const double lo = -1.0 - 6.0 * sigma, hi = 1.0 + 6.0 * sigma;
    for (int i = 0; i < n_nodes; ++i) {
        grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n_nodes - 1.0);
    }
    const DensityEstimate density = exact_density(spectrum, sigma, grid);
    double integral = 0.0;
    for (double v : density.values) {
        integral += v;
    }
    integral *= (hi - lo) / n_nodes;
    CHECK(integral >= 0.999);
    CHECK(integral <= 1.001);
}

TEST_CASE("l1_error on simple cases") {
    DensityEstimate est, ref;
    const int n_t = 100;
    for (int i = 0; i < n_t; ++i) {
        const double t = -1.0 + 2.0 * i / (n_t - 1.0);
        est.grid.push_back(t);
        ref.grid.push_back(t);
        est.values.push_back(0.25);
        ref.values.push_back(0.0);
    }
    SUBCASE("identical estimates have zero error") {
        CHECK(l1_error(est, est) == 0.0);
    }
    SUBCASE("a constant offset integrates to 2|c|") {
        CHECK(l1_error(est, ref) == doctest::Approx(2.0 * 0.25).epsilon(1e-13));
    }
    SUBCASE("metric properties") {
        CHECK(l1_error(est, ref) == l1_error(ref, est));
        DensityEstimate mid = est;
        for (double& v : mid.values) {
            v = 0.1;
        }
        CHECK(l1_error(est, ref) <= l1_error(est, mid) + l1_error(mid, ref) + 1e-15);
    }
    SUBCASE("grid mismatch is rejected") {
        DensityEstimate shifted = ref;
        shifted.grid[3] += 0.1;
        CHECK_THROWS(l1_error(est, shifted));
    }
    SUBCASE("non-uniform grids are rejected") {
        DensityEstimate warped = est;
        DensityEstimate warped_ref = ref;
        warped.grid[50] += 0.005;
        warped_ref.grid[50] += 0.005;
        CHECK_THROWS(l1_error(warped, warped_ref));
    }
}
