#include "specden/reference.hpp"

#include "specden/chebyshev.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace specden {

EigenSpectrum dense_spectrum(const SymmetricOperator& a) {
    const Eigen::Index n = a.dim();
    if (n > 20000) {
        throw std::invalid_argument(
            "dense_spectrum: dimension " + std::to_string(n) +
            " exceeds the dense reference guard of 20000");
    }
    Eigen::MatrixXd dense(n, n);
    const Eigen::Index chunk = 256;
    for (Eigen::Index j = 0; j < n; j += chunk) {
        const Eigen::Index width = std::min(chunk, n - j);
        Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(n, width);
        for (Eigen::Index c = 0; c < width; ++c) {
            basis(j + c, c) = 1.0;
        }
        Eigen::MatrixXd block(n, width);
        a.apply_block(basis, block);
        dense.middleCols(j, width) = block;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(dense, Eigen::EigenvaluesOnly);
    if (eig.info() != Eigen::Success) {
        throw std::runtime_error("dense_spectrum: eigensolver failed to converge");
    }
    EigenSpectrum out;
    out.eigenvalues.assign(eig.eigenvalues().data(), eig.eigenvalues().data() + n);
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
    return out;
}

DensityEstimate exact_density(const EigenSpectrum& spectrum, double sigma,
                              std::span<const double> grid) {
    const GaussianKernel kernel(sigma);
    const double n = static_cast<double>(spectrum.eigenvalues.size());
    if (spectrum.eigenvalues.empty()) {
        throw std::invalid_argument("exact_density: empty spectrum");
    }
    DensityEstimate out;
    out.grid.assign(grid.begin(), grid.end());
    out.values.resize(grid.size());
    out.config.sigma = sigma;
    out.config.grid = out.grid;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double sum = 0.0;
        for (double lambda : spectrum.eigenvalues) {
            sum += kernel(grid[i] - lambda);
        }
        out.values[i] = sum / n;
    }
    return out;
}

double l1_error(const DensityEstimate& est, const DensityEstimate& ref) {
    const std::size_t n_t = est.grid.size();
    if (n_t < 2 || ref.grid.size() != n_t) {
        throw std::invalid_argument("l1_error: grids must match and hold at least two nodes");
    }
    const double span = est.grid.back() - est.grid.front();
    const double spacing = span / static_cast<double>(n_t - 1);
    const double tol = 1e-9 * std::max(1.0, std::abs(span));
    for (std::size_t i = 0; i < n_t; ++i) {
        if (std::abs(est.grid[i] - ref.grid[i]) > tol) {
            throw std::invalid_argument("l1_error: estimate and reference grids differ");
        }
        if (i > 0 && std::abs(est.grid[i] - est.grid[i - 1] - spacing) > tol) {
            throw std::invalid_argument("l1_error: grid is not uniformly spaced");
        }
    }
    // Midpoint-rule weight per node, matching the convention the densities
    // are compared under: h_t = (b - a)/n_t with the n_t nodes as quadrature
    // points.
    const double h_t = span / static_cast<double>(n_t);
    double sum = 0.0;
    for (std::size_t i = 0; i < n_t; ++i) {
        sum += std::abs(est.values[i] - ref.values[i]);
    }
    return h_t * sum;
}

} // namespace specden
