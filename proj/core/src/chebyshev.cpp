#include "specden/chebyshev.hpp"

#include "specden/dct.hpp"

#include <cmath>
#include <stdexcept>

namespace specden {

GaussianKernel::GaussianKernel(double sigma) : sigma(sigma) {
    if (!(sigma > 0.0)) {
        throw std::invalid_argument("GaussianKernel: sigma must be positive");
    }
}

double GaussianKernel::operator()(double s) const {
    return std::exp(-0.5 * s * s / (sigma * sigma)) / (sigma * std::sqrt(2.0 * M_PI));
}

double GaussianKernel::sqrt_value(double s) const {
    return std::exp(-0.25 * s * s / (sigma * sigma)) / std::sqrt(sigma * std::sqrt(2.0 * M_PI));
}

ErrorBound error_bound_standard(double sigma, int degree) {
    if (!(sigma > 0.0)) {
        throw std::invalid_argument("error_bound_standard: sigma must be positive");
    }
    if (degree < 0) {
        throw std::invalid_argument("error_bound_standard: degree must be non-negative");
    }
    const double log_value = std::log(2.0) + 0.5 * std::log(2.0 * M_E / M_PI) -
                             2.0 * std::log(sigma) - degree * std::log1p(sigma);
    return {std::exp(log_value), ErrorBound::Kind::standard};
}

ErrorBound error_bound_nonneg(double sigma, int degree) {
    if (degree < 0 || degree % 2 != 0) {
        throw std::invalid_argument("error_bound_nonneg: degree must be even and non-negative");
    }
    const double e = error_bound_standard(std::sqrt(2.0) * sigma, degree / 2).value;
    const double value = 4.0 * std::sqrt(2.0) * (1.0 + sigma * std::sqrt(M_PI) * e) * e;
    return {value, ErrorBound::Kind::nonneg};
}

std::vector<double> interpolate_kernel(const std::function<double(double)>& f, double t,
                                       int degree) {
    if (degree < 1) {
        throw std::invalid_argument("interpolate_kernel: degree must be at least 1");
    }
    const std::vector<double> nodes = chebyshev_nodes(degree);
    std::vector<double> samples(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        samples[i] = f(t - nodes[i]);
    }
    return dct_i(samples);
}

NonnegKernelCoeffs nonneg_kernel_coeffs(double sigma, double t, int degree) {
    if (degree < 2 || degree % 2 != 0) {
        throw std::invalid_argument("nonneg_kernel_coeffs: degree must be even and >= 2");
    }
    const GaussianKernel kernel(sigma);
    const std::vector<double> xi =
        interpolate_kernel([&kernel](double s) { return kernel.sqrt_value(s); }, t, degree / 2);
    NonnegKernelCoeffs out;
    out.mu_bar = square_coeffs(xi);
    out.nu_bar = square_coeffs(out.mu_bar);
    return out;
}

KernelTables build_tables(double sigma, std::span<const double> grid, int degree) {
    if (grid.empty()) {
        throw std::invalid_argument("build_tables: empty parameter grid");
    }
    for (double t : grid) {
        if (!(t >= -1.0 && t <= 1.0)) {
            throw std::invalid_argument("build_tables: grid values must lie in [-1,1]");
        }
    }
    const auto n_t = static_cast<Eigen::Index>(grid.size());
    KernelTables tables;
    tables.mu_bar.degree = degree;
    tables.nu_bar.degree = 2 * degree;
    tables.mu_bar.grid.assign(grid.begin(), grid.end());
    tables.nu_bar.grid.assign(grid.begin(), grid.end());
    tables.mu_bar.coeffs.resize(n_t, degree + 1);
    tables.nu_bar.coeffs.resize(n_t, 2 * degree + 1);
    for (Eigen::Index i = 0; i < n_t; ++i) {
        const NonnegKernelCoeffs row = nonneg_kernel_coeffs(sigma, grid[static_cast<std::size_t>(i)], degree);
        tables.mu_bar.coeffs.row(i) =
            Eigen::Map<const Eigen::RowVectorXd>(row.mu_bar.data(), degree + 1);
        tables.nu_bar.coeffs.row(i) =
            Eigen::Map<const Eigen::RowVectorXd>(row.nu_bar.data(), 2 * degree + 1);
    }
    return tables;
}

} // namespace specden
