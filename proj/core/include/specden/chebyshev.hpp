#pragma once

#include <Eigen/Core>

#include <functional>
#include <span>
#include <vector>

namespace specden {

/// Gaussian smoothing kernel of width sigma on the transformed [-1,1] axis.
struct GaussianKernel {
    double sigma;

    explicit GaussianKernel(double sigma);

    double operator()(double s) const;
    /// Pointwise square root of the kernel; proportional to a Gaussian of width sqrt(2)*sigma.
    double sqrt_value(double s) const;
};

struct ErrorBound {
    enum class Kind { standard, nonneg };
    double value = 0.0;
    Kind kind = Kind::standard;
};

/// Sup-norm bound 2*sqrt(2e/pi) * sigma^-2 * (1+sigma)^-m on the degree-m
/// Chebyshev interpolation error of the Gaussian kernel. Evaluated in log
/// space so that large m and small sigma do not overflow against each other.
ErrorBound error_bound_standard(double sigma, int degree);

/// L1 bound 4*sqrt(2) * (1 + sigma*sqrt(pi)*e) * e with e = E_{sqrt(2)*sigma, m/2}
/// for the non-negative degree-m approximation. Requires even degree.
ErrorBound error_bound_nonneg(double sigma, int degree);

/// Chebyshev coefficients (length degree+1) interpolating s -> f(t - s) at the
/// Chebyshev nodes: samples f(t - cos(pi*i/m)) and applies the DCT-I analysis.
std::vector<double> interpolate_kernel(const std::function<double(double)>& f, double t,
                                       int degree);

struct NonnegKernelCoeffs {
    std::vector<double> mu_bar; // degree m, pointwise non-negative polynomial
    std::vector<double> nu_bar; // degree 2m, exact square of mu_bar
};

/// Non-negative approximation of g_sigma(t - .): interpolates sqrt(g_sigma) up
/// to degree m/2 and squares it (degree m), then squares once more (degree 2m)
/// so that nu_bar represents exactly the square of the mu_bar polynomial.
/// Requires even degree >= 2.
NonnegKernelCoeffs nonneg_kernel_coeffs(double sigma, double t, int degree);

/// Per-parameter coefficient rows: row i holds the coefficients for grid[i].
struct CoefficientTable {
    int degree = 0;
    std::vector<double> grid;
    Eigen::MatrixXd coeffs; // n_t x (degree+1)
};

struct KernelTables {
    CoefficientTable mu_bar; // degree m
    CoefficientTable nu_bar; // degree 2m
};

/// Builds the mu_bar/nu_bar tables for all parameter values. Grid values must
/// lie in [-1,1]; degree must be even.
KernelTables build_tables(double sigma, std::span<const double> grid, int degree);

} // namespace specden
