#pragma once

#include "specden/chebyshev.hpp"
#include "specden/operator.hpp"
#include "specden/random.hpp"

#include <cstdint>
#include <vector>

namespace specden {

struct EstimatorConfig {
    int degree = 0;              ///< even Chebyshev degree m
    Eigen::Index n_omega = 0;    ///< Nystrom sketch size
    Eigen::Index n_psi = 0;      ///< Girard-Hutchinson query count
    double sigma = 0.0;          ///< smoothing width > 0
    std::uint64_t seed = 0;
    double pinv_rel_threshold = 1e-5;
    double zero_density_threshold = 1e-5; ///< set to -inf to disable the guard
    std::vector<double> grid;    ///< ascending parameter values

    void validate() const;
};

/// Accumulators of the sketch loop. K1/K2/L1 are stored flattened, one column
/// per parameter value: column i of k1 is vec(Omega^T B(t_i) Omega) and so on.
struct SketchState {
    Eigen::Index n = 0;
    Eigen::Index n_omega = 0;
    Eigen::Index n_psi = 0;
    int degree = 0;
    Eigen::MatrixXd k1;  // (n_omega*n_omega) x n_t
    Eigen::MatrixXd k2;  // (n_omega*n_omega) x n_t
    Eigen::MatrixXd l1;  // (n_omega*n_psi) x n_t
    Eigen::VectorXd ell; // n_t
    std::int64_t matvec_count = 0;
};

struct DensityEstimate {
    std::vector<double> grid;
    std::vector<double> values;
    EstimatorConfig config;
    std::int64_t matvec_count = 0;
    double sketch_seconds = 0.0;
};

/// Girard-Hutchinson estimate Trace(Psi^T B Psi) / n_psi.
double hutchinson_trace(const SymmetricOperator& b, const Eigen::MatrixXd& psi);

/// K^+ M with K symmetrized as (K + K^T)/2 and eigenvalues of magnitude below
/// rel_threshold times the largest magnitude treated as zero.
Eigen::MatrixXd truncated_pinv_solve(const Eigen::MatrixXd& k, const Eigen::MatrixXd& m,
                                     double rel_threshold);

/// Runs the joint Chebyshev recurrence for degrees l = 0..2m and accumulates
/// K1, K2, L1 and ell for every parameter value. The operator must have its
/// spectrum in [-1,1] and the tables must match the config's grid and degree.
/// Consumes exactly (2m+1)*(n_omega+n_psi) matrix-vector products.
SketchState accumulate_sketch(const SymmetricOperator& a, const KernelTables& tables,
                              const EstimatorConfig& config);

/// Turns an accumulated sketch into density values:
///   value = Trace(K1^+ K2)/n + (ell - Trace(L1^T K1^+ L1))/(n*n_psi),
/// with the second term dropped when n_psi = 0 and the estimator reduced to
/// ell/(n*n_psi) when n_omega = 0. When n_omega > 0 and the nuclear norm
/// estimate Trace(K1)/n_omega falls below zero_density_threshold, the value
/// is set to exactly 0 instead of touching the pseudoinverse.
DensityEstimate evaluate_density(const SketchState& state, const EstimatorConfig& config);

/**
 Chebyshev-Nystrom++ smoothed spectral density estimation.

 Transforms the operator and the parameter grid onto [-1,1] using the given
 enclosing interval, rescales the smoothing width to 2*sigma/(b-a), builds the
 non-negative kernel tables, accumulates the sketch and evaluates the density.
 The returned values are rescaled by 2/(b-a) so they integrate correctly in
 the original spectral units.
*/
DensityEstimate chebyshev_nystrom_pp(const SymmetricOperator& a, const SpectralInterval& interval,
                                     const EstimatorConfig& config);

} // namespace specden
