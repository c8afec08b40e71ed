#pragma once

#include "specden/estimators.hpp"
#include "specden/operator.hpp"

#include <span>
#include <vector>

namespace specden {

struct EigenSpectrum {
    std::vector<double> eigenvalues; // sorted ascending
};

/// All eigenvalues of the operator via a full dense symmetric eigensolver.
/// The operator is densified through apply_block; dimensions above 20000 are
/// rejected since they have no practical exact reference.
EigenSpectrum dense_spectrum(const SymmetricOperator& a);

/// Exact smoothed spectral density: values_i = n^-1 sum_j g_sigma(t_i - lambda_j).
DensityEstimate exact_density(const EigenSpectrum& spectrum, double sigma,
                              std::span<const double> grid);

/// Composite midpoint L1 distance h_t * sum_i |est_i - ref_i| on a shared
/// uniform grid, with node weight h_t = (grid_max - grid_min) / n_t.
double l1_error(const DensityEstimate& est, const DensityEstimate& ref);

} // namespace specden
