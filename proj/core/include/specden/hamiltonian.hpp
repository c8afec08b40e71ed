#pragma once

#include "specden/operator.hpp"

namespace specden {

/// Second-order finite difference discretization of -Laplacian + V on the
/// cube of side n_c*L with grid width h and homogeneous Dirichlet walls,
/// where V is a sum of Gaussian wells v0*exp(-lambda*|x - c|^2) centered in
/// the n_c^3 cells (periodically extended to the nearest images). The grid is
/// ordered lexicographically with x fastest; the resulting matrix has
/// dimension (n_c*L/h)^3, diagonal entries 6/h^2 + V(x_i) and off-diagonal
/// stencil entries -1/h^2. Throws if L/h is not a positive integer.
SparseSymmetric build_hamiltonian(int n_c, double length, double h, double v0, double lambda);

} // namespace specden
