#include "specden/hamiltonian.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace specden {

namespace {

double well_potential(double x, double y, double z, const std::vector<std::array<double, 3>>& centers,
                      double period, double v0, double lambda) {
    double v = 0.0;
    for (const auto& c : centers) {
        // 3^3 nearest periodic images of each center; farther images decay
        // far below double precision.
        for (int ox = -1; ox <= 1; ++ox) {
            for (int oy = -1; oy <= 1; ++oy) {
                for (int oz = -1; oz <= 1; ++oz) {
                    const double dx = x - c[0] - ox * period;
                    const double dy = y - c[1] - oy * period;
                    const double dz = z - c[2] - oz * period;
                    v += v0 * std::exp(-lambda * (dx * dx + dy * dy + dz * dz));
                }
            }
        }
    }
    return v;
}

} // namespace

SparseSymmetric build_hamiltonian(int n_c, double length, double h, double v0, double lambda) {
    if (n_c < 1) {
        throw std::invalid_argument("build_hamiltonian: n_c must be positive");
    }
    if (!(length > 0.0) || !(h > 0.0)) {
        throw std::invalid_argument("build_hamiltonian: cell size and grid width must be positive");
    }
    const double ratio = length / h;
    const double rounded = std::round(ratio);
    if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * ratio) {
        throw std::invalid_argument("build_hamiltonian: L/h must be a positive integer, got L/h = " +
                                    std::to_string(ratio));
    }
    const Eigen::Index points = static_cast<Eigen::Index>(rounded) * n_c; // per dimension
    const Eigen::Index n = points * points * points;
    const double period = n_c * length;
    const double inv_h2 = 1.0 / (h * h);

    std::vector<std::array<double, 3>> centers;
    centers.reserve(static_cast<std::size_t>(n_c) * n_c * n_c);
    for (int i = 0; i < n_c; ++i) {
        for (int j = 0; j < n_c; ++j) {
            for (int k = 0; k < n_c; ++k) {
                centers.push_back({(i + 0.5) * length, (j + 0.5) * length, (k + 0.5) * length});
            }
        }
    }

    auto index_of = [points](Eigen::Index ix, Eigen::Index iy, Eigen::Index iz) {
        return ix + points * (iy + points * iz); // lexicographic, x fastest
    };

    std::vector<Eigen::Index> row_offsets;
    std::vector<Eigen::Index> cols;
    std::vector<double> values;
    row_offsets.reserve(static_cast<std::size_t>(n) + 1);
    cols.reserve(static_cast<std::size_t>(7 * n));
    values.reserve(static_cast<std::size_t>(7 * n));
    row_offsets.push_back(0);

    for (Eigen::Index iz = 0; iz < points; ++iz) {
        for (Eigen::Index iy = 0; iy < points; ++iy) {
            for (Eigen::Index ix = 0; ix < points; ++ix) {
                const double v =
                    well_potential(ix * h, iy * h, iz * h, centers, period, v0, lambda);
                // Homogeneous Dirichlet walls: out-of-range stencil neighbors
                // are dropped. Columns are emitted in ascending index order.
                if (iz > 0) {
                    cols.push_back(index_of(ix, iy, iz - 1));
                    values.push_back(-inv_h2);
                }
                if (iy > 0) {
                    cols.push_back(index_of(ix, iy - 1, iz));
                    values.push_back(-inv_h2);
                }
                if (ix > 0) {
                    cols.push_back(index_of(ix - 1, iy, iz));
                    values.push_back(-inv_h2);
                }
                cols.push_back(index_of(ix, iy, iz));
                values.push_back(6.0 * inv_h2 + v);
                if (ix + 1 < points) {
                    cols.push_back(index_of(ix + 1, iy, iz));
                    values.push_back(-inv_h2);
                }
                if (iy + 1 < points) {
                    cols.push_back(index_of(ix, iy + 1, iz));
                    values.push_back(-inv_h2);
                }
                if (iz + 1 < points) {
                    cols.push_back(index_of(ix, iy, iz + 1));
                    values.push_back(-inv_h2);
                }
                row_offsets.push_back(static_cast<Eigen::Index>(cols.size()));
            }
        }
    }
    return SparseSymmetric(n, std::move(row_offsets), std::move(cols), std::move(values));
}

} // namespace specden
