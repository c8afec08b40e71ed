#include "specden/estimators.hpp"

#include <Eigen/Dense>

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace specden {

void EstimatorConfig::validate() const {
    if (degree < 2 || degree % 2 != 0) {
        throw std::invalid_argument("EstimatorConfig: degree must be even and >= 2");
    }
    if (n_omega < 0 || n_psi < 0 || n_omega + n_psi < 1) {
        throw std::invalid_argument("EstimatorConfig: need n_omega + n_psi >= 1");
    }
    if (!(sigma > 0.0)) {
        throw std::invalid_argument("EstimatorConfig: sigma must be positive");
    }
    if (!(pinv_rel_threshold > 0.0)) {
        throw std::invalid_argument("EstimatorConfig: pinv_rel_threshold must be positive");
    }
    if (grid.empty()) {
        throw std::invalid_argument("EstimatorConfig: parameter grid is empty");
    }
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i - 1] <= grid[i])) {
            throw std::invalid_argument("EstimatorConfig: grid must be sorted ascending");
        }
    }
}

double hutchinson_trace(const SymmetricOperator& b, const Eigen::MatrixXd& psi) {
    if (psi.cols() < 1) {
        throw std::invalid_argument("hutchinson_trace: need at least one query vector");
    }
    const Eigen::MatrixXd b_psi = b.apply(psi);
    return (psi.array() * b_psi.array()).sum() / static_cast<double>(psi.cols());
}

Eigen::MatrixXd truncated_pinv_solve(const Eigen::MatrixXd& k, const Eigen::MatrixXd& m,
                                     double rel_threshold) {
    if (k.rows() != k.cols()) {
        throw std::invalid_argument("truncated_pinv_solve: K must be square");
    }
    if (k.rows() != m.rows()) {
        throw std::invalid_argument("truncated_pinv_solve: K and M row counts differ");
    }
    if (k.rows() == 0) {
        return Eigen::MatrixXd(0, m.cols());
    }
    const Eigen::MatrixXd symmetrized = 0.5 * (k + k.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(symmetrized);
    if (eig.info() != Eigen::Success) {
        throw std::runtime_error("truncated_pinv_solve: eigendecomposition failed");
    }
    const Eigen::VectorXd& lambda = eig.eigenvalues();
    const double cutoff = rel_threshold * lambda.cwiseAbs().maxCoeff();
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(lambda.size());
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        if (std::abs(lambda[i]) >= cutoff && lambda[i] != 0.0) {
            inv[i] = 1.0 / lambda[i];
        }
    }
    return eig.eigenvectors() * inv.asDiagonal() * (eig.eigenvectors().transpose() * m);
}

SketchState accumulate_sketch(const SymmetricOperator& a, const KernelTables& tables,
                              const EstimatorConfig& config) {
    config.validate();
    const int m = config.degree;
    if (tables.mu_bar.degree != m || tables.nu_bar.degree != 2 * m) {
        throw std::invalid_argument("accumulate_sketch: table degrees do not match the config");
    }
    const auto n_t = static_cast<Eigen::Index>(config.grid.size());
    if (tables.mu_bar.coeffs.rows() != n_t || tables.nu_bar.coeffs.rows() != n_t) {
        throw std::invalid_argument("accumulate_sketch: table grid size does not match the config");
    }
    const Eigen::Index n = a.dim();
    const Eigen::Index n_omega = config.n_omega;
    const Eigen::Index n_psi = config.n_psi;
    const Eigen::Index width = n_omega + n_psi;

    const Eigen::MatrixXd omega = sample_gaussian(n, n_omega, config.seed, 0);
    const Eigen::MatrixXd psi = sample_gaussian(n, n_psi, config.seed, 1);

    SketchState state;
    state.n = n;
    state.n_omega = n_omega;
    state.n_psi = n_psi;
    state.degree = m;
    state.k1 = Eigen::MatrixXd::Zero(n_omega * n_omega, n_t);
    state.k2 = Eigen::MatrixXd::Zero(n_omega * n_omega, n_t);
    state.l1 = Eigen::MatrixXd::Zero(n_omega * n_psi, n_t);
    state.ell = Eigen::VectorXd::Zero(n_t);

    // Joint three-term recurrence on [V | W]; vw2 holds T_l(A)[Omega | Psi].
    Eigen::MatrixXd vw1 = Eigen::MatrixXd::Zero(n, width);
    Eigen::MatrixXd vw2(n, width);
    vw2.leftCols(n_omega) = omega;
    vw2.rightCols(n_psi) = psi;
    Eigen::MatrixXd vw3(n, width);

    Eigen::MatrixXd xy(n_omega, width);
    const auto& mu = tables.mu_bar.coeffs;
    const auto& nu = tables.nu_bar.coeffs;

    for (int l = 0; l <= 2 * m; ++l) {
        if (n_omega > 0) {
            xy.noalias() = omega.transpose() * vw2;
            const auto x_vec = Eigen::Map<const Eigen::VectorXd>(xy.data(), n_omega * n_omega);
            state.k2.noalias() += x_vec * nu.col(l).transpose();
            if (l <= m) {
                state.k1.noalias() += x_vec * mu.col(l).transpose();
                if (n_psi > 0) {
                    const auto y_vec = Eigen::Map<const Eigen::VectorXd>(
                        xy.data() + n_omega * n_omega, n_omega * n_psi);
                    state.l1.noalias() += y_vec * mu.col(l).transpose();
                }
            }
        }
        if (n_psi > 0 && l <= m) {
            const double z = (psi.array() * vw2.rightCols(n_psi).array()).sum();
            state.ell.noalias() += z * mu.col(l);
        }
        a.apply_block(vw2, vw3);
        state.matvec_count += width;
        if (l == 0) {
            std::swap(vw1, vw2);
            std::swap(vw2, vw3);
        } else {
            vw3 = 2.0 * vw3 - vw1;
            std::swap(vw1, vw2);
            std::swap(vw2, vw3);
        }
    }
    return state;
}

DensityEstimate evaluate_density(const SketchState& state, const EstimatorConfig& config) {
    config.validate();
    const auto n_t = static_cast<Eigen::Index>(config.grid.size());
    if (state.k1.cols() != n_t || state.ell.size() != n_t) {
        throw std::invalid_argument("evaluate_density: sketch does not match the config grid");
    }
    const Eigen::Index n_omega = state.n_omega;
    const Eigen::Index n_psi = state.n_psi;
    const double n = static_cast<double>(state.n);

    DensityEstimate out;
    out.grid = config.grid;
    out.values.resize(static_cast<std::size_t>(n_t));
    out.config = config;
    out.matvec_count = state.matvec_count;

    for (Eigen::Index i = 0; i < n_t; ++i) {
        double value = 0.0;
        if (n_omega == 0) {
            value = state.ell[i] / (n * static_cast<double>(n_psi));
        } else {
            const auto k1 =
                Eigen::Map<const Eigen::MatrixXd>(state.k1.col(i).data(), n_omega, n_omega);
            if (k1.trace() / static_cast<double>(n_omega) < config.zero_density_threshold) {
                out.values[static_cast<std::size_t>(i)] = 0.0;
                continue;
            }
            const auto k2 =
                Eigen::Map<const Eigen::MatrixXd>(state.k2.col(i).data(), n_omega, n_omega);
            value = truncated_pinv_solve(k1, k2, config.pinv_rel_threshold).trace() / n;
            if (n_psi > 0) {
                const auto l1 =
                    Eigen::Map<const Eigen::MatrixXd>(state.l1.col(i).data(), n_omega, n_psi);
                const Eigen::MatrixXd solved =
                    truncated_pinv_solve(k1, l1, config.pinv_rel_threshold);
                const double correction = state.ell[i] - (l1.array() * solved.array()).sum();
                value += correction / (n * static_cast<double>(n_psi));
            }
        }
        out.values[static_cast<std::size_t>(i)] = value;
    }
    return out;
}

DensityEstimate chebyshev_nystrom_pp(const SymmetricOperator& a, const SpectralInterval& interval,
                                     const EstimatorConfig& config) {
    config.validate();
    const AffineTransformed transformed = affine_transform(a, interval);
    const double jacobian = 2.0 / interval.width();

    EstimatorConfig inner = config;
    inner.sigma = config.sigma * jacobian;
    inner.grid.resize(config.grid.size());
    // The affine map can overshoot the endpoints by a few ulps when the
    // interval sits far from the origin; snap those back onto [-1,1].
    const double overshoot =
        64.0 * std::numeric_limits<double>::epsilon() *
        std::max(1.0, std::abs(interval.a + interval.b) / interval.width());
    for (std::size_t i = 0; i < config.grid.size(); ++i) {
        double s = transformed.map(config.grid[i]);
        if (s > 1.0 && s <= 1.0 + overshoot) {
            s = 1.0;
        } else if (s < -1.0 && s >= -1.0 - overshoot) {
            s = -1.0;
        }
        inner.grid[i] = s;
    }

    const KernelTables tables = build_tables(inner.sigma, inner.grid, inner.degree);

    const auto start = std::chrono::steady_clock::now();
    const SketchState state = accumulate_sketch(transformed, tables, inner);
    const auto stop = std::chrono::steady_clock::now();

    DensityEstimate density = evaluate_density(state, inner);
    for (double& v : density.values) {
        v *= jacobian;
    }
    density.grid = config.grid;
    density.config = config;
    density.sketch_seconds = std::chrono::duration<double>(stop - start).count();
    return density;
}

} // namespace specden
