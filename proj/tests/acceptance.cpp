// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit status is the number of
// failed criteria. An optional first argument names the CLI binary, used by
// the determinism criterion; without it that criterion falls back to
// in-process runs.

#include "specden/chebyshev.hpp"
#include "specden/dct.hpp"
#include "specden/estimators.hpp"
#include "specden/hamiltonian.hpp"
#include "specden/random.hpp"
#include "specden/reference.hpp"

#include "oracles.hpp"
#include "runner.hpp"

#include <Eigen/Dense>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

using namespace specden;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int g_failures = 0;

void report(int id, const std::string& label, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        outcome = body();
    } catch (const std::exception& e) {
        outcome.pass = false;
        outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!outcome.pass) {
        ++g_failures;
    }
    std::printf("[%s] criterion %2d: %s (%s; %.1f s)\n", outcome.pass ? "PASS" : "FAIL", id,
                label.c_str(), outcome.detail.c_str(), seconds);
    std::fflush(stdout);
}

std::string fmt(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.3g", v);
    return buffer;
}

// ---------------------------------------------------------------------------

Outcome criterion_1_squaring_oracle() {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int m : {4, 8, 16, 32, 64}) {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            GaussianStream stream(seed * 977 + static_cast<std::uint64_t>(m), 3);
            std::vector<double> mu(static_cast<std::size_t>(m) + 1);
            for (double& x : mu) {
                x = stream.next();
            }
            const std::vector<double> fast = square_coeffs(mu);
            const std::vector<double> slow = oracles::product_square(mu);
            for (std::size_t l = 0; l < fast.size(); ++l) {
                worst = std::max(worst, std::abs(fast[l] - slow[l]));
            }
        }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Outcome out;
    out.pass = worst <= 1e-12 && seconds < 5.0;
    out.detail = "max |fast - oracle| = " + fmt(worst) + " <= 1e-12, runtime " + fmt(seconds) + " s";
    return out;
}

Outcome criterion_2_dct_roundtrip() {
    double worst_roundtrip = 0.0;
    for (int m : {2, 15, 128, 1024, 4096}) {
        GaussianStream stream(31 + static_cast<std::uint64_t>(m), 5);
        std::vector<double> values(static_cast<std::size_t>(m) + 1);
        for (double& x : values) {
            x = stream.next();
        }
        const std::vector<double> back = chebyshev_synthesis(dct_i(values));
        for (std::size_t i = 0; i < values.size(); ++i) {
            worst_roundtrip = std::max(worst_roundtrip, std::abs(back[i] - values[i]));
        }
    }
    double worst_interp = 0.0;
    for (double sigma : {0.005, 0.05, 0.5}) {
        const GaussianKernel kernel(sigma);
        const int m = 512;
        const std::vector<double> nodes = chebyshev_nodes(m);
        for (double t : {0.0, 0.45}) {
            const std::vector<double> row =
                interpolate_kernel([&](double s) { return kernel(s); }, t, m);
            const std::vector<double> synthesized = chebyshev_synthesis(row);
            for (int i = 0; i <= m; ++i) {
                worst_interp = std::max(
                    worst_interp,
                    std::abs(synthesized[static_cast<std::size_t>(i)] -
                             kernel(t - nodes[static_cast<std::size_t>(i)])));
            }
        }
    }
    Outcome out;
    out.pass = worst_roundtrip <= 1e-12 && worst_interp <= 1e-12;
    out.detail = "round-trip " + fmt(worst_roundtrip) + ", node identity " + fmt(worst_interp) +
                 " (both <= 1e-12)";
    return out;
}

Outcome criterion_3_error_bounds() {
    Outcome out;
    out.pass = true;
    std::string failures;
    for (double sigma : {0.05, 0.1, 0.5}) {
        const GaussianKernel kernel(sigma);
        for (int m : {16, 64, 256}) {
            // standard interpolant: sup over a 4001-point s-grid and several t
            double sup = 0.0;
            for (double t : {0.0, 0.3, 0.7}) {
                const std::vector<double> row =
                    interpolate_kernel([&](double s) { return kernel(s); }, t, m);
                for (int i = 0; i < 4001; ++i) {
                    const double s = -1.0 + 2.0 * i / 4000.0;
                    sup = std::max(sup, std::abs(evaluate_series(row, s) - kernel(t - s)));
                }
            }
            const double bound = error_bound_standard(sigma, m).value;
            if (sup > bound) {
                out.pass = false;
                failures += " [std sigma=" + fmt(sigma) + " m=" + std::to_string(m) + ": " +
                            fmt(sup) + " > " + fmt(bound) +
                            (bound < 1e-15 ? ", bound sits below the double-precision"
                                             " measurement floor"
                                           : "") +
                            "]";
            }
            // non-negative variant: L1 over t for a single eigenvalue at 0.3
            const double lambda = 0.3;
            double l1 = 0.0;
            const int n_nodes = 4001;
            for (int i = 0; i < n_nodes; ++i) {
                const double t = -1.0 + 2.0 * i / (n_nodes - 1.0);
                const NonnegKernelCoeffs row = nonneg_kernel_coeffs(sigma, t, m);
                l1 += std::abs(evaluate_series(row.mu_bar, lambda) - kernel(t - lambda));
            }
            l1 *= 2.0 / n_nodes;
            const double nn_bound = error_bound_nonneg(sigma, m).value;
            if (l1 > nn_bound) {
                out.pass = false;
                failures += " [nonneg sigma=" + fmt(sigma) + " m=" + std::to_string(m) + ": " +
                            fmt(l1) + " > " + fmt(nn_bound) +
                            (nn_bound < 1e-15 ? ", bound sits below the double-precision"
                                                " measurement floor"
                                              : "") +
                            "]";
            }
        }
    }
    out.detail = out.pass ? "all 9 (sigma, m) combinations within E and E_nonneg"
                          : "bound violations:" + failures;
    return out;
}

Outcome criterion_4_nonnegativity() {
    double worst = 0.0;
    for (double sigma : {0.005, 0.05, 0.5}) {
        for (int m : {64, 256, 2000}) {
            const NonnegKernelCoeffs row = nonneg_kernel_coeffs(sigma, 0.3, m);
            for (int i = 0; i < 4001; ++i) {
                const double s = -1.0 + 2.0 * i / 4000.0;
                worst = std::min(worst, evaluate_series(row.mu_bar, s));
            }
        }
    }
    Outcome out;
    out.pass = worst >= -1e-12;
    out.detail = "grid minimum " + fmt(worst) + " >= -1e-12";
    return out;
}

Outcome criterion_5_dense_oracle_equivalence() {
    const Eigen::Index n = 16;
    const int m = 32;
    Eigen::VectorXd lam(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        lam[i] = -0.9 + 1.8 * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    const Eigen::MatrixXd a = oracles::random_symmetric(n, lam, 99);
    const DenseSymmetric op(a);

    EstimatorConfig cfg;
    cfg.degree = m;
    cfg.n_omega = 4;
    cfg.n_psi = 3;
    cfg.sigma = 0.3;
    cfg.seed = 42;
    for (int i = 0; i < 11; ++i) {
        cfg.grid.push_back(-1.0 + 0.2 * i);
    }
    const KernelTables tables = build_tables(cfg.sigma, cfg.grid, cfg.degree);
    const SketchState state = accumulate_sketch(op, tables, cfg);
    const DensityEstimate density = evaluate_density(state, cfg);

    const Eigen::MatrixXd omega = sample_gaussian(n, cfg.n_omega, cfg.seed, 0);
    const Eigen::MatrixXd psi = sample_gaussian(n, cfg.n_psi, cfg.seed, 1);
    double worst = 0.0;
    for (std::size_t i = 0; i < cfg.grid.size(); ++i) {
        Eigen::RowVectorXd murow = tables.mu_bar.coeffs.row(static_cast<Eigen::Index>(i));
        const Eigen::MatrixXd b =
            oracles::dense_cheb_poly(a, std::span<const double>(murow.data(), murow.size()));
        const Eigen::MatrixXd bo = b * omega;
        const Eigen::MatrixXd k1 = omega.transpose() * bo;
        const Eigen::MatrixXd nystrom =
            bo * truncated_pinv_solve(k1, bo.transpose(), cfg.pinv_rel_threshold);
        const double hutch =
            (psi.array() * ((b - nystrom) * psi).array()).sum() / static_cast<double>(cfg.n_psi);
        const double oracle = (nystrom.trace() + hutch) / static_cast<double>(n);
        worst = std::max(worst, std::abs(oracle - density.values[i]));
    }
    Outcome out;
    out.pass = worst <= 1e-9;
    out.detail = "max |pipeline - explicit Nystrom++| = " + fmt(worst) + " <= 1e-9";
    return out;
}

Outcome criterion_6_exact_rank_recovery() {
    const Eigen::Index n = 200, rank = 10, n_omega = 12;
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Eigen::MatrixXd g = sample_gaussian(n, rank, 500 + seed, 2);
        const Eigen::MatrixXd b = g * g.transpose();
        const Eigen::MatrixXd omega = sample_gaussian(n, n_omega, 600 + seed, 0);
        const Eigen::MatrixXd bo = b * omega;
        const Eigen::MatrixXd k1 = omega.transpose() * bo;
        const Eigen::MatrixXd k2 = bo.transpose() * bo;
        const double estimate = truncated_pinv_solve(k1, k2, 1e-5).trace();
        worst = std::max(worst, std::abs(estimate - b.trace()) / b.trace());
    }
    Outcome out;
    out.pass = worst <= 1e-9;
    out.detail = "max relative trace error over 20 seeds = " + fmt(worst) + " <= 1e-9";
    return out;
}

double hutchinson_mean_l1_ratio(std::uint64_t seed_base) {
    const SparseSymmetric ham = oracles::hamiltonian_2d(10, 0.6, -4.0, 8.0);
    const EigenSpectrum spectrum = dense_spectrum(ham);
    const SpectralInterval interval(spectrum.eigenvalues.front(), spectrum.eigenvalues.back());
    const AffineTransformed mapped = affine_transform(ham, interval);

    const double sigma = 0.1;
    const int m = 256;
    const int n_t = 50;
    EstimatorConfig cfg;
    cfg.degree = m;
    cfg.n_omega = 0;
    cfg.sigma = sigma;
    for (int i = 0; i < n_t; ++i) {
        cfg.grid.push_back(-1.0 + 2.0 * i / (n_t - 1.0));
    }
    const KernelTables tables = build_tables(sigma, cfg.grid, m);

    EigenSpectrum transformed;
    for (double lam : spectrum.eigenvalues) {
        transformed.eigenvalues.push_back(mapped.map(lam));
    }
    const DensityEstimate ref = exact_density(transformed, sigma, cfg.grid);

    double mean16 = 0.0, mean64 = 0.0;
    for (int s = 0; s < 100; ++s) {
        for (Eigen::Index n_psi : {16, 64}) {
            cfg.n_psi = n_psi;
            cfg.seed = seed_base + static_cast<std::uint64_t>(s);
            const SketchState state = accumulate_sketch(mapped, tables, cfg);
            const double l1 = l1_error(evaluate_density(state, cfg), ref);
            (n_psi == 16 ? mean16 : mean64) += l1;
        }
    }
    return mean64 / mean16;
}

Outcome criterion_7_monte_carlo_rate() {
    double ratio = hutchinson_mean_l1_ratio(2000);
    bool rerun = false;
    bool pass = ratio >= 0.35 && ratio <= 0.70;
    if (!pass) {
        // documented rerun-once policy for this statistical check
        rerun = true;
        ratio = hutchinson_mean_l1_ratio(9000);
        pass = ratio >= 0.35 && ratio <= 0.70;
    }
    Outcome out;
    out.pass = pass;
    out.detail = "mean L1 ratio (n_psi 64 vs 16) = " + fmt(ratio) + " in [0.35, 0.70]" +
                 (rerun ? " after one documented rerun" : "");
    return out;
}

struct HamiltonianContext {
    SparseSymmetric matrix = build_hamiltonian(1, 6.0, 0.6, -4.0, 8.0);
    EigenSpectrum spectrum;
    SpectralInterval interval;

    HamiltonianContext() {
        spectrum = dense_spectrum(matrix);
        interval = estimate_spectral_interval(matrix, 0.01);
    }
};

Outcome criterion_8_hamiltonian_convergence(const HamiltonianContext& ctx) {
    EstimatorConfig cfg;
    cfg.degree = 2000;
    cfg.n_omega = 80;
    cfg.n_psi = 0;
    cfg.sigma = 0.005 * ctx.interval.width() / 2.0; // 0.005 on the transformed axis
    cfg.seed = 1;
    const int n_t = 100;
    for (int i = 0; i < n_t; ++i) {
        cfg.grid.push_back(ctx.interval.a + ctx.interval.width() * i / (n_t - 1.0));
    }
    const DensityEstimate estimate = chebyshev_nystrom_pp(ctx.matrix, ctx.interval, cfg);
    const DensityEstimate ref = exact_density(ctx.spectrum, cfg.sigma, cfg.grid);
    const double l1 = l1_error(estimate, ref);
    Outcome out;
    out.pass = l1 <= 1e-4 && estimate.matvec_count == (2 * 2000 + 1) * 80;
    out.detail = "L1 error = " + fmt(l1) + " <= 1e-4";
    return out;
}

Outcome criterion_9_guard(const HamiltonianContext& ctx) {
    const AffineTransformed mapped = affine_transform(ctx.matrix, ctx.interval);
    EstimatorConfig cfg;
    cfg.degree = 2000;
    cfg.n_omega = 80;
    cfg.n_psi = 0;
    cfg.sigma = 0.004;
    cfg.seed = 3;
    const int n_t = 100;
    for (int i = 0; i < n_t; ++i) {
        cfg.grid.push_back(-1.0 + 2.0 * i / (n_t - 1.0));
    }
    const KernelTables tables = build_tables(cfg.sigma, cfg.grid, cfg.degree);
    const SketchState state = accumulate_sketch(mapped, tables, cfg);

    const DensityEstimate guarded = evaluate_density(state, cfg);
    EstimatorConfig unguarded = cfg;
    unguarded.zero_density_threshold = -std::numeric_limits<double>::infinity();
    const DensityEstimate raw = evaluate_density(state, unguarded);

    EigenSpectrum transformed;
    for (double lam : ctx.spectrum.eigenvalues) {
        transformed.eigenvalues.push_back(mapped.map(lam));
    }
    const DensityEstimate ref = exact_density(transformed, cfg.sigma, cfg.grid);
    const double l1_on = l1_error(guarded, ref);
    const double l1_off = l1_error(raw, ref);
    Outcome out;
    out.pass = l1_on <= l1_off / 10.0;
    out.detail = "L1 with guard = " + fmt(l1_on) + ", without = " + fmt(l1_off) +
                 " (ratio " + fmt(l1_off / std::max(l1_on, 1e-300)) + " >= 10)";
    return out;
}

class CountingOperator final : public SymmetricOperator {
public:
    explicit CountingOperator(const SymmetricOperator& base) : base_(base) {}
    Eigen::Index dim() const override { return base_.dim(); }
    void apply_block(const Eigen::Ref<const Eigen::MatrixXd>& x,
                     Eigen::Ref<Eigen::MatrixXd> y) const override {
        count_ += x.cols();
        base_.apply_block(x, y);
    }
    std::int64_t count() const { return count_; }

private:
    const SymmetricOperator& base_;
    mutable std::int64_t count_ = 0;
};

Outcome criterion_10_matvec_budget() {
    const Eigen::VectorXd lam = Eigen::VectorXd::LinSpaced(32, -0.8, 0.9);
    const DenseSymmetric base(oracles::random_symmetric(32, lam, 21));
    const CountingOperator counted(base);

    EstimatorConfig cfg;
    cfg.degree = 16;
    cfg.n_omega = 3;
    cfg.n_psi = 2;
    cfg.sigma = 0.2;
    cfg.seed = 8;
    cfg.grid = {-0.5, 0.0, 0.5};
    const DensityEstimate density =
        chebyshev_nystrom_pp(counted, SpectralInterval(-1.0, 1.0), cfg);
    const std::int64_t expected = (2 * 16 + 1) * (3 + 2);
    Outcome out;
    out.pass = counted.count() == expected && density.matvec_count == expected;
    out.detail = "counted " + std::to_string(counted.count()) + ", reported " +
                 std::to_string(density.matvec_count) + ", expected " + std::to_string(expected);
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Outcome criterion_11_determinism(const std::string& cli_path) {
    const auto dir = std::filesystem::temp_directory_path();
    const auto csv_a = dir / "specden_acceptance_a.csv";
    const auto csv_b = dir / "specden_acceptance_b.csv";

    Outcome out;
    if (!cli_path.empty()) {
        const std::string args = " --matrix hamiltonian --nc 1 --m 2000 --sigma 0.005"
                                 " --n-omega 80 --n-psi 0 --nt 100 --seed 1 --reference";
        const std::string report = (dir / "specden_acceptance_rep.json").string();
        const int rc_a = std::system(
            (cli_path + args + " --out " + csv_a.string() + " --report " + report).c_str());
        const int rc_b = std::system((cli_path + args + " --out " + csv_b.string()).c_str());
        if (rc_a != 0 || rc_b != 0) {
            out.pass = false;
            out.detail = "CLI invocation failed";
            return out;
        }
        const std::string json = read_file(report);
        const auto key = json.find("\"l1_error\"");
        double l1 = std::numeric_limits<double>::infinity();
        if (key != std::string::npos) {
            l1 = std::stod(json.substr(json.find(':', key) + 1));
        }
        const bool identical = read_file(csv_a) == read_file(csv_b);
        out.pass = identical && l1 <= 1e-4;
        out.detail = std::string(identical ? "CSV byte-identical across two CLI executions"
                                           : "CSV outputs differ") +
                     ", CLI run L1 = " + fmt(l1);
        return out;
    }
    cli::RunSpec spec;
    spec.matrix = "hamiltonian";
    spec.n_c = 1;
    spec.degree = 2000;
    spec.sigma = 0.005;
    spec.n_omega = 80;
    spec.n_psi = 0;
    spec.n_t = 100;
    spec.seed = 1;
    spec.out_csv = csv_a.string();
    cli::run(spec);
    spec.out_csv = csv_b.string();
    cli::run(spec);
    out.pass = read_file(csv_a) == read_file(csv_b);
    out.detail = out.pass ? "CSV byte-identical across two in-process runs" : "CSV outputs differ";
    return out;
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli_path = argc > 1 ? argv[1] : "";
    std::printf("specden acceptance suite\n");

    report(1, "Algorithm 1 squaring matches the product-identity oracle", criterion_1_squaring_oracle);
    report(2, "DCT round-trip and interpolation identity", criterion_2_dct_roundtrip);
    report(3, "Chebyshev error bounds hold for measured errors", criterion_3_error_bounds);
    report(4, "non-negative approximant stays above -1e-12", criterion_4_nonnegativity);
    report(5, "pipeline equals the explicitly formed Nystrom++ value", criterion_5_dense_oracle_equivalence);
    report(6, "Nystrom recovers exact-rank traces", criterion_6_exact_rank_recovery);
    report(7, "Girard-Hutchinson Monte-Carlo rate", criterion_7_monte_carlo_rate);

    HamiltonianContext ctx;
    report(8, "pure-Nystrom run converges on the n=1000 Hamiltonian",
           [&ctx] { return criterion_8_hamiltonian_convergence(ctx); });
    report(9, "vanishing-density guard improves the error tenfold",
           [&ctx] { return criterion_9_guard(ctx); });
    report(10, "matvec budget is exactly (2m+1)(n_omega+n_psi)", criterion_10_matvec_budget);
    report(11, "criterion-8 run is bit-deterministic",
           [&cli_path] { return criterion_11_determinism(cli_path); });

    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria FAILED\n", g_failures);
    }
    return g_failures;
}
