#include "runner.hpp"

#include "specden/hamiltonian.hpp"
#include "specden/matrix_market.hpp"
#include "specden/reference.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace specden::cli {

namespace {

std::string format_double(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

std::unique_ptr<SymmetricOperator> build_operator(const RunSpec& spec) {
    if (spec.matrix == "hamiltonian") {
        return std::make_unique<SparseSymmetric>(
            build_hamiltonian(spec.n_c, 6.0, 0.6, -4.0, 8.0));
    }
    return std::make_unique<SparseSymmetric>(load_matrix_market(spec.matrix));
}

std::vector<double> uniform_grid(double a, double b, int n_t) {
    if (n_t < 2) {
        throw std::invalid_argument("run: need at least two grid points");
    }
    std::vector<double> grid(static_cast<std::size_t>(n_t));
    for (int i = 0; i < n_t; ++i) {
        grid[static_cast<std::size_t>(i)] = a + (b - a) * i / (n_t - 1);
    }
    return grid;
}

void write_density_csv(const std::string& path, const DensityEstimate& density,
                       bool clamp_nonneg) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("run: cannot write density CSV '" + path + "'");
    }
    out << "t,density\n";
    for (std::size_t i = 0; i < density.grid.size(); ++i) {
        double v = density.values[i];
        if (clamp_nonneg && v < 0.0) {
            v = 0.0;
        }
        out << format_double(density.grid[i]) << ',' << format_double(v) << '\n';
    }
    if (!out.good()) {
        throw std::runtime_error("run: failed while writing '" + path + "'");
    }
}

EstimatorConfig make_config(const RunSpec& spec, const SpectralInterval& interval) {
    EstimatorConfig config;
    config.degree = spec.degree;
    config.n_omega = spec.n_omega;
    config.n_psi = spec.n_psi;
    // The flag value is relative to the transformed axis; the library expects
    // original units and rescales by 2/(b-a) internally.
    config.sigma = spec.sigma * interval.width() / 2.0;
    config.seed = spec.seed;
    config.pinv_rel_threshold = spec.pinv_threshold;
    config.zero_density_threshold = spec.zero_threshold;
    config.grid = uniform_grid(interval.a, interval.b, spec.n_t);
    return config;
}

} // namespace

std::optional<SpectralInterval> parse_interval(const std::string& text) {
    if (text == "auto") {
        return std::nullopt;
    }
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw std::invalid_argument("interval must be 'a,b' or 'auto', got '" + text + "'");
    }
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const std::string a_text = text.substr(0, comma);
    const std::string b_text = text.substr(comma + 1);
    const double a = std::stod(a_text, &used_a);
    const double b = std::stod(b_text, &used_b);
    if (used_a != a_text.size() || used_b != b_text.size()) {
        throw std::invalid_argument("interval must be 'a,b' or 'auto', got '" + text + "'");
    }
    return SpectralInterval(a, b);
}

std::vector<double> parse_value_list(const std::string& text) {
    std::vector<double> values;
    const auto first_colon = text.find(':');
    if (first_colon != std::string::npos) {
        double lo = 0.0, hi = 0.0;
        long count = 0;
        std::istringstream in(text);
        char c1 = 0, c2 = 0;
        if (!(in >> lo >> c1 >> hi >> c2 >> count) || c1 != ':' || c2 != ':' || count < 2 ||
            !(lo > 0.0) || !(hi > lo)) {
            throw std::invalid_argument("expected 'lo:hi:count' with 0 < lo < hi, got '" + text +
                                        "'");
        }
        for (long i = 0; i < count; ++i) {
            const double f = static_cast<double>(i) / static_cast<double>(count - 1);
            values.push_back(std::exp(std::log(lo) + f * (std::log(hi) - std::log(lo))));
        }
        return values;
    }
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        std::size_t used = 0;
        values.push_back(std::stod(token, &used));
        if (used != token.size()) {
            throw std::invalid_argument("bad numeric value '" + token + "'");
        }
    }
    if (values.empty()) {
        throw std::invalid_argument("empty value list");
    }
    return values;
}

RunResult run(const RunSpec& spec) {
    const std::unique_ptr<SymmetricOperator> op = build_operator(spec);
    const SpectralInterval interval =
        spec.auto_interval ? estimate_spectral_interval(*op, 0.01)
                           : SpectralInterval(spec.interval_a, spec.interval_b);
    const EstimatorConfig config = make_config(spec, interval);

    RunResult result;
    result.interval = interval;
    result.estimate = chebyshev_nystrom_pp(*op, interval, config);

    if (spec.reference) {
        const EigenSpectrum spectrum = dense_spectrum(*op);
        const DensityEstimate ref = exact_density(spectrum, config.sigma, config.grid);
        result.l1 = l1_error(result.estimate, ref);
    }

    if (!spec.out_csv.empty()) {
        write_density_csv(spec.out_csv, result.estimate, spec.clamp_nonneg);
    }
    if (!spec.report_path.empty()) {
        nlohmann::json report;
        report["l1_error"] = result.l1 ? nlohmann::json(*result.l1) : nlohmann::json(nullptr);
        report["matvec_count"] = result.estimate.matvec_count;
        report["wall_time_seconds"] = result.estimate.sketch_seconds;
        report["config"] = {{"matrix", spec.matrix},
                            {"n_c", spec.n_c},
                            {"m", spec.degree},
                            {"n_omega", spec.n_omega},
                            {"n_psi", spec.n_psi},
                            {"sigma", spec.sigma},
                            {"seed", spec.seed},
                            {"pinv_threshold", spec.pinv_threshold},
                            {"zero_threshold", spec.zero_threshold},
                            {"n_t", spec.n_t},
                            {"interval", {interval.a, interval.b}}};
        std::ofstream out(spec.report_path);
        if (!out) {
            throw std::runtime_error("run: cannot write report '" + spec.report_path + "'");
        }
        out << report.dump(2) << '\n';
        if (!out.good()) {
            throw std::runtime_error("run: failed while writing '" + spec.report_path + "'");
        }
    }
    return result;
}

namespace {

std::pair<long, long> split_budget(const std::string& split, long budget) {
    if (split == "nystrom") {
        return {budget, 0};
    }
    if (split == "hutchinson") {
        return {0, budget};
    }
    if (split == "even") {
        return {budget / 2, budget - budget / 2};
    }
    throw std::invalid_argument("split must be nystrom, hutchinson or even, got '" + split + "'");
}

int even_degree_for_sigma(double sigma) {
    const int m = static_cast<int>(std::ceil(16.0 / sigma));
    return m % 2 == 0 ? m : m + 1;
}

} // namespace

void sweep(const SweepSpec& spec) {
    if (spec.values.empty() || spec.repetitions < 1) {
        throw std::invalid_argument("sweep: need at least one value and one repetition");
    }
    if (spec.out_csv.empty()) {
        throw std::invalid_argument("sweep: output CSV path is required");
    }
    const std::unique_ptr<SymmetricOperator> op = build_operator(spec.base);
    const SpectralInterval interval =
        spec.base.auto_interval ? estimate_spectral_interval(*op, 0.01)
                                : SpectralInterval(spec.base.interval_a, spec.base.interval_b);
    const EigenSpectrum spectrum = dense_spectrum(*op); // sweeps always report l1

    std::ofstream out(spec.out_csv);
    if (!out) {
        throw std::runtime_error("sweep: cannot write CSV '" + spec.out_csv + "'");
    }
    out << "axis_value,repetition,seed,l1_error,matvec_count\n";
    for (double value : spec.values) {
        RunSpec point = spec.base;
        if (spec.axis == SweepSpec::Axis::budget) {
            const long budget = static_cast<long>(std::llround(value));
            if (budget < 1) {
                throw std::invalid_argument("sweep: budgets must be positive integers");
            }
            std::tie(point.n_omega, point.n_psi) = split_budget(spec.split, budget);
        } else {
            if (!(value > 0.0)) {
                throw std::invalid_argument("sweep: sigma values must be positive");
            }
            point.sigma = value;
            point.degree = even_degree_for_sigma(value);
            std::tie(point.n_omega, point.n_psi) =
                split_budget(spec.split, spec.base.n_omega + spec.base.n_psi);
        }
        for (int rep = 0; rep < spec.repetitions; ++rep) {
            EstimatorConfig config = make_config(point, interval);
            config.seed = spec.base.seed + static_cast<std::uint64_t>(rep);
            const DensityEstimate estimate = chebyshev_nystrom_pp(*op, interval, config);
            const DensityEstimate ref = exact_density(spectrum, config.sigma, config.grid);
            const double l1 = l1_error(estimate, ref);
            out << format_double(value) << ',' << rep << ',' << config.seed << ','
                << format_double(l1) << ',' << estimate.matvec_count << '\n';
        }
    }
    if (!out.good()) {
        throw std::runtime_error("sweep: failed while writing '" + spec.out_csv + "'");
    }
}

} // namespace specden::cli
