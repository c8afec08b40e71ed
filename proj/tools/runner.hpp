#pragma once

#include "specden/estimators.hpp"
#include "specden/operator.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace specden::cli {

/// One estimator execution. `sigma` is the smoothing width on the transformed
/// [-1,1] spectral axis; the density CSV is emitted in original units.
struct RunSpec {
    std::string matrix = "hamiltonian"; ///< builtin "hamiltonian" or a Matrix Market path
    int n_c = 1;
    int degree = 800;
    long n_omega = 40;
    long n_psi = 40;
    double sigma = 0.05;
    std::uint64_t seed = 0;
    double pinv_threshold = 1e-5;
    double zero_threshold = 1e-5;
    int n_t = 100;
    bool auto_interval = true;
    double interval_a = 0.0;
    double interval_b = 0.0;
    bool reference = false;
    bool clamp_nonneg = false;
    std::string out_csv;
    std::string report_path;
};

struct SweepSpec {
    enum class Axis { budget, sigma };
    RunSpec base;
    Axis axis = Axis::budget;
    std::vector<double> values;
    std::string split = "even"; ///< nystrom | hutchinson | even
    int repetitions = 1;
    std::string out_csv;
};

struct RunResult {
    DensityEstimate estimate;
    std::optional<double> l1;
    SpectralInterval interval;
};

/// Executes the spec, writing the density CSV and the optional JSON report.
RunResult run(const RunSpec& spec);

/// Executes the sweep, writing one long-format CSV row per (value, repetition).
void sweep(const SweepSpec& spec);

/// "a,b" -> interval, "auto" -> nullopt.
std::optional<SpectralInterval> parse_interval(const std::string& text);

/// "v1,v2,..." or "lo:hi:count" (log-spaced).
std::vector<double> parse_value_list(const std::string& text);

} // namespace specden::cli
