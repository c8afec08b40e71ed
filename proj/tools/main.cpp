#include "runner.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <string>

int main(int argc, char** argv) {
    using namespace specden::cli;

    CLI::App app{"Smoothed spectral density estimation via Chebyshev-Nystrom++"};
    app.set_config("--config", "", "Optional key=value config file; flags win on conflict");

    RunSpec spec;
    std::string interval_text = "auto";
    std::string sweep_budget_text;
    std::string sweep_sigma_text;
    std::string split = "even";
    int repetitions = 1;

    app.add_option("--matrix", spec.matrix,
                   "'hamiltonian' (builtin, L=6, h=0.6, v0=-4, lambda=8) or a Matrix Market path")
        ->capture_default_str();
    app.add_option("--nc", spec.n_c, "Cells per dimension for the builtin Hamiltonian")
        ->capture_default_str();
    app.add_option("--m", spec.degree, "Chebyshev degree (odd values are rounded up)")
        ->capture_default_str();
    app.add_option("--n-omega", spec.n_omega, "Nystrom sketch size")->capture_default_str();
    app.add_option("--n-psi", spec.n_psi, "Girard-Hutchinson query count")->capture_default_str();
    app.add_option("--sigma", spec.sigma,
                   "Smoothing width on the transformed [-1,1] spectral axis")
        ->capture_default_str();
    app.add_option("--seed", spec.seed, "Base RNG seed")->capture_default_str();
    app.add_option("--nt", spec.n_t, "Number of uniformly spaced parameter values")
        ->capture_default_str();
    app.add_option("--interval", interval_text, "Spectral interval 'a,b' or 'auto'")
        ->capture_default_str();
    app.add_option("--pinv-threshold", spec.pinv_threshold,
                   "Relative eigenvalue truncation of the pseudoinverse")
        ->capture_default_str();
    app.add_option("--zero-threshold", spec.zero_threshold,
                   "Vanishing-density guard threshold (-inf disables)")
        ->capture_default_str();
    app.add_flag("--reference", spec.reference,
                 "Compare against the dense eigensolver reference (dimension <= 20000)");
    app.add_flag("--clamp-nonneg", spec.clamp_nonneg,
                 "Clamp negative density values to zero in the CSV output");
    app.add_option("--out", spec.out_csv, "Density CSV output path");
    app.add_option("--report", spec.report_path, "JSON error report path (implies --reference)");
    app.add_option("--sweep-budget", sweep_budget_text,
                   "Budget sweep over totals n_omega+n_psi, e.g. '16,32,64'");
    app.add_option("--sweep-sigma", sweep_sigma_text,
                   "Sigma sweep: 'v1,v2,...' or log-spaced 'lo:hi:count'; sets m = ceil(16/sigma)");
    app.add_option("--split", split, "Budget split for sweeps: nystrom | hutchinson | even")
        ->capture_default_str();
    app.add_option("--reps", repetitions, "Repetitions per sweep point")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (spec.degree % 2 != 0) {
            std::fprintf(stderr, "warning: rounding odd degree %d up to %d\n", spec.degree,
                         spec.degree + 1);
            spec.degree += 1;
        }
        if (const auto interval = parse_interval(interval_text)) {
            spec.auto_interval = false;
            spec.interval_a = interval->a;
            spec.interval_b = interval->b;
        }
        if (!spec.report_path.empty()) {
            spec.reference = true;
        }
        if (!sweep_budget_text.empty() && !sweep_sigma_text.empty()) {
            throw std::invalid_argument("choose one of --sweep-budget and --sweep-sigma");
        }
        if (!sweep_budget_text.empty() || !sweep_sigma_text.empty()) {
            SweepSpec sweep_spec;
            sweep_spec.base = spec;
            sweep_spec.split = split;
            sweep_spec.repetitions = repetitions;
            if (!sweep_budget_text.empty()) {
                sweep_spec.axis = SweepSpec::Axis::budget;
                sweep_spec.values = parse_value_list(sweep_budget_text);
            } else {
                sweep_spec.axis = SweepSpec::Axis::sigma;
                sweep_spec.values = parse_value_list(sweep_sigma_text);
            }
            sweep_spec.out_csv = spec.out_csv;
            if (sweep_spec.out_csv.empty()) {
                throw std::invalid_argument("sweeps require --out");
            }
            sweep(sweep_spec);
            return 0;
        }
        if (spec.out_csv.empty() && spec.report_path.empty()) {
            throw std::invalid_argument("nothing to do: pass --out and/or --report");
        }
        run(spec);
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "specden: %s\n", e.what());
        return 1;
    }
}
