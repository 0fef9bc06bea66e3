// eee_bench: synthetic array-signal benchmark for eigenvalue-entropy source
// enumeration. Subcommands: sweep (Monte Carlo CSV), spectrum (single-trial
// diagnostic dump), entropy (kernel entropy of inline values).

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "eee/csv_report.hpp"
#include "eee/run_config.hpp"
#include "eee/spectrum.hpp"

namespace {

struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SweepArgs {
    std::string config_path;
    std::string output_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    int workers = 1;
    std::string methods;
};

std::vector<eee::EnumMethod> parse_method_list(const std::string& list)
{
    std::vector<eee::EnumMethod> methods;
    std::size_t start = 0;
    while (start <= list.size()) {
        std::size_t comma = list.find(',', start);
        if (comma == std::string::npos)
            comma = list.size();
        const std::string item = list.substr(start, comma - start);
        const auto method = eee::parse_method(item);
        if (!method)
            throw ValidationError("unknown method '" + item +
                                  "' (expected eee-tail, eee-head, aic, mdl)");
        methods.push_back(*method);
        start = comma + 1;
        if (comma == list.size())
            break;
    }
    return methods;
}

int cmd_sweep(const SweepArgs& args)
{
    eee::RunConfig config = eee::load_run_config(args.config_path);
    if (!config.sweep)
        throw ValidationError(args.config_path + ": missing [sweep] section");

    eee::SweepSpec spec = *config.sweep;
    if (args.seed)
        spec.master_seed = *args.seed;
    if (args.trials)
        spec.trials_per_point = *args.trials;
    if (!args.methods.empty())
        spec.methods = parse_method_list(args.methods);

    spec.validate();
    config.kernel.validate();

    const auto points = eee::run_sweep(spec, config.kernel, args.workers);
    const std::string csv = eee::format_sweep_csv(spec.axis, points);
    eee::write_file_atomic(args.output_path, csv);

    eee::RunManifest manifest;
    manifest.config_path = args.config_path;
    manifest.output_path = args.output_path;
    manifest.axis = spec.axis;
    manifest.points = static_cast<int>(spec.values.size());
    manifest.methods = spec.methods;
    manifest.trials_per_point = spec.trials_per_point;
    manifest.master_seed = spec.master_seed;
    manifest.workers = args.workers;
    manifest.bandwidth_rule = config.kernel.rule;
    manifest.emitted_rows = spec.values.size() * spec.methods.size();
    std::cerr << eee::format_manifest(manifest);
    return 0;
}

int cmd_spectrum(const std::string& config_path, std::uint64_t seed,
                 const std::string& output_path)
{
    const eee::RunConfig config = eee::load_run_config(config_path);
    config.scenario.validate();
    config.kernel.validate();

    eee::RandomStream rng(seed);
    const eee::EigenSpectrum spectrum =
        eee::snapshot_spectrum(eee::generate_snapshots(config.scenario, rng));
    const auto profile = eee::tail_entropy_profile(spectrum.values, config.kernel);
    const auto delta = eee::first_difference(profile);
    const std::string csv = eee::format_spectrum_csv(spectrum.values, profile, delta);

    if (output_path.empty())
        std::cout << csv;
    else
        eee::write_file_atomic(output_path, csv);
    return 0;
}

int cmd_entropy(const std::vector<double>& values, std::optional<double> bandwidth)
{
    eee::KernelConfig kernel; // Silverman fallback when no bandwidth is given
    double h = 0.0;
    if (bandwidth) {
        if (!(*bandwidth > 0.0))
            throw ValidationError("--bandwidth must be positive");
        h = *bandwidth;
    } else {
        if (values.size() < 2)
            throw ValidationError(
                "Silverman bandwidth needs at least two values; pass --bandwidth");
        h = eee::silverman_bandwidth(values, eee::bandwidth_floor_for(values, kernel));
    }
    std::printf("%.12g\n", eee::entropy_estimate(values, h));
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Source enumeration benchmark: eigenvalue-entropy criteria vs AIC/MDL"};
    app.require_subcommand(1);

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "run a Monte Carlo sweep and write CSV");
    sweep->add_option("--config", sweep_args.config_path, "experiment config file")
        ->required();
    sweep->add_option("--output", sweep_args.output_path, "output CSV path")->required();
    sweep->add_option("--seed", sweep_args.seed, "override the sweep master seed");
    sweep->add_option("--trials", sweep_args.trials, "override trials per point");
    sweep->add_option("--workers", sweep_args.workers, "worker threads (output-invariant)")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--methods", sweep_args.methods,
                      "comma list: eee-tail,eee-head,aic,mdl");

    std::string spectrum_config;
    std::uint64_t spectrum_seed = 0;
    std::string spectrum_output;
    auto* spectrum =
        app.add_subcommand("spectrum", "dump one trial's eigenvalues and entropy profile");
    spectrum->add_option("--config", spectrum_config, "experiment config file")->required();
    spectrum->add_option("--seed", spectrum_seed, "trial seed");
    spectrum->add_option("--output", spectrum_output, "output CSV path (default stdout)");

    std::vector<double> entropy_values;
    std::optional<double> entropy_bandwidth;
    auto* entropy = app.add_subcommand("entropy", "print the kernel entropy of values");
    entropy->add_option("values", entropy_values, "sample values")->required();
    entropy->add_option("--bandwidth", entropy_bandwidth,
                        "kernel bandwidth (default: Silverman)");

    try {
        app.parse(argc, argv);
        if (sweep->parsed())
            return cmd_sweep(sweep_args);
        if (spectrum->parsed())
            return cmd_spectrum(spectrum_config, spectrum_seed, spectrum_output);
        return cmd_entropy(entropy_values, entropy_bandwidth);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
