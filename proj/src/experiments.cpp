#include "eee/experiments.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "eee/spectrum.hpp"

namespace eee {

namespace {

Classification classify(int estimated, int truth)
{
    if (estimated == truth)
        return Classification::correct;
    return estimated > truth ? Classification::false_alarm : Classification::missed;
}

struct Counts {
    long correct = 0;
    long false_alarms = 0;
    long missed = 0;

    void add(Classification c)
    {
        switch (c) {
        case Classification::correct: ++correct; break;
        case Classification::false_alarm: ++false_alarms; break;
        case Classification::missed: ++missed; break;
        }
    }

    Counts& operator+=(const Counts& other)
    {
        correct += other.correct;
        false_alarms += other.false_alarms;
        missed += other.missed;
        return *this;
    }
};

bool is_integral_value(double value)
{
    return std::isfinite(value) && value == std::floor(value);
}

} // namespace

std::string_view axis_name(SweepAxis axis)
{
    switch (axis) {
    case SweepAxis::snapshots: return "snapshots";
    case SweepAxis::snr_db: return "snr-db";
    case SweepAxis::num_sources: return "num-sources";
    case SweepAxis::epsilon: return "epsilon";
    case SweepAxis::eta: return "eta";
    }
    throw std::logic_error("unhandled axis");
}

std::optional<SweepAxis> parse_axis(std::string_view name)
{
    if (name == "snapshots") return SweepAxis::snapshots;
    if (name == "snr-db") return SweepAxis::snr_db;
    if (name == "num-sources") return SweepAxis::num_sources;
    if (name == "epsilon") return SweepAxis::epsilon;
    if (name == "eta") return SweepAxis::eta;
    return std::nullopt;
}

void SweepSpec::validate() const
{
    if (values.empty())
        throw std::invalid_argument("sweep values must be non-empty");
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (!(values[i] > values[i - 1]))
            throw std::invalid_argument("sweep values must be strictly increasing");
    }
    if (methods.empty())
        throw std::invalid_argument("sweep methods must be non-empty");
    if (trials_per_point < 1)
        throw std::invalid_argument("trials must be positive, got " +
                                    std::to_string(trials_per_point));
    for (double value : values)
        apply_axis(base, axis, value).validate();
}

ScenarioConfig apply_axis(const ScenarioConfig& base, SweepAxis axis, double value)
{
    ScenarioConfig config = base;
    const std::string point =
        std::string(axis_name(axis)) + " = " + std::to_string(value);
    switch (axis) {
    case SweepAxis::snapshots:
        if (!is_integral_value(value) || value < 1.0)
            throw std::invalid_argument("sweep point " + point +
                                        ": num_snapshots must be a positive integer");
        config.num_snapshots = static_cast<int>(value);
        break;
    case SweepAxis::snr_db:
        if (!base.source_powers.empty())
            throw std::invalid_argument(
                "sweep point " + point +
                ": explicit source_powers cannot be combined with an snr-db sweep");
        config.snr_db = value;
        break;
    case SweepAxis::num_sources:
        if (!is_integral_value(value) || value < 0.0)
            throw std::invalid_argument("sweep point " + point +
                                        ": num_sources must be a non-negative integer");
        if (!base.doas.empty() || !base.source_powers.empty())
            throw std::invalid_argument(
                "sweep point " + point +
                ": explicit doas/source_powers cannot be combined with a num-sources sweep");
        if (value >= base.num_sensors)
            throw std::invalid_argument("sweep point " + point +
                                        ": num_sources must stay below num_sensors=" +
                                        std::to_string(base.num_sensors));
        config.num_sources = static_cast<int>(value);
        break;
    case SweepAxis::epsilon: {
        auto* mixture = std::get_if<GaussianMixtureNoise>(&config.noise);
        if (!mixture)
            throw std::invalid_argument("sweep point " + point +
                                        ": epsilon sweep needs gaussian-mixture noise");
        mixture->epsilon = value;
        break;
    }
    case SweepAxis::eta: {
        auto* mixture = std::get_if<GaussianMixtureNoise>(&config.noise);
        if (!mixture)
            throw std::invalid_argument("sweep point " + point +
                                        ": eta sweep needs gaussian-mixture noise");
        mixture->eta = value;
        break;
    }
    }
    return config;
}

std::vector<TrialOutcome> run_trial(const ScenarioConfig& config,
                                    std::span<const EnumMethod> methods,
                                    const KernelConfig& kernel,
                                    std::uint64_t trial_seed)
{
    RandomStream rng(trial_seed);
    const EigenSpectrum spectrum = snapshot_spectrum(generate_snapshots(config, rng));

    std::vector<TrialOutcome> outcomes;
    outcomes.reserve(methods.size());
    for (EnumMethod method : methods) {
        const EstimateResult result =
            estimate(method, spectrum, kernel, config.num_snapshots);
        outcomes.push_back({method, config.num_sources, result.num_sources,
                            classify(result.num_sources, config.num_sources)});
    }
    return outcomes;
}

std::vector<TrialBatchStats> run_batch(const ScenarioConfig& config,
                                       std::span<const EnumMethod> methods,
                                       const KernelConfig& kernel, int trials,
                                       std::uint64_t master_seed, int workers)
{
    config.validate();
    kernel.validate();
    if (trials < 1)
        throw std::invalid_argument("trials must be positive, got " + std::to_string(trials));

    const int worker_count = std::clamp(workers, 1, trials);
    std::vector<Counts> totals(methods.size());
    std::mutex merge_mutex;
    std::exception_ptr first_error;

    // Trial i is fully determined by mix_seed(master_seed, i), so any
    // assignment of trial indices to workers yields the same counts.
    auto work = [&](int worker_index) {
        std::vector<Counts> local(methods.size());
        try {
            for (int i = worker_index; i < trials; i += worker_count) {
                const auto outcomes =
                    run_trial(config, methods, kernel, mix_seed(master_seed, i));
                for (std::size_t m = 0; m < outcomes.size(); ++m)
                    local[m].add(outcomes[m].classification);
            }
        } catch (...) {
            std::lock_guard lock(merge_mutex);
            if (!first_error)
                first_error = std::current_exception();
            return;
        }
        std::lock_guard lock(merge_mutex);
        for (std::size_t m = 0; m < local.size(); ++m)
            totals[m] += local[m];
    };

    if (worker_count == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(worker_count));
        for (int w = 0; w < worker_count; ++w)
            pool.emplace_back(work, w);
        for (auto& thread : pool)
            thread.join();
    }
    if (first_error)
        std::rethrow_exception(first_error);

    std::vector<TrialBatchStats> stats;
    stats.reserve(methods.size());
    for (std::size_t m = 0; m < methods.size(); ++m) {
        const Counts& c = totals[m];
        TrialBatchStats s;
        s.method = methods[m];
        s.trials = trials;
        s.correct = static_cast<int>(c.correct);
        s.false_alarms = static_cast<int>(c.false_alarms);
        s.missed = static_cast<int>(c.missed);
        const double t = static_cast<double>(trials);
        s.p_detect = c.correct / t;
        s.p_false_alarm = c.false_alarms / t;
        s.p_missed = c.missed / t;
        stats.push_back(s);
    }
    return stats;
}

std::vector<SweepPoint> run_sweep(const SweepSpec& spec, const KernelConfig& kernel,
                                  int workers)
{
    spec.validate();
    kernel.validate();

    std::vector<SweepPoint> points;
    points.reserve(spec.values.size());
    for (std::size_t j = 0; j < spec.values.size(); ++j) {
        const ScenarioConfig config = apply_axis(spec.base, spec.axis, spec.values[j]);
        SweepPoint point;
        point.axis_value = spec.values[j];
        point.point_seed = mix_seed(spec.master_seed, j);
        point.stats = run_batch(config, spec.methods, kernel, spec.trials_per_point,
                                point.point_seed, workers);
        points.push_back(std::move(point));
    }
    return points;
}

} // namespace eee
