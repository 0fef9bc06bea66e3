#ifndef EEE_EXPERIMENTS_HPP
#define EEE_EXPERIMENTS_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "eee/array_model.hpp"
#include "eee/enumerators.hpp"

namespace eee {

enum class Classification {
    correct,     // estimate == true count
    false_alarm, // estimate > true count
    missed,      // estimate < true count
};

struct TrialOutcome {
    EnumMethod method;
    int true_sources = 0;
    int estimated_sources = 0;
    Classification classification = Classification::correct;
};

struct TrialBatchStats {
    EnumMethod method;
    int trials = 0;
    int correct = 0;
    int false_alarms = 0;
    int missed = 0;
    double p_detect = 0.0;
    double p_false_alarm = 0.0;
    double p_missed = 0.0;
};

enum class SweepAxis {
    snapshots,
    snr_db,
    num_sources,
    epsilon,
    eta,
};

std::string_view axis_name(SweepAxis axis); // "snapshots", "snr-db", ...
std::optional<SweepAxis> parse_axis(std::string_view name);

struct SweepSpec {
    ScenarioConfig base;
    SweepAxis axis = SweepAxis::snapshots;
    std::vector<double> values; // non-empty, strictly increasing
    std::vector<EnumMethod> methods;
    int trials_per_point = 1000;
    std::uint64_t master_seed = 0;

    void validate() const;
};

struct SweepPoint {
    double axis_value = 0.0;
    std::uint64_t point_seed = 0; // mix_seed(master_seed, point index)
    std::vector<TrialBatchStats> stats; // one entry per method, input order
};

/// Base config with one axis field substituted. Throws std::invalid_argument
/// naming the axis and value when the result would violate config invariants.
ScenarioConfig apply_axis(const ScenarioConfig& base, SweepAxis axis, double value);

/// One snapshot block from trial_seed, one spectrum, every method applied to
/// it. Pure function of its arguments.
std::vector<TrialOutcome> run_trial(const ScenarioConfig& config,
                                    std::span<const EnumMethod> methods,
                                    const KernelConfig& kernel,
                                    std::uint64_t trial_seed);

/// `trials` independent trials; trial i uses mix_seed(master_seed, i).
/// Output is identical for any worker count.
std::vector<TrialBatchStats> run_batch(const ScenarioConfig& config,
                                       std::span<const EnumMethod> methods,
                                       const KernelConfig& kernel, int trials,
                                       std::uint64_t master_seed, int workers = 1);

/// One run_batch per axis value, point j seeded with mix_seed(master_seed, j).
std::vector<SweepPoint> run_sweep(const SweepSpec& spec, const KernelConfig& kernel,
                                  int workers = 1);

} // namespace eee

#endif
