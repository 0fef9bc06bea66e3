#include "eee/kernel_entropy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace eee {

namespace {

constexpr double inv_sqrt_two_pi = 0.3989422804014327;

double sample_sd(std::span<const double> samples)
{
    const std::size_t n = samples.size();
    double mean = 0.0;
    for (double v : samples)
        mean += v;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double v : samples)
        ss += (v - mean) * (v - mean);
    return std::sqrt(ss / static_cast<double>(n - 1));
}

double window_bandwidth(std::span<const double> window, const KernelConfig& config,
                        double global_h, double floor)
{
    switch (config.rule) {
    case BandwidthRule::fixed:
        return config.fixed_h;
    case BandwidthRule::silverman_global:
        return global_h;
    case BandwidthRule::silverman_window:
        return window.size() >= 2 ? silverman_bandwidth(window, floor) : global_h;
    }
    throw std::logic_error("unhandled bandwidth rule");
}

} // namespace

void KernelConfig::validate() const
{
    if (rule == BandwidthRule::fixed && !(fixed_h > 0.0))
        throw std::invalid_argument("fixed bandwidth must be positive, got " +
                                    std::to_string(fixed_h));
    if (bandwidth_floor && !(*bandwidth_floor > 0.0))
        throw std::invalid_argument("bandwidth_floor must be positive, got " +
                                    std::to_string(*bandwidth_floor));
}

double gaussian_kernel(double x)
{
    return inv_sqrt_two_pi * std::exp(-0.5 * x * x);
}

double scaled_kernel(double x, double h)
{
    if (!(h > 0.0))
        throw std::invalid_argument("bandwidth must be positive, got " + std::to_string(h));
    return gaussian_kernel(x / h) / h;
}

double silverman_bandwidth(std::span<const double> samples, double floor)
{
    if (samples.size() < 2)
        throw std::invalid_argument("Silverman bandwidth needs at least two samples, got " +
                                    std::to_string(samples.size()));
    const double sd = sample_sd(samples);
    const double h =
        1.06 * sd * std::pow(static_cast<double>(samples.size()), -0.2);
    return std::max(h, floor);
}

double bandwidth_floor_for(std::span<const double> spectrum, const KernelConfig& config)
{
    config.validate();
    if (config.bandwidth_floor)
        return *config.bandwidth_floor;
    double mean = 0.0;
    for (double v : spectrum)
        mean += v;
    if (!spectrum.empty())
        mean /= static_cast<double>(spectrum.size());
    return 1e-9 * std::max(1.0, mean);
}

double global_bandwidth(std::span<const double> spectrum, const KernelConfig& config)
{
    config.validate();
    if (config.rule == BandwidthRule::fixed)
        return config.fixed_h;
    return silverman_bandwidth(spectrum, bandwidth_floor_for(spectrum, config));
}

double entropy_estimate(std::span<const double> window, double h)
{
    if (window.empty())
        throw std::invalid_argument("entropy window must be non-empty");
    if (!(h > 0.0))
        throw std::invalid_argument("bandwidth must be positive, got " + std::to_string(h));

    const std::size_t n = window.size();
    const double inv_n = 1.0 / static_cast<double>(n);
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        double density = 0.0;
        for (std::size_t l = 0; l < n; ++l)
            density += gaussian_kernel((window[k] - window[l]) / h);
        // density/(n*h) >= K(0)/(n*h) > 0, so the log is always finite.
        total += std::log(density * inv_n / h);
    }
    return -total * inv_n;
}

std::vector<double> tail_entropy_profile(std::span<const double> spectrum,
                                         const KernelConfig& config)
{
    const std::size_t count = spectrum.size();
    if (count < 2)
        throw std::invalid_argument("entropy profile needs a spectrum of at least two values");
    const double floor = bandwidth_floor_for(spectrum, config);
    const double global_h = global_bandwidth(spectrum, config);

    std::vector<double> profile(count);
    for (std::size_t i = 0; i < count; ++i) {
        const auto window = spectrum.subspan(i);
        profile[i] = entropy_estimate(window, window_bandwidth(window, config, global_h, floor));
    }
    return profile;
}

std::vector<double> head_entropy_profile(std::span<const double> spectrum,
                                         const KernelConfig& config)
{
    const std::size_t count = spectrum.size();
    if (count < 2)
        throw std::invalid_argument("entropy profile needs a spectrum of at least two values");
    const double global_h = global_bandwidth(spectrum, config);

    std::vector<double> profile(count);
    for (std::size_t i = 0; i < count; ++i)
        profile[i] = entropy_estimate(spectrum.first(i + 1), global_h);
    return profile;
}

std::vector<double> first_difference(std::span<const double> profile)
{
    if (profile.size() < 2)
        throw std::invalid_argument("first difference needs at least two profile values");
    std::vector<double> delta(profile.size() - 1);
    for (std::size_t i = 0; i + 1 < profile.size(); ++i)
        delta[i] = profile[i + 1] - profile[i];
    return delta;
}

} // namespace eee
