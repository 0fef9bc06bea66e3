#ifndef EEE_KERNEL_ENTROPY_HPP
#define EEE_KERNEL_ENTROPY_HPP

#include <optional>
#include <span>
#include <vector>

namespace eee {

enum class KernelType {
    gaussian,
};

enum class BandwidthRule {
    // Silverman's rule evaluated on each entropy window's own samples
    // (singleton windows fall back to the full-spectrum bandwidth).
    silverman_window,
    // One Silverman bandwidth from the full spectrum, shared by all windows.
    silverman_global,
    fixed,
};

struct KernelConfig {
    KernelType kernel = KernelType::gaussian;
    BandwidthRule rule = BandwidthRule::silverman_window;
    double fixed_h = 0.0; // used when rule == fixed; must be > 0
    // Lower bound on any computed bandwidth; defaults to
    // 1e-9 * max(1, mean eigenvalue) so zero-variance windows stay usable.
    std::optional<double> bandwidth_floor;

    void validate() const;
};

/// (1/sqrt(2*pi)) * exp(-x^2/2).
double gaussian_kernel(double x);

/// (1/h) * gaussian_kernel(x/h). Throws for h <= 0.
double scaled_kernel(double x, double h);

/// 1.06 * sd(samples) * n^(-1/5), floored. sd uses divisor n-1.
/// Throws for fewer than two samples.
double silverman_bandwidth(std::span<const double> samples, double floor);

/// The floor actually in effect for a spectrum under a config.
double bandwidth_floor_for(std::span<const double> spectrum, const KernelConfig& config);

/// Bandwidth at full-spectrum level: fixed_h, or Silverman over all values.
/// Also the fallback for windows too small to carry their own bandwidth.
double global_bandwidth(std::span<const double> spectrum, const KernelConfig& config);

/// Kernel entropy estimate over a sample window:
///   H = -(1/n) * sum_k log( (1/n) * sum_l K_h(x_k - x_l) ).
/// Finite for any finite input; throws for an empty window or h <= 0.
double entropy_estimate(std::span<const double> window, double h);

/// F(i) = entropy of the tail window (i..P), i = 1..P (index 0 is i=1).
/// Window bandwidths follow config.rule.
std::vector<double> tail_entropy_profile(std::span<const double> spectrum,
                                         const KernelConfig& config);

/// G(i) = entropy of the head window (1..i), i = 1..P. Head windows always
/// use the global bandwidth, whatever the rule chooses per tail window.
std::vector<double> head_entropy_profile(std::span<const double> spectrum,
                                         const KernelConfig& config);

/// delta[i] = profile[i+1] - profile[i]. Throws for fewer than two entries.
std::vector<double> first_difference(std::span<const double> profile);

} // namespace eee

#endif
