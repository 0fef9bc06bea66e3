#include "eee/enumerators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace eee {

namespace {

constexpr double log_floor = 1e-30;

void check_spectrum(const EigenSpectrum& spectrum)
{
    if (spectrum.size() < 2)
        throw std::invalid_argument("source enumeration needs at least two eigenvalues, got " +
                                    std::to_string(spectrum.size()));
}

// Criterion values within a hair of the winner are numerical ties (identical
// samples leave the profile flat up to rounding); ties break toward the
// smaller index, i.e. toward fewer sources.
constexpr double tie_band = 1e-12;

std::size_t argmin(std::span<const double> values)
{
    const double best = *std::min_element(values.begin(), values.end());
    const double cutoff = best + tie_band * (1.0 + std::abs(best));
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] <= cutoff)
            return i;
    return 0;
}

std::size_t argmax(std::span<const double> values)
{
    const double best = *std::max_element(values.begin(), values.end());
    const double cutoff = best - tie_band * (1.0 + std::abs(best));
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] >= cutoff)
            return i;
    return 0;
}

// Information-criterion scan shared by AIC and MDL: data_scale * data(k) +
// penalty(k) over k = 0..P-1, where data(k) = N (P-k) log(a_k / g_k).
template <typename Penalty>
EstimateResult criterion_scan(EnumMethod method, const EigenSpectrum& spectrum,
                              int num_snapshots, double data_scale, Penalty penalty)
{
    check_spectrum(spectrum);
    if (num_snapshots < 1)
        throw std::invalid_argument("num_snapshots must be positive, got " +
                                    std::to_string(num_snapshots));

    const int count = spectrum.size();
    std::vector<double> criterion(static_cast<std::size_t>(count));
    // Suffix sums built right to left so each k is O(1).
    double sum = 0.0;
    double log_sum = 0.0;
    for (int k = count - 1; k >= 0; --k) {
        const double value = std::max(spectrum.values[static_cast<std::size_t>(k)], log_floor);
        sum += value;
        log_sum += std::log(value);
        const int tail = count - k;
        const double log_arith = std::log(sum / tail);
        const double log_geom = log_sum / tail;
        const double data =
            static_cast<double>(num_snapshots) * tail * (log_arith - log_geom);
        criterion[static_cast<std::size_t>(k)] = data_scale * data + penalty(k);
    }
    const int k_hat = static_cast<int>(argmin(criterion));
    return {method, k_hat, std::move(criterion)};
}

} // namespace

std::string_view method_name(EnumMethod method)
{
    switch (method) {
    case EnumMethod::eee_tail: return "eee-tail";
    case EnumMethod::eee_head: return "eee-head";
    case EnumMethod::aic: return "aic";
    case EnumMethod::mdl: return "mdl";
    }
    throw std::logic_error("unhandled method");
}

std::optional<EnumMethod> parse_method(std::string_view name)
{
    if (name == "eee-tail") return EnumMethod::eee_tail;
    if (name == "eee-head") return EnumMethod::eee_head;
    if (name == "aic") return EnumMethod::aic;
    if (name == "mdl") return EnumMethod::mdl;
    return std::nullopt;
}

EstimateResult eee_tail(const EigenSpectrum& spectrum, const KernelConfig& kernel)
{
    check_spectrum(spectrum);
    std::vector<double> delta =
        first_difference(tail_entropy_profile(spectrum.values, kernel));
    const int k_hat = 1 + static_cast<int>(argmin(delta));
    return {EnumMethod::eee_tail, k_hat, std::move(delta)};
}

EstimateResult eee_head(const EigenSpectrum& spectrum, const KernelConfig& kernel)
{
    check_spectrum(spectrum);
    std::vector<double> delta =
        first_difference(head_entropy_profile(spectrum.values, kernel));
    const int k_hat = 1 + static_cast<int>(argmax(delta));
    return {EnumMethod::eee_head, k_hat, std::move(delta)};
}

EstimateResult aic(const EigenSpectrum& spectrum, int num_snapshots)
{
    const int sensors = spectrum.size();
    return criterion_scan(EnumMethod::aic, spectrum, num_snapshots, 2.0,
                          [sensors](int k) { return 2.0 * k * (2 * sensors - k); });
}

EstimateResult mdl(const EigenSpectrum& spectrum, int num_snapshots)
{
    const int sensors = spectrum.size();
    const double log_n = std::log(static_cast<double>(num_snapshots));
    return criterion_scan(EnumMethod::mdl, spectrum, num_snapshots, 1.0,
                          [sensors, log_n](int k) {
                              return 0.5 * k * (2 * sensors - k) * log_n;
                          });
}

EstimateResult estimate(EnumMethod method, const EigenSpectrum& spectrum,
                        const KernelConfig& kernel, int num_snapshots)
{
    switch (method) {
    case EnumMethod::eee_tail: return eee_tail(spectrum, kernel);
    case EnumMethod::eee_head: return eee_head(spectrum, kernel);
    case EnumMethod::aic: return aic(spectrum, num_snapshots);
    case EnumMethod::mdl: return mdl(spectrum, num_snapshots);
    }
    throw std::logic_error("unhandled method");
}

} // namespace eee
