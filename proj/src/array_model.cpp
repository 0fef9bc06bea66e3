#include "eee/array_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace eee {

namespace {

constexpr double half_pi = std::numbers::pi / 2.0;

[[noreturn]] void fail(const std::string& message)
{
    throw std::invalid_argument(message);
}

} // namespace

double nominal_variance(const NoiseModel& model)
{
    return std::visit([](const auto& m) { return m.sigma2; }, model);
}

double noise_second_moment(const NoiseModel& model)
{
    if (const auto* mixture = std::get_if<GaussianMixtureNoise>(&model)) {
        return (1.0 - mixture->epsilon + mixture->epsilon * mixture->eta) * mixture->sigma2;
    }
    return std::get<GaussianNoise>(model).sigma2;
}

void validate(const NoiseModel& model)
{
    const double sigma2 = nominal_variance(model);
    if (!(sigma2 > 0.0) || !std::isfinite(sigma2))
        fail("noise sigma2 must be positive, got " + std::to_string(sigma2));
    if (const auto* mixture = std::get_if<GaussianMixtureNoise>(&model)) {
        if (!(mixture->epsilon >= 0.0 && mixture->epsilon <= 1.0))
            fail("noise epsilon must lie in [0, 1], got " + std::to_string(mixture->epsilon));
        if (!(mixture->eta >= 1.0) || !std::isfinite(mixture->eta))
            fail("noise eta must be >= 1, got " + std::to_string(mixture->eta));
    }
}

void ScenarioConfig::validate() const
{
    if (num_sensors < 1)
        fail("num_sensors must be positive, got " + std::to_string(num_sensors));
    if (num_sources < 0)
        fail("num_sources must be non-negative, got " + std::to_string(num_sources));
    if (num_sources >= num_sensors)
        fail("num_sources must be smaller than num_sensors, got num_sources=" +
             std::to_string(num_sources) + " with num_sensors=" + std::to_string(num_sensors));
    if (num_snapshots < 1)
        fail("num_snapshots must be positive, got " + std::to_string(num_snapshots));
    if (!std::isfinite(snr_db))
        fail("snr_db must be finite");
    if (!(element_spacing > 0.0) || !std::isfinite(element_spacing))
        fail("element_spacing must be positive, got " + std::to_string(element_spacing));
    if (!doas.empty()) {
        if (static_cast<int>(doas.size()) != num_sources)
            fail("doas must list exactly num_sources directions, got " +
                 std::to_string(doas.size()) + " for num_sources=" + std::to_string(num_sources));
        for (double doa : doas) {
            if (!(doa > -half_pi && doa < half_pi))
                fail("doas entries must lie in (-pi/2, pi/2), got " + std::to_string(doa));
        }
    }
    if (!source_powers.empty()) {
        if (static_cast<int>(source_powers.size()) != num_sources)
            fail("source_powers must list exactly num_sources powers, got " +
                 std::to_string(source_powers.size()) + " for num_sources=" +
                 std::to_string(num_sources));
        for (double power : source_powers) {
            if (!(power > 0.0) || !std::isfinite(power))
                fail("source_powers entries must be positive, got " + std::to_string(power));
        }
    }
    eee::validate(noise);
}

std::vector<double> default_doas(int num_sources, int num_sensors)
{
    // Orthogonal-beam grid: sines spaced 2/P apart, centred on broadside.
    // Steering columns of a half-wavelength array are then exactly orthogonal.
    std::vector<double> doas(static_cast<std::size_t>(std::max(num_sources, 0)));
    for (int k = 0; k < num_sources; ++k) {
        const double sine = (k - (num_sources - 1) / 2.0) * 2.0 / num_sensors;
        doas[static_cast<std::size_t>(k)] = std::asin(sine);
    }
    return doas;
}

std::vector<double> resolved_doas(const ScenarioConfig& config)
{
    if (!config.doas.empty() || config.num_sources == 0)
        return config.doas;
    return default_doas(config.num_sources, config.num_sensors);
}

std::vector<double> resolved_source_powers(const ScenarioConfig& config)
{
    if (!config.source_powers.empty() || config.num_sources == 0)
        return config.source_powers;
    const double power =
        nominal_variance(config.noise) * std::pow(10.0, config.snr_db / 10.0);
    return std::vector<double>(static_cast<std::size_t>(config.num_sources), power);
}

Eigen::MatrixXcd build_steering_matrix(int num_sensors, std::span<const double> doas,
                                       double spacing)
{
    if (num_sensors < 1)
        fail("num_sensors must be positive, got " + std::to_string(num_sensors));
    if (!(spacing > 0.0))
        fail("element_spacing must be positive, got " + std::to_string(spacing));

    Eigen::MatrixXcd steering(num_sensors, static_cast<Eigen::Index>(doas.size()));
    for (Eigen::Index k = 0; k < steering.cols(); ++k) {
        const double doa = doas[static_cast<std::size_t>(k)];
        if (!(doa > -half_pi && doa < half_pi))
            fail("doas entries must lie in (-pi/2, pi/2), got " + std::to_string(doa));
        const double phase_step = 2.0 * std::numbers::pi * spacing * std::sin(doa);
        for (Eigen::Index p = 0; p < num_sensors; ++p)
            steering(p, k) = std::polar(1.0, phase_step * static_cast<double>(p));
    }
    return steering;
}

Eigen::MatrixXcd population_covariance(const ScenarioConfig& config)
{
    config.validate();
    const auto doas = resolved_doas(config);
    const auto powers = resolved_source_powers(config);
    const Eigen::MatrixXcd steering =
        build_steering_matrix(config.num_sensors, doas, config.element_spacing);

    Eigen::VectorXd power_diag =
        Eigen::Map<const Eigen::VectorXd>(powers.data(), static_cast<Eigen::Index>(powers.size()));
    Eigen::MatrixXcd covariance =
        steering * power_diag.asDiagonal() * steering.adjoint();
    covariance += noise_second_moment(config.noise) *
                  Eigen::MatrixXcd::Identity(config.num_sensors, config.num_sensors);
    return covariance;
}

Eigen::MatrixXcd sample_noise(const NoiseModel& model, int num_sensors,
                              int num_snapshots, RandomStream& rng)
{
    validate(model);
    if (num_sensors < 1 || num_snapshots < 1)
        fail("noise block dimensions must be positive");

    Eigen::MatrixXcd noise(num_sensors, num_snapshots);
    if (const auto* mixture = std::get_if<GaussianMixtureNoise>(&model)) {
        const double impulse_variance = mixture->eta * mixture->sigma2;
        for (Eigen::Index t = 0; t < noise.cols(); ++t) {
            for (Eigen::Index p = 0; p < noise.rows(); ++p) {
                const bool impulse = rng.uniform() < mixture->epsilon;
                noise(p, t) = rng.complex_normal(impulse ? impulse_variance : mixture->sigma2);
            }
        }
    } else {
        const double sigma2 = std::get<GaussianNoise>(model).sigma2;
        for (Eigen::Index t = 0; t < noise.cols(); ++t)
            for (Eigen::Index p = 0; p < noise.rows(); ++p)
                noise(p, t) = rng.complex_normal(sigma2);
    }
    return noise;
}

Eigen::MatrixXcd generate_snapshots(const ScenarioConfig& config, RandomStream& rng)
{
    config.validate();
    const auto doas = resolved_doas(config);
    const auto powers = resolved_source_powers(config);
    const Eigen::MatrixXcd steering =
        build_steering_matrix(config.num_sensors, doas, config.element_spacing);

    Eigen::MatrixXcd signals(config.num_sources, config.num_snapshots);
    for (Eigen::Index t = 0; t < signals.cols(); ++t)
        for (Eigen::Index k = 0; k < signals.rows(); ++k)
            signals(k, t) = rng.complex_normal(powers[static_cast<std::size_t>(k)]);

    Eigen::MatrixXcd snapshots =
        sample_noise(config.noise, config.num_sensors, config.num_snapshots, rng);
    if (config.num_sources > 0)
        snapshots += steering * signals;
    return snapshots;
}

} // namespace eee
