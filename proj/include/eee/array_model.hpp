#ifndef EEE_ARRAY_MODEL_HPP
#define EEE_ARRAY_MODEL_HPP

#include <Eigen/Dense>
#include <span>
#include <variant>
#include <vector>

#include "eee/random.hpp"

namespace eee {

struct GaussianNoise {
    double sigma2 = 1.0;
};

/// Two-component Gaussian mixture: variance sigma2 with probability 1-epsilon,
/// eta*sigma2 with probability epsilon (impulsive-noise approximation).
struct GaussianMixtureNoise {
    double sigma2 = 1.0;
    double epsilon = 0.0;
    double eta = 1.0;
};

using NoiseModel = std::variant<GaussianNoise, GaussianMixtureNoise>;

/// Nominal (non-impulse) variance sigma2 of either variant.
double nominal_variance(const NoiseModel& model);

/// Second moment E[|n|^2]: sigma2 for Gaussian, (1-eps+eps*eta)*sigma2 for the mixture.
double noise_second_moment(const NoiseModel& model);

/// Throws std::invalid_argument naming the offending field.
void validate(const NoiseModel& model);

/// One synthetic experiment point: uniform linear array, independent complex
/// Gaussian sources, white Gaussian or Gaussian-mixture noise.
struct ScenarioConfig {
    int num_sensors = 0;   // P
    int num_sources = 0;   // K, K < P
    int num_snapshots = 0; // N
    double snr_db = 0.0;   // per-source power over sigma2, in dB
    std::vector<double> doas;          // radians; empty selects the default grid
    double element_spacing = 0.5;      // in wavelengths
    NoiseModel noise = GaussianNoise{};
    std::vector<double> source_powers; // linear; empty derives from snr_db

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

/// Default source directions: the orthogonal-beam grid
/// sin(theta_k) = (k - (K-1)/2) * 2/P, which makes the steering columns of a
/// half-wavelength array exactly orthogonal. Always inside (-pi/2, pi/2).
std::vector<double> default_doas(int num_sources, int num_sensors);

/// DOAs actually used by a config (explicit list or the default grid).
std::vector<double> resolved_doas(const ScenarioConfig& config);

/// Per-source linear powers (explicit list or sigma2 * 10^(snr_db/10) each).
std::vector<double> resolved_source_powers(const ScenarioConfig& config);

/// P x K matrix with entry (p, k) = exp(j * 2*pi * spacing * p * sin(doas[k])).
/// An empty DOA list yields a P x 0 matrix.
Eigen::MatrixXcd build_steering_matrix(int num_sensors, std::span<const double> doas,
                                       double spacing);

/// A * diag(source_powers) * A^H + E[|n|^2] * I. Hermitian positive definite;
/// exactly P-K of its eigenvalues equal the noise second moment.
Eigen::MatrixXcd population_covariance(const ScenarioConfig& config);

/// P x N matrix of i.i.d. noise entries, column-major draw order.
Eigen::MatrixXcd sample_noise(const NoiseModel& model, int num_sensors,
                              int num_snapshots, RandomStream& rng);

/// X = A*S + W with S drawn column-major first, then W.
Eigen::MatrixXcd generate_snapshots(const ScenarioConfig& config, RandomStream& rng);

} // namespace eee

#endif
