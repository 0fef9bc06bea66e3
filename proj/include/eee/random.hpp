#ifndef EEE_RANDOM_HPP
#define EEE_RANDOM_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace eee {

// Derives the seed of an indexed child stream (trial seeds from a batch seed,
// per-point seeds from a sweep seed). This is the splitmix64 output function
// applied to seed + (index+1)*0x9E3779B97F4A7C15, i.e. element (index+1) of
// the splitmix64 sequence started at `seed`. The function is part of the CSV
// reproducibility contract and must not change between releases.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index)
{
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Deterministic random stream: mt19937_64 plus explicit Box-Muller sampling,
/// so draws are identical across platforms and standard libraries.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform()
    {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Circularly symmetric complex Gaussian with E[|z|^2] = variance;
    /// real and imaginary parts each carry variance/2.
    std::complex<double> complex_normal(double variance);

private:
    // Uniform in (0, 1], safe as a log() argument.
    double uniform_positive()
    {
        return static_cast<double>((engine_() >> 11) + 1ULL) * 0x1.0p-53;
    }

    std::mt19937_64 engine_;
};

} // namespace eee

#endif
