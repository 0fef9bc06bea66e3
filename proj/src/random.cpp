#include "eee/random.hpp"

#include <cmath>
#include <numbers>

namespace eee {

std::complex<double> RandomStream::complex_normal(double variance)
{
    // Box-Muller over two explicit uniforms; each component gets variance/2,
    // so |z|^2 is exponential with mean `variance`.
    const double u1 = uniform_positive();
    const double u2 = uniform();
    const double radius = std::sqrt(-variance * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

} // namespace eee
