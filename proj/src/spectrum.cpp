#include "eee/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace eee {

namespace {

void check_square_finite(const Eigen::MatrixXcd& matrix)
{
    if (matrix.rows() == 0 || matrix.rows() != matrix.cols())
        throw std::invalid_argument("eigendecomposition needs a non-empty square matrix");
    if (!matrix.allFinite())
        throw std::invalid_argument("matrix has non-finite entries");
}

// Clamps round-off negatives to zero; anything clearly negative is an error
// because every input here is PSD by construction.
std::vector<double> clamp_descending(Eigen::VectorXd values)
{
    const double magnitude = values.size() ? values.cwiseAbs().maxCoeff() : 0.0;
    const double tolerance = 1e-10 * magnitude;
    std::vector<double> out(static_cast<std::size_t>(values.size()));
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        double v = values(values.size() - 1 - i); // solver ascending -> descending
        if (v < 0.0) {
            if (v < -tolerance)
                throw std::domain_error(
                    "eigenvalue " + std::to_string(v) +
                    " is negative beyond the PSD clamp tolerance " + std::to_string(tolerance));
            v = 0.0;
        }
        out[static_cast<std::size_t>(i)] = v;
    }
    return out;
}

} // namespace

Eigen::MatrixXcd sample_covariance(const Eigen::MatrixXcd& snapshots)
{
    if (snapshots.cols() == 0 || snapshots.rows() == 0)
        throw std::invalid_argument("sample_covariance needs at least one snapshot");
    return (snapshots * snapshots.adjoint()) / static_cast<double>(snapshots.cols());
}

EigenSpectrum eigenvalues_descending(const Eigen::MatrixXcd& hermitian)
{
    check_square_finite(hermitian);
    const Eigen::MatrixXcd symmetrized = 0.5 * (hermitian + hermitian.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(symmetrized,
                                                           Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("Hermitian eigenvalue solver failed to converge");
    return {clamp_descending(solver.eigenvalues()), 0};
}

EigenDecomposition eigendecompose(const Eigen::MatrixXcd& hermitian)
{
    check_square_finite(hermitian);
    const Eigen::MatrixXcd symmetrized = 0.5 * (hermitian + hermitian.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(symmetrized);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("Hermitian eigenvalue solver failed to converge");

    EigenDecomposition result;
    result.spectrum = {clamp_descending(solver.eigenvalues()), 0};
    result.vectors = solver.eigenvectors().rowwise().reverse();
    return result;
}

EigenSpectrum snapshot_spectrum(const Eigen::MatrixXcd& snapshots)
{
    EigenSpectrum spectrum = eigenvalues_descending(sample_covariance(snapshots));
    spectrum.num_snapshots = static_cast<int>(snapshots.cols());
    return spectrum;
}

} // namespace eee
