#ifndef EEE_SPECTRUM_HPP
#define EEE_SPECTRUM_HPP

#include <Eigen/Dense>
#include <vector>

namespace eee {

/// Real eigenvalues of a sample covariance, sorted descending, clamped
/// non-negative. num_snapshots records provenance (0 = not from snapshots).
struct EigenSpectrum {
    std::vector<double> values;
    int num_snapshots = 0;

    int size() const { return static_cast<int>(values.size()); }
};

struct EigenDecomposition {
    EigenSpectrum spectrum;
    Eigen::MatrixXcd vectors; // columns ordered to match spectrum.values
};

/// (1/N) * X * X^H. Throws std::invalid_argument for an empty snapshot block.
Eigen::MatrixXcd sample_covariance(const Eigen::MatrixXcd& snapshots);

/// Eigenvalues of (C + C^H)/2, descending. Values in [-tol, 0) with
/// tol = 1e-10 * max|lambda| are clamped to zero; more negative values or
/// non-finite input entries throw.
EigenSpectrum eigenvalues_descending(const Eigen::MatrixXcd& hermitian);

/// As eigenvalues_descending, with the matching unitary eigenbasis.
EigenDecomposition eigendecompose(const Eigen::MatrixXcd& hermitian);

/// Spectrum of the sample covariance, provenance attached.
EigenSpectrum snapshot_spectrum(const Eigen::MatrixXcd& snapshots);

} // namespace eee

#endif
