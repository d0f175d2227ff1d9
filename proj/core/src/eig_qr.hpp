#pragma once

#include <complex>
#include <vector>

namespace butson::detail {

struct EigenSolution {
    std::vector<std::complex<double>> values;
    // vectors[j] is a unit eigenvector for values[j], in the original basis.
    std::vector<std::vector<std::complex<double>>> vectors;
};

/// Dense complex eigensolver: Householder Hessenberg reduction, Wilkinson-
/// shifted QR with accumulated Schur vectors, eigenvectors by triangular
/// back-substitution. Deterministic; throws NumericFailure when the sweep
/// cap is exceeded.
EigenSolution schur_eigen(std::vector<std::complex<double>> a, unsigned n, unsigned max_sweeps);

}  // namespace butson::detail
