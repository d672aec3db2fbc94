#pragma once

#include <cstddef>
#include <vector>

namespace centra {

/// Dense symmetric eigendecomposition (Householder tridiagonalization +
/// implicit-shift QL). Eigenvalues return in descending order; when
/// want_vectors is set, column k of `vectors` (vectors[i * n + k]) is the
/// unit eigenvector paired with eigenvalue k.
struct SymmetricEigen {
    std::vector<double> values;
    std::vector<double> vectors;  // row-major n x n, empty unless requested
};

SymmetricEigen symmetric_eigen(std::size_t n, const std::vector<double>& matrix_row_major,
                               bool want_vectors);

}  // namespace centra
