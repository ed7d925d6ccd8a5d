#pragma once

#include <vector>

#include "gac/matrix.hpp"

namespace gac {

struct EigenTriplet {
    cplx value;
    CVec right;  // unit norm
    CVec left;   // unit norm, left.adjoint() * A = value * left.adjoint()
};

/// Full eigensystem of a real square matrix, sorted by nondecreasing
/// eigenvalue magnitude. Right vectors come from the matrix itself, left
/// vectors from the transpose problem, paired by conjugate eigenvalue.
struct SpectralTriplets {
    std::vector<EigenTriplet> triplets;

    const EigenTriplet& dominant() const { return triplets.back(); }
};

/// Dense nonsymmetric eigensolver: Householder reduction to Hessenberg
/// form followed by the implicit double-shift QR iteration, eigenvectors
/// by quasi-triangular back substitution. Desk scale (n <= 512).
/// Throws EigNonConvergence if a block fails to split within the
/// iteration cap.
SpectralTriplets eig_dense(const Mat& a);

/// Unit left eigenvector of a Laplacian for its zero eigenvalue, with the
/// sign chosen elementwise positive. Throws MultiplicityError when the
/// zero eigenvalue is not simple at tolerance.
Vec left_null_eigvec(const Mat& laplacian);

}  // namespace gac
