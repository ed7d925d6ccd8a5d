#pragma once

#include <string>

#include "gac/eigen.hpp"
#include "gac/matrix.hpp"

namespace gac {

/// exp(I - delta*L) - e * w1 w1^T for a unit, elementwise-positive w1.
/// The rank-one deflation moves the eigenvalue e to zero, so the spectrum
/// is {0} united with {e^(1 - delta*lambda_j(L)) : lambda_j(L) != 0}.
struct ModifiedLaplacian {
    Mat m;
    double delta;
    Vec w1;
};

ModifiedLaplacian modified_laplacian(const Mat& laplacian, const Vec& w1, double delta);

/// Same deflation applied to the order-l_star Taylor truncation of the
/// exponential (includes the j = 0 identity term).
struct ApproxModifiedLaplacian {
    Mat m;
    int order;
};

ApproxModifiedLaplacian approx_modified_laplacian(const Mat& laplacian, const Vec& w1,
                                                  double delta, int l_star);

enum class DominantKind { Real, ComplexPair };

struct GacReport {
    double gac;               // smallest nonzero real part of the L spectrum
    DominantKind kind;        // nature of the eigenvalue achieving it
    bool assumption2_ok;      // dominant eigenvalue of the modified Laplacian simple
    double max_mod_eig;       // max |lambda| over the modified Laplacian
    double log_recovery;      // (1/delta)(1 - log max_mod_eig), should match gac
    std::string warning;      // set when assumption2_ok is false
};

/// Reference GAC: computed directly from the Laplacian spectrum, then
/// cross-checked against the modified-Laplacian magnitude recovery at the
/// given delta. Multiplicity trouble is reported, not thrown.
GacReport gac_oracle(const Mat& laplacian, double delta);

/// Orthogonal projector onto the column span of Q (n x k, k in {1,2}).
/// Throws DegenerateSubspace when Q is rank deficient at tolerance.
CMat project_f(const CMat& q);

/// Projection of A onto span(Q) expressed in the Q basis: the k x k
/// matrix (Q^H Q)^{-1} Q^H A Q.
CMat project_g(const CMat& a, const CMat& q);

/// Distance between the spans of two unit vectors: sqrt(1 - |<x2,x1>|^2).
double subspace_dist_1d(const Vec& x1, const Vec& x2);
double subspace_dist_1d(const CVec& x1, const CVec& x2);

/// Distance between span{x0,x1} and span{x1,x2} for unit vectors, via the
/// closed form on the three pairwise inner products. Throws
/// DegenerateSubspace when either spanning pair is parallel at tolerance.
double subspace_dist_2d(const Vec& x0, const Vec& x1, const Vec& x2);
double subspace_dist_2d(const CVec& x0, const CVec& x1, const CVec& x2);

/// |tr(R)/2 + sqrt((tr(R)/2)^2 - det(R))| with the principal complex
/// root; the magnitude of the larger-by-this-branch eigenvalue of a 2x2.
double dominant_2x2_magnitude(const CMat& r);
double dominant_2x2_magnitude(double r00, double r01, double r10, double r11);

}  // namespace gac
