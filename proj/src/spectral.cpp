#include "gac/spectral.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "gac/errors.hpp"
#include "gac/expm.hpp"

namespace gac {

namespace {
constexpr double kEulerE = 2.718281828459045235360287;

void subtract_deflation(Mat& m, const Vec& w1) {
    const int n = m.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) -= kEulerE * w1[i] * w1[j];
}
}  // namespace

ModifiedLaplacian modified_laplacian(const Mat& laplacian, const Vec& w1, double delta) {
    const int n = laplacian.rows();
    Mat arg = Mat::identity(n) - laplacian * delta;
    Mat m = matrix_exp(arg, 1e-13);
    subtract_deflation(m, w1);
    return {std::move(m), delta, w1};
}

ApproxModifiedLaplacian approx_modified_laplacian(const Mat& laplacian, const Vec& w1,
                                                  double delta, int l_star) {
    const int n = laplacian.rows();
    const Mat arg = Mat::identity(n) - laplacian * delta;
    Mat sum = Mat::identity(n);
    Mat term = Mat::identity(n);
    for (int j = 1; j <= l_star; ++j) {
        term = term * arg;
        term *= 1.0 / j;
        sum += term;
    }
    subtract_deflation(sum, w1);
    return {std::move(sum), l_star};
}

GacReport gac_oracle(const Mat& laplacian, double delta) {
    const SpectralTriplets spec = eig_dense(laplacian);
    const double scale = std::max(laplacian.inf_norm(), 1e-300);

    GacReport rep{};
    rep.gac = std::numeric_limits<double>::infinity();
    const double zero_tol = 1e-8 * scale;
    for (const EigenTriplet& t : spec.triplets) {
        if (std::abs(t.value) <= zero_tol) continue;
        if (t.value.real() < rep.gac) {
            rep.gac = t.value.real();
            rep.kind = std::abs(t.value.imag()) > zero_tol ? DominantKind::ComplexPair
                                                           : DominantKind::Real;
        }
    }

    const Vec w1 = left_null_eigvec(laplacian);
    const ModifiedLaplacian mod = modified_laplacian(laplacian, w1, delta);
    const SpectralTriplets mspec = eig_dense(mod.m);
    rep.max_mod_eig = std::abs(mspec.dominant().value);
    rep.log_recovery = (1.0 / delta) * (1.0 - std::log(rep.max_mod_eig));

    // Dominant eigenvalue simple: either one real value on top, or a
    // conjugate pair; a third eigenvalue at the same magnitude (or a
    // same-magnitude non-conjugate) violates the assumption.
    const int n = static_cast<int>(mspec.triplets.size());
    const cplx dom = mspec.dominant().value;
    const bool pair = std::abs(dom.imag()) > zero_tol;
    const int skip = pair ? 2 : 1;
    rep.assumption2_ok = true;
    if (n > skip) {
        const double next = std::abs(mspec.triplets[n - 1 - skip].value);
        if (next >= rep.max_mod_eig * (1.0 - 1e-8)) {
            rep.assumption2_ok = false;
            std::ostringstream os;
            os << "dominant eigenvalue of the modified Laplacian is not simple at tolerance: "
               << "|lambda| ties at " << rep.max_mod_eig;
            rep.warning = os.str();
        }
    }
    if (pair) {
        // the conjugate partner must actually be the conjugate
        const cplx partner = mspec.triplets[n - 2].value;
        if (std::abs(partner - std::conj(dom)) > 1e-6 * rep.max_mod_eig) {
            rep.assumption2_ok = false;
            rep.warning = "top two modified-Laplacian eigenvalues are not a conjugate pair";
        }
    }
    return rep;
}

namespace {

// (Q^H Q) for k <= 2 columns, with its inverse by closed form.
struct Gram {
    cplx g00, g01, g10, g11;
    int k;
};

Gram gram_inverse(const CMat& q) {
    const int n = q.rows(), k = q.cols();
    if (k < 1 || k > 2) throw std::invalid_argument("projection utilities take 1 or 2 columns");
    Gram inv{};
    inv.k = k;
    cplx g00 = 0, g01 = 0, g11 = 0;
    for (int i = 0; i < n; ++i) {
        g00 += std::conj(q(i, 0)) * q(i, 0);
        if (k == 2) {
            g01 += std::conj(q(i, 0)) * q(i, 1);
            g11 += std::conj(q(i, 1)) * q(i, 1);
        }
    }
    if (k == 1) {
        if (std::abs(g00) < 1e-300) throw DegenerateSubspace("projection basis column is zero");
        inv.g00 = 1.0 / g00;
        return inv;
    }
    const cplx det = g00 * g11 - g01 * std::conj(g01);
    // rank check via condition of the Gram matrix
    const double tr = std::abs(g00) + std::abs(g11);
    if (std::abs(det) <= 1e-12 * tr * tr)
        throw DegenerateSubspace("projection basis columns are parallel at tolerance");
    inv.g00 = g11 / det;
    inv.g01 = -g01 / det;
    inv.g10 = -std::conj(g01) / det;
    inv.g11 = g00 / det;
    return inv;
}

}  // namespace

CMat project_f(const CMat& q) {
    const int n = q.rows(), k = q.cols();
    const Gram inv = gram_inverse(q);
    // Q * inv(Q^H Q) * Q^H
    CMat qi(n, k);
    for (int i = 0; i < n; ++i) {
        qi(i, 0) = q(i, 0) * inv.g00 + (k == 2 ? q(i, 1) * inv.g10 : cplx{});
        if (k == 2) qi(i, 1) = q(i, 0) * inv.g01 + q(i, 1) * inv.g11;
    }
    CMat p(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx s = qi(i, 0) * std::conj(q(j, 0));
            if (k == 2) s += qi(i, 1) * std::conj(q(j, 1));
            p(i, j) = s;
        }
    return p;
}

CMat project_g(const CMat& a, const CMat& q) {
    const int k = q.cols();
    const Gram inv = gram_inverse(q);
    const CMat aq = a * q;
    // Q^H (A Q)
    CMat qhaq(k, k);
    for (int c = 0; c < k; ++c)
        for (int d = 0; d < k; ++d) {
            cplx s = 0;
            for (int i = 0; i < q.rows(); ++i) s += std::conj(q(i, c)) * aq(i, d);
            qhaq(c, d) = s;
        }
    CMat r(k, k);
    for (int d = 0; d < k; ++d) {
        r(0, d) = inv.g00 * qhaq(0, d) + (k == 2 ? inv.g01 * qhaq(1, d) : cplx{});
        if (k == 2) r(1, d) = inv.g10 * qhaq(0, d) + inv.g11 * qhaq(1, d);
    }
    return r;
}

namespace {

void require_unit(double norm, const char* who) {
    if (std::abs(norm - 1.0) > 1e-10)
        throw std::invalid_argument(std::string(who) + ": input vectors must have unit norm");
}

double dist1_from_z(double z_sq) {
    const double rad = 1.0 - z_sq;
    return std::sqrt(std::max(rad, 0.0));
}

double dist2_from_z(cplx z1, cplx z2, cplx z3) {
    const double z1sq = std::norm(z1), z2sq = std::norm(z2);
    if (z1sq >= 1.0 - 1e-12 || z2sq >= 1.0 - 1e-12)
        throw DegenerateSubspace("successive iterates are parallel; 2-d span undefined");
    const double num = std::norm(z1 * z2 - z3);
    const double rad = 1.0 - num / ((1.0 - z1sq) * (1.0 - z2sq));
    return std::sqrt(std::min(std::max(rad, 0.0), 1.0));
}

}  // namespace

double subspace_dist_1d(const Vec& x1, const Vec& x2) {
    require_unit(norm2(x1), "subspace_dist_1d");
    require_unit(norm2(x2), "subspace_dist_1d");
    const double z = dot(x2, x1);
    return dist1_from_z(z * z);
}

double subspace_dist_1d(const CVec& x1, const CVec& x2) {
    require_unit(norm2(x1), "subspace_dist_1d");
    require_unit(norm2(x2), "subspace_dist_1d");
    return dist1_from_z(std::norm(cdot(x2, x1)));
}

double subspace_dist_2d(const Vec& x0, const Vec& x1, const Vec& x2) {
    require_unit(norm2(x0), "subspace_dist_2d");
    require_unit(norm2(x1), "subspace_dist_2d");
    require_unit(norm2(x2), "subspace_dist_2d");
    return dist2_from_z(dot(x2, x1), dot(x1, x0), dot(x2, x0));
}

double subspace_dist_2d(const CVec& x0, const CVec& x1, const CVec& x2) {
    require_unit(norm2(x0), "subspace_dist_2d");
    require_unit(norm2(x1), "subspace_dist_2d");
    require_unit(norm2(x2), "subspace_dist_2d");
    return dist2_from_z(cdot(x2, x1), cdot(x1, x0), cdot(x2, x0));
}

double dominant_2x2_magnitude(const CMat& r) {
    const cplx half_tr = 0.5 * (r(0, 0) + r(1, 1));
    const cplx det = r(0, 0) * r(1, 1) - r(0, 1) * r(1, 0);
    return std::abs(half_tr + std::sqrt(half_tr * half_tr - det));
}

double dominant_2x2_magnitude(double r00, double r01, double r10, double r11) {
    const cplx half_tr = 0.5 * (r00 + r11);
    const cplx det = r00 * r11 - r01 * r10;
    return std::abs(half_tr + std::sqrt(half_tr * half_tr - det));
}

}  // namespace gac
