#include "gac/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "gac/errors.hpp"

namespace gac {
namespace {

// Complex scalar division from real parts, (xr + i xi) / (yr + i yi),
// guarded against overflow in the classic Smith form.
struct CDiv {
    double r, i;
};

CDiv cdiv(double xr, double xi, double yr, double yi) {
    if (std::abs(yr) > std::abs(yi)) {
        const double t = yi / yr;
        const double d = yr + t * yi;
        return {(xr + t * xi) / d, (xi - t * xr) / d};
    }
    const double t = yr / yi;
    const double d = yi + t * yr;
    return {(t * xr + xi) / d, (t * xi - xr) / d};
}

// Real Schur decomposition with accumulated transforms and eigenvectors
// recovered by back substitution; the classic EISPACK/JAMA pair of
// orthes + hqr2 restated over our matrix type.
class SchurEigen {
public:
    explicit SchurEigen(const Mat& a)
        : n_(a.rows()), h_(a), v_(Mat::identity(a.rows())), d_(n_, 0.0), e_(n_, 0.0) {
        reduce_to_hessenberg();
        francis_qr();
    }

    // eigenvalue j as (d, e); eigenvector columns of v_ follow the JAMA
    // convention: real eigenvalue -> real column j; conjugate pair at
    // (j, j+1) -> columns j (real part) and j+1 (imag part).
    CVec eigenvector(int j) const {
        CVec x(n_);
        if (e_[j] == 0.0) {
            for (int i = 0; i < n_; ++i) x[i] = v_(i, j);
        } else {
            const int re = (e_[j] > 0.0) ? j : j - 1;
            const int im = re + 1;
            const double sign = (e_[j] > 0.0) ? 1.0 : -1.0;
            for (int i = 0; i < n_; ++i) x[i] = cplx(v_(i, re), sign * v_(i, im));
        }
        return x;
    }

    int size() const { return n_; }
    cplx value(int j) const { return {d_[j], e_[j]}; }

private:
    void reduce_to_hessenberg() {
        const int low = 0, high = n_ - 1;
        std::vector<double> ort(n_, 0.0);

        for (int m = low + 1; m <= high - 1; ++m) {
            double scale = 0.0;
            for (int i = m; i <= high; ++i) scale += std::abs(h_(i, m - 1));
            if (scale == 0.0) continue;

            double hsum = 0.0;
            for (int i = high; i >= m; --i) {
                ort[i] = h_(i, m - 1) / scale;
                hsum += ort[i] * ort[i];
            }
            double g = std::sqrt(hsum);
            if (ort[m] > 0.0) g = -g;
            hsum -= ort[m] * g;
            ort[m] -= g;

            // apply Householder similarity: (I - u u' / h) on both sides
            for (int j = m; j < n_; ++j) {
                double f = 0.0;
                for (int i = high; i >= m; --i) f += ort[i] * h_(i, j);
                f /= hsum;
                for (int i = m; i <= high; ++i) h_(i, j) -= f * ort[i];
            }
            for (int i = 0; i <= high; ++i) {
                double f = 0.0;
                for (int j = high; j >= m; --j) f += ort[j] * h_(i, j);
                f /= hsum;
                for (int j = m; j <= high; ++j) h_(i, j) -= f * ort[j];
            }
            ort[m] *= scale;
            h_(m, m - 1) = scale * g;

            // accumulate into v_ lazily via stored ort and subdiagonal
            hess_reflectors_.push_back({m, ort});
        }

        for (auto it = hess_reflectors_.rbegin(); it != hess_reflectors_.rend(); ++it) {
            const int m = it->first;
            const std::vector<double>& ort0 = it->second;
            if (h_(m, m - 1) == 0.0) continue;
            std::vector<double> ort = ort0;
            for (int i = m + 1; i <= high; ++i) ort[i] = h_(i, m - 1);
            for (int j = m; j <= high; ++j) {
                double g = 0.0;
                for (int i = m; i <= high; ++i) g += ort[i] * v_(i, j);
                g = (g / ort[m]) / h_(m, m - 1);
                for (int i = m; i <= high; ++i) v_(i, j) += g * ort[i];
            }
        }
    }

    void francis_qr() {
        const int nn = n_;
        int n = nn - 1;
        const int low = 0, high = nn - 1;
        const double eps = std::numeric_limits<double>::epsilon();
        double exshift = 0.0;
        double p = 0, q = 0, r = 0, s = 0, z = 0, w = 0, x = 0, y = 0;

        double norm = 0.0;
        for (int i = 0; i < nn; ++i)
            for (int j = std::max(i - 1, 0); j < nn; ++j) norm += std::abs(h_(i, j));

        int iter = 0;
        int total_iter = 0;
        const int iter_cap = 50 * std::max(nn, 10);
        while (n >= low) {
            if (++total_iter > iter_cap) {
                std::ostringstream os;
                os << "QR iteration exceeded " << iter_cap << " sweeps at block " << n
                   << "; trailing subdiagonal " << (n > 0 ? h_(n, n - 1) : 0.0);
                throw EigNonConvergence(os.str());
            }

            // find a small subdiagonal element
            int l = n;
            while (l > low) {
                s = std::abs(h_(l - 1, l - 1)) + std::abs(h_(l, l));
                if (s == 0.0) s = norm;
                if (std::abs(h_(l, l - 1)) < eps * s) break;
                --l;
            }

            if (l == n) {  // one real root found
                h_(n, n) += exshift;
                d_[n] = h_(n, n);
                e_[n] = 0.0;
                --n;
                iter = 0;
            } else if (l == n - 1) {  // two roots found
                w = h_(n, n - 1) * h_(n - 1, n);
                p = (h_(n - 1, n - 1) - h_(n, n)) / 2.0;
                q = p * p + w;
                z = std::sqrt(std::abs(q));
                h_(n, n) += exshift;
                h_(n - 1, n - 1) += exshift;
                x = h_(n, n);

                if (q >= 0) {  // real pair
                    z = (p >= 0) ? p + z : p - z;
                    d_[n - 1] = x + z;
                    d_[n] = d_[n - 1];
                    if (z != 0.0) d_[n] = x - w / z;
                    e_[n - 1] = 0.0;
                    e_[n] = 0.0;
                    x = h_(n, n - 1);
                    s = std::abs(x) + std::abs(z);
                    p = x / s;
                    q = z / s;
                    r = std::sqrt(p * p + q * q);
                    p /= r;
                    q /= r;
                    for (int j = n - 1; j < nn; ++j) {  // row modification
                        z = h_(n - 1, j);
                        h_(n - 1, j) = q * z + p * h_(n, j);
                        h_(n, j) = q * h_(n, j) - p * z;
                    }
                    for (int i = 0; i <= n; ++i) {  // column modification
                        z = h_(i, n - 1);
                        h_(i, n - 1) = q * z + p * h_(i, n);
                        h_(i, n) = q * h_(i, n) - p * z;
                    }
                    for (int i = low; i <= high; ++i) {  // accumulate
                        z = v_(i, n - 1);
                        v_(i, n - 1) = q * z + p * v_(i, n);
                        v_(i, n) = q * v_(i, n) - p * z;
                    }
                } else {  // complex pair
                    d_[n - 1] = x + p;
                    d_[n] = x + p;
                    e_[n - 1] = z;
                    e_[n] = -z;
                }
                n -= 2;
                iter = 0;
            } else {  // no convergence yet; form shift and sweep
                x = h_(n, n);
                y = 0.0;
                w = 0.0;
                if (l < n) {
                    y = h_(n - 1, n - 1);
                    w = h_(n, n - 1) * h_(n - 1, n);
                }

                if (iter == 10 || iter == 20) {  // exceptional shift
                    exshift += x;
                    for (int i = low; i <= n; ++i) h_(i, i) -= x;
                    s = std::abs(h_(n, n - 1)) + std::abs(h_(n - 1, n - 2));
                    x = y = 0.75 * s;
                    w = -0.4375 * s * s;
                }
                if (iter == 30) {  // MATLAB-style ad hoc shift
                    s = (y - x) / 2.0;
                    s = s * s + w;
                    if (s > 0) {
                        s = std::sqrt(s);
                        if (y < x) s = -s;
                        s = x - w / ((y - x) / 2.0 + s);
                        for (int i = low; i <= n; ++i) h_(i, i) -= s;
                        exshift += s;
                        x = y = w = 0.964;
                    }
                }
                ++iter;

                // look for two consecutive small subdiagonal elements
                int m = n - 2;
                while (m >= l) {
                    z = h_(m, m);
                    r = x - z;
                    s = y - z;
                    p = (r * s - w) / h_(m + 1, m) + h_(m, m + 1);
                    q = h_(m + 1, m + 1) - z - r - s;
                    r = h_(m + 2, m + 1);
                    s = std::abs(p) + std::abs(q) + std::abs(r);
                    p /= s;
                    q /= s;
                    r /= s;
                    if (m == l) break;
                    if (std::abs(h_(m, m - 1)) * (std::abs(q) + std::abs(r)) <
                        eps * (std::abs(p) * (std::abs(h_(m - 1, m - 1)) + std::abs(z) +
                                              std::abs(h_(m + 1, m + 1)))))
                        break;
                    --m;
                }
                for (int i = m + 2; i <= n; ++i) {
                    h_(i, i - 2) = 0.0;
                    if (i > m + 2) h_(i, i - 3) = 0.0;
                }

                // double QR sweep over rows l..n, columns m..n
                for (int k = m; k <= n - 1; ++k) {
                    const bool notlast = (k != n - 1);
                    if (k != m) {
                        p = h_(k, k - 1);
                        q = h_(k + 1, k - 1);
                        r = notlast ? h_(k + 2, k - 1) : 0.0;
                        x = std::abs(p) + std::abs(q) + std::abs(r);
                        if (x == 0.0) continue;
                        p /= x;
                        q /= x;
                        r /= x;
                    }
                    s = std::sqrt(p * p + q * q + r * r);
                    if (p < 0) s = -s;
                    if (s != 0) {
                        if (k != m)
                            h_(k, k - 1) = -s * x;
                        else if (l != m)
                            h_(k, k - 1) = -h_(k, k - 1);
                        p += s;
                        x = p / s;
                        y = q / s;
                        z = r / s;
                        q /= p;
                        r /= p;

                        for (int j = k; j < nn; ++j) {  // row modification
                            p = h_(k, j) + q * h_(k + 1, j);
                            if (notlast) {
                                p += r * h_(k + 2, j);
                                h_(k + 2, j) -= p * z;
                            }
                            h_(k, j) -= p * x;
                            h_(k + 1, j) -= p * y;
                        }
                        for (int i = 0; i <= std::min(n, k + 3); ++i) {  // column modification
                            p = x * h_(i, k) + y * h_(i, k + 1);
                            if (notlast) {
                                p += z * h_(i, k + 2);
                                h_(i, k + 2) -= p * r;
                            }
                            h_(i, k) -= p;
                            h_(i, k + 1) -= p * q;
                        }
                        for (int i = low; i <= high; ++i) {  // accumulate
                            p = x * v_(i, k) + y * v_(i, k + 1);
                            if (notlast) {
                                p += z * v_(i, k + 2);
                                v_(i, k + 2) -= p * r;
                            }
                            v_(i, k) -= p;
                            v_(i, k + 1) -= p * q;
                        }
                    }
                }
            }
        }

        back_substitute(norm);
    }

    // Solve (T - lambda I) y = 0 on the quasi-triangular factor and
    // transform back; fills v_ with eigenvector columns.
    void back_substitute(double norm) {
        const int nn = n_;
        const int low = 0, high = nn - 1;
        const double eps = std::numeric_limits<double>::epsilon();
        double p, q, r = 0, s = 0, t, w, x, y, z = 0;

        if (norm == 0.0) return;

        for (int n = nn - 1; n >= 0; --n) {
            p = d_[n];
            q = e_[n];

            if (q == 0.0) {  // real vector
                int l = n;
                h_(n, n) = 1.0;
                for (int i = n - 1; i >= 0; --i) {
                    w = h_(i, i) - p;
                    r = 0.0;
                    for (int j = l; j <= n; ++j) r += h_(i, j) * h_(j, n);

                    if (e_[i] < 0.0) {
                        z = w;
                        s = r;
                    } else {
                        l = i;
                        if (e_[i] == 0.0) {
                            h_(i, n) = (w != 0.0) ? -r / w : -r / (eps * norm);
                        } else {  // solve real 2x2 block row
                            x = h_(i, i + 1);
                            y = h_(i + 1, i);
                            q = (d_[i] - p) * (d_[i] - p) + e_[i] * e_[i];
                            t = (x * s - z * r) / q;
                            h_(i, n) = t;
                            h_(i + 1, n) = (std::abs(x) > std::abs(z)) ? (-r - w * t) / x
                                                                       : (-s - y * t) / z;
                        }
                        // overflow control
                        t = std::abs(h_(i, n));
                        if ((eps * t) * t > 1) {
                            for (int j = i; j <= n; ++j) h_(j, n) /= t;
                        }
                    }
                }
            } else if (q < 0.0) {  // complex vector, stored in columns n-1, n
                int l = n - 1;

                if (std::abs(h_(n, n - 1)) > std::abs(h_(n - 1, n))) {
                    h_(n - 1, n - 1) = q / h_(n, n - 1);
                    h_(n - 1, n) = -(h_(n, n) - p) / h_(n, n - 1);
                } else {
                    const CDiv c = cdiv(0.0, -h_(n - 1, n), h_(n - 1, n - 1) - p, q);
                    h_(n - 1, n - 1) = c.r;
                    h_(n - 1, n) = c.i;
                }
                h_(n, n - 1) = 0.0;
                h_(n, n) = 1.0;
                for (int i = n - 2; i >= 0; --i) {
                    double ra = 0.0, sa = 0.0;
                    for (int j = l; j <= n; ++j) {
                        ra += h_(i, j) * h_(j, n - 1);
                        sa += h_(i, j) * h_(j, n);
                    }
                    w = h_(i, i) - p;

                    if (e_[i] < 0.0) {
                        z = w;
                        r = ra;
                        s = sa;
                    } else {
                        l = i;
                        if (e_[i] == 0.0) {
                            const CDiv c = cdiv(-ra, -sa, w, q);
                            h_(i, n - 1) = c.r;
                            h_(i, n) = c.i;
                        } else {  // solve complex 2x2 block row
                            x = h_(i, i + 1);
                            y = h_(i + 1, i);
                            double vr = (d_[i] - p) * (d_[i] - p) + e_[i] * e_[i] - q * q;
                            const double vi = (d_[i] - p) * 2.0 * q;
                            if (vr == 0.0 && vi == 0.0)
                                vr = eps * norm *
                                     (std::abs(w) + std::abs(q) + std::abs(x) + std::abs(y) +
                                      std::abs(z));
                            const CDiv c =
                                cdiv(x * r - z * ra + q * sa, x * s - z * sa - q * ra, vr, vi);
                            h_(i, n - 1) = c.r;
                            h_(i, n) = c.i;
                            if (std::abs(x) > (std::abs(z) + std::abs(q))) {
                                h_(i + 1, n - 1) = (-ra - w * h_(i, n - 1) + q * h_(i, n)) / x;
                                h_(i + 1, n) = (-sa - w * h_(i, n) - q * h_(i, n - 1)) / x;
                            } else {
                                const CDiv c2 =
                                    cdiv(-r - y * h_(i, n - 1), -s - y * h_(i, n), z, q);
                                h_(i + 1, n - 1) = c2.r;
                                h_(i + 1, n) = c2.i;
                            }
                        }
                        // overflow control
                        t = std::max(std::abs(h_(i, n - 1)), std::abs(h_(i, n)));
                        if ((eps * t) * t > 1)
                            for (int j = i; j <= n; ++j) {
                                h_(j, n - 1) /= t;
                                h_(j, n) /= t;
                            }
                    }
                }
            }
        }

        // back transformation to the original basis
        for (int j = nn - 1; j >= low; --j) {
            for (int i = low; i <= high; ++i) {
                z = 0.0;
                for (int k = low; k <= std::min(j, high); ++k) z += v_(i, k) * h_(k, j);
                v_(i, j) = z;
            }
        }
    }

    int n_;
    Mat h_;
    Mat v_;
    std::vector<double> d_, e_;
    std::vector<std::pair<int, std::vector<double>>> hess_reflectors_;
};

void unit_with_fixed_phase(CVec& x) {
    const double n = norm2(x);
    int imax = 0;
    double best = -1.0;
    for (size_t i = 0; i < x.size(); ++i)
        if (std::abs(x[i]) > best) {
            best = std::abs(x[i]);
            imax = static_cast<int>(i);
        }
    const cplx phase = x[imax] / std::abs(x[imax]);
    const cplx scale = 1.0 / (n * phase);
    for (cplx& v : x) v *= scale;
}

}  // namespace

SpectralTriplets eig_dense(const Mat& a) {
    const int n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("eig_dense: matrix must be square");
    if (n > 512) throw std::invalid_argument("eig_dense: desk-scale solver capped at n=512");

    SchurEigen right(a);
    SchurEigen left(a.transpose());

    struct Raw {
        cplx value;
        int index;
    };
    std::vector<Raw> rv(n), lv(n);
    for (int j = 0; j < n; ++j) {
        rv[j] = {right.value(j), j};
        lv[j] = {left.value(j), j};
    }

    SpectralTriplets out;
    out.triplets.resize(n);
    std::vector<char> used(n, 0);
    for (int j = 0; j < n; ++j) {
        EigenTriplet t;
        t.value = rv[j].value;
        t.right = right.eigenvector(j);
        unit_with_fixed_phase(t.right);

        // left eigenvector of A at lambda = right eigenvector of A^T at
        // conj(lambda); pair greedily by eigenvalue distance
        const cplx target = std::conj(t.value);
        int pick = -1;
        double bestd = std::numeric_limits<double>::max();
        for (int i = 0; i < n; ++i) {
            if (used[i]) continue;
            const double dist = std::abs(lv[i].value - target);
            if (dist < bestd) {
                bestd = dist;
                pick = i;
            }
        }
        used[pick] = 1;
        t.left = left.eigenvector(pick);
        unit_with_fixed_phase(t.left);
        out.triplets[j] = std::move(t);
    }

    std::sort(out.triplets.begin(), out.triplets.end(), [](const EigenTriplet& a, const EigenTriplet& b) {
        const double ma = std::abs(a.value), mb = std::abs(b.value);
        if (ma != mb) return ma < mb;
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    return out;
}

Vec left_null_eigvec(const Mat& laplacian) {
    const int n = laplacian.rows();
    SchurEigen schur(laplacian.transpose());

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return std::abs(schur.value(a)) < std::abs(schur.value(b)); });

    const double scale = std::max(laplacian.inf_norm(), 1e-300);
    const double second = std::abs(schur.value(order[1]));
    if (second < 1e-9 * scale) {
        std::ostringstream os;
        os << "zero eigenvalue not simple: two smallest |lambda| are "
           << std::abs(schur.value(order[0])) << " and " << second;
        throw MultiplicityError(os.str());
    }

    CVec raw = schur.eigenvector(order[0]);
    Vec w(n);
    for (int i = 0; i < n; ++i) w[i] = raw[i].real();
    normalize(w);
    double sum = 0.0;
    for (double v : w) sum += v;
    if (sum < 0.0)
        for (double& v : w) v = -v;
    return w;
}

}  // namespace gac
