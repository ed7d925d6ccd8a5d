#pragma once

#include <cassert>
#include <complex>
#include <vector>

namespace gac {

using cplx = std::complex<double>;
using Vec = std::vector<double>;
using CVec = std::vector<cplx>;

/// Dense row-major real matrix. Sized for desk-scale spectral work
/// (n <= 512); no sparse storage by design.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0.0) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    Mat& operator*=(double s);

    Mat transpose() const;

    /// max_i sum_j |a_ij|
    double inf_norm() const;
    double frobenius_norm() const;
    double max_abs() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator*(Mat a, double s);
Mat operator*(const Mat& a, const Mat& b);
Vec operator*(const Mat& a, const Vec& x);

/// v * w^T
Mat outer(const Vec& v, const Vec& w);

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& a);
void normalize(Vec& a);

/// Dense complex matrix; used by the projection utilities and tests.
class CMat {
public:
    CMat() = default;
    CMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    explicit CMat(const Mat& m);

    static CMat identity(int n) {
        CMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    CMat adjoint() const;
    double frobenius_norm() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<cplx> a_;
};

CMat operator+(CMat a, const CMat& b);
CMat operator-(CMat a, const CMat& b);
CMat operator*(const CMat& a, const CMat& b);
CVec operator*(const CMat& a, const CVec& x);

/// <a,b> = b^H a  (linear in the first argument)
cplx cdot(const CVec& a, const CVec& b);
double norm2(const CVec& a);

}  // namespace gac
