#include "gac/matrix.hpp"

#include <cmath>

namespace gac {

Mat& Mat::operator+=(const Mat& o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

Mat& Mat::operator*=(double s) {
    for (double& v : a_) v *= s;
    return *this;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

double Mat::inf_norm() const {
    double best = 0.0;
    for (int i = 0; i < rows_; ++i) {
        double s = 0.0;
        for (int j = 0; j < cols_; ++j) s += std::abs((*this)(i, j));
        best = std::max(best, s);
    }
    return best;
}

double Mat::frobenius_norm() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
}

double Mat::max_abs() const {
    double best = 0.0;
    for (double v : a_) best = std::max(best, std::abs(v));
    return best;
}

Mat operator+(Mat a, const Mat& b) { return a += b; }
Mat operator-(Mat a, const Mat& b) { return a -= b; }
Mat operator*(Mat a, double s) { return a *= s; }

Mat operator*(const Mat& a, const Mat& b) {
    assert(a.cols() == b.rows());
    Mat c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Vec operator*(const Mat& a, const Vec& x) {
    assert(a.cols() == static_cast<int>(x.size()));
    Vec y(a.rows(), 0.0);
    for (int i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (int j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

Mat outer(const Vec& v, const Vec& w) {
    Mat m(static_cast<int>(v.size()), static_cast<int>(w.size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = v[i] * w[j];
    return m;
}

double dot(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

void normalize(Vec& a) {
    const double n = norm2(a);
    assert(n > 0.0);
    for (double& v : a) v /= n;
}

CMat::CMat(const Mat& m) : CMat(m.rows(), m.cols()) {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) (*this)(i, j) = m(i, j);
}

CMat CMat::adjoint() const {
    CMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
    return t;
}

double CMat::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

CMat operator+(CMat a, const CMat& b) {
    assert(a.rows() == b.rows() && a.cols() == b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) a(i, j) += b(i, j);
    return a;
}

CMat operator-(CMat a, const CMat& b) {
    assert(a.rows() == b.rows() && a.cols() == b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) a(i, j) -= b(i, j);
    return a;
}

CMat operator*(const CMat& a, const CMat& b) {
    assert(a.cols() == b.rows());
    CMat c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

CVec operator*(const CMat& a, const CVec& x) {
    assert(a.cols() == static_cast<int>(x.size()));
    CVec y(a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        cplx s = 0.0;
        for (int j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

cplx cdot(const CVec& a, const CVec& b) {
    assert(a.size() == b.size());
    cplx s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += std::conj(b[i]) * a[i];
    return s;
}

double norm2(const CVec& a) {
    double s = 0.0;
    for (const cplx& v : a) s += std::norm(v);
    return std::sqrt(s);
}

}  // namespace gac
