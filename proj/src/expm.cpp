#include "gac/expm.hpp"

#include <cmath>
#include <string>

#include "gac/errors.hpp"

namespace gac {

Mat matrix_exp(const Mat& a, double tol) {
    const int n = a.rows();
    const double norm = a.inf_norm();

    // scale so the series argument has norm <= 1/2
    int squarings = 0;
    double scaled_norm = norm;
    while (scaled_norm > 0.5) {
        scaled_norm /= 2.0;
        ++squarings;
    }
    Mat b = a;
    b *= std::pow(0.5, squarings);

    // each squaring roughly doubles the relative error
    const double core_tol = tol / std::pow(2.0, squarings + 1);

    Mat result = Mat::identity(n);
    Mat term = Mat::identity(n);
    const double bnorm = b.inf_norm();
    double term_bound = 1.0;  // ||B||^j / j!
    constexpr int kTermCap = 200;
    int j = 0;
    while (true) {
        ++j;
        if (j > kTermCap)
            throw ExpTolError("matrix_exp: tolerance " + std::to_string(tol) +
                              " unreachable within " + std::to_string(kTermCap) + " terms");
        term = term * b;
        term *= 1.0 / j;
        result += term;
        term_bound *= bnorm / j;
        // Taylor remainder: sum_{i>j} ||B||^i/i! <= ||B||^(j+1)/(j+1)! e^||B||
        if (term_bound * bnorm / (j + 1) * std::exp(bnorm) < core_tol) break;
    }

    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

}  // namespace gac
