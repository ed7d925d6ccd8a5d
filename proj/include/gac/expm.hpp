#pragma once

#include "gac/matrix.hpp"

namespace gac {

/// Matrix exponential by scaling and squaring around a truncated Taylor
/// core. The series is extended until the remainder bound
/// ||B||^(j+1)/(j+1)! * e^||B|| for the scaled matrix B drops below the
/// share of `tol` left after squaring amplification. Throws ExpTolError
/// if the hard term cap is reached first.
Mat matrix_exp(const Mat& a, double tol = 1e-13);

}  // namespace gac
