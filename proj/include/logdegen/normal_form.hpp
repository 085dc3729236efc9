#pragma once

#include "logdegen/linalg.hpp"

namespace logdegen {

/// Row-style Hermite normal form: row span preserved, result in echelon form
/// with positive pivots and entries above each pivot reduced into [0, pivot).
/// Zero rows are dropped.
Mat hnf(Mat rows);

struct SmithResult {
    Mat diag;     // k x n, diagonal entries d_1 | d_2 | ...
    Mat v;        // n x n unimodular with input = U * diag * v for some unimodular U
    int rank = 0;
};

/// Smith normal form of an integer matrix (k x n). Only the right transform
/// is tracked; that is all the lattice computations here need.
SmithResult smith_normal_form(Mat a);

/// Basis of the saturation (Q-span intersected with Z^n) of the row span,
/// returned in Hermite normal form.
Mat saturate_rows(const Mat& rows, int ambient_rank);

/// Basis (rows) of the integer kernel {x : a_i . x = 0 for all rows a_i},
/// in Hermite normal form. Integer kernels are saturated by construction.
Mat integer_kernel(const Mat& rows, int ambient_rank);

}  // namespace logdegen
