#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace logdegen {

using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Int>;
using QVec = std::vector<Rat>;
using Mat = std::vector<Vec>;
using QMat = std::vector<QVec>;

struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct search_cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Int dot(const Vec& a, const Vec& b);
Rat qdot(const QVec& a, const QVec& b);

/// gcd of absolute values of the entries; 0 for the zero vector.
Int content(const Vec& v);

/// Divides out the content. Zero vector stays zero.
Vec primitivize(const Vec& v);

Vec negate(const Vec& v);
Vec unit_vector(int rank, int i);
Vec zero_vector(int rank);

bool lex_less(const Vec& a, const Vec& b);
void sort_rows_lex(Mat& rows);

Int lcm_of(const std::vector<Int>& xs);  // 1 for the empty list
Int gcd_of(const std::vector<Int>& xs);  // 0 for the empty list
Int factorial(int n);

QMat to_qmat(const Mat& m);
QVec to_qvec(const Vec& v);

/// Rank over the rationals.
int rank_of(const Mat& rows);

/// Inverse of a square rational matrix; throws validation_error if singular.
QMat qmat_inverse(const QMat& m);

QVec qmat_apply(const QMat& m, const QVec& v);

/// Solves A^T x = b for x given column vectors packed as rows of A
/// (i.e. finds rational coefficients expressing b in terms of the rows of A).
/// Throws validation_error if inconsistent; requires rows of A independent.
QVec solve_in_row_span(const Mat& rows, const Vec& b);

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

}  // namespace logdegen
