#include "logdegen/normal_form.hpp"

#include <algorithm>

namespace logdegen {

Mat hnf(Mat rows) {
    size_t n = rows.empty() ? 0 : rows[0].size();
    size_t r = 0;
    for (size_t col = 0; col < n && r < rows.size(); ++col) {
        // clear the column below row r with euclidean row ops
        while (true) {
            size_t best = rows.size();
            for (size_t i = r; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
            }
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            bool clean = true;
            for (size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                Int q = rows[i][col] / rows[r][col];  // truncated division
                for (size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[r][col] == 0) continue;
        if (rows[r][col] < 0)
            for (size_t j = 0; j < n; ++j) rows[r][j] = -rows[r][j];
        // reduce entries above the pivot into [0, pivot)
        for (size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
            if (q != 0)
                for (size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

namespace {

struct SnfWork {
    Mat m;  // k x n working matrix
    Mat w;  // n x n, maintains original = U * m * w
    size_t k, n;

    void col_swap(size_t i, size_t j) {
        for (auto& row : m) std::swap(row[i], row[j]);
        std::swap(w[i], w[j]);
    }
    void col_negate(size_t i) {
        for (auto& row : m) row[i] = -row[i];
        for (auto& x : w[i]) x = -x;
    }
    // col_i += q * col_j
    void col_add(size_t i, size_t j, const Int& q) {
        for (auto& row : m) row[i] += q * row[j];
        for (size_t c = 0; c < n; ++c) w[j][c] -= q * w[i][c];
    }
    void row_swap(size_t i, size_t j) { std::swap(m[i], m[j]); }
    void row_add(size_t i, size_t j, const Int& q) {  // row_i += q * row_j
        for (size_t c = 0; c < n; ++c) m[i][c] += q * m[j][c];
    }
    void row_negate(size_t i) {
        for (auto& x : m[i]) x = -x;
    }
};

}  // namespace

SmithResult smith_normal_form(Mat a) {
    size_t k = a.size();
    size_t n = k == 0 ? 0 : a[0].size();
    SnfWork s;
    s.m = std::move(a);
    s.k = k;
    s.n = n;
    s.w.assign(n, Vec(n, 0));
    for (size_t i = 0; i < n; ++i) s.w[i][i] = 1;

    size_t t = 0;
    while (t < k && t < n) {
        // find a pivot of minimal absolute value in the submatrix
        size_t pi = k, pj = n;
        for (size_t i = t; i < k; ++i)
            for (size_t j = t; j < n; ++j)
                if (s.m[i][j] != 0 && (pi == k || abs(s.m[i][j]) < abs(s.m[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == k) break;
        s.row_swap(t, pi);
        s.col_swap(t, pj);
        if (s.m[t][t] < 0) s.row_negate(t);
        bool dirty = false;
        for (size_t i = t + 1; i < k; ++i) {
            if (s.m[i][t] == 0) continue;
            Int q = s.m[i][t] / s.m[t][t];
            s.row_add(i, t, -q);
            if (s.m[i][t] != 0) dirty = true;
        }
        for (size_t j = t + 1; j < n; ++j) {
            if (s.m[t][j] == 0) continue;
            Int q = s.m[t][j] / s.m[t][t];
            s.col_add(j, t, -q);
            if (s.m[t][j] != 0) dirty = true;
        }
        if (dirty) continue;  // pivot not yet the gcd of its row/column
        ++t;
    }
    // enforce the divisibility chain d_t | d_{t+1}
    for (bool changed = true; changed;) {
        changed = false;
        size_t r = t;
        for (size_t i = 0; i + 1 < r; ++i) {
            if (s.m[i][i] == 0 || s.m[i + 1][i + 1] % s.m[i][i] == 0) continue;
            s.col_add(i, i + 1, 1);  // creates fill at (i+1, i)
            // re-diagonalize the 2x2 block with euclidean steps
            while (s.m[i + 1][i] != 0 || s.m[i][i + 1] != 0) {
                if (s.m[i + 1][i] != 0) {
                    Int q = s.m[i + 1][i] / s.m[i][i];
                    s.row_add(i + 1, i, -q);
                    if (s.m[i + 1][i] != 0) {
                        s.row_swap(i, i + 1);
                        s.col_swap(i, i + 1);
                        continue;
                    }
                }
                if (s.m[i][i + 1] != 0) {
                    Int q = s.m[i][i + 1] / s.m[i][i];
                    s.col_add(i + 1, i, -q);
                    if (s.m[i][i + 1] != 0) {
                        s.col_swap(i, i + 1);
                        continue;
                    }
                }
            }
            if (s.m[i][i] < 0) s.row_negate(i);
            if (s.m[i + 1][i + 1] < 0) s.row_negate(i + 1);
            changed = true;
        }
    }
    SmithResult out;
    out.diag = std::move(s.m);
    out.v = std::move(s.w);
    out.rank = static_cast<int>(t);
    return out;
}

Mat saturate_rows(const Mat& rows, int ambient_rank) {
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != ambient_rank)
            throw validation_error("saturate_rows: row size mismatch");
    if (rows.empty()) return {};
    SmithResult snf = smith_normal_form(rows);
    Mat basis(snf.v.begin(), snf.v.begin() + snf.rank);
    return hnf(std::move(basis));
}

Mat integer_kernel(const Mat& rows, int ambient_rank) {
    // kernel of x |-> (rows_i . x): pick the rows of V beyond the rank whose
    // scaled images vanish. Equivalently: saturation of the orthogonal
    // complement, computed by a double application of SNF.
    if (rows.empty()) {
        Mat id(ambient_rank, Vec(ambient_rank, 0));
        for (int i = 0; i < ambient_rank; ++i) id[i][i] = 1;
        return id;
    }
    SmithResult snf = smith_normal_form(rows);
    // original = U * diag * V. x in kernel  iff  diag * (V x) = 0  iff the
    // first `rank` coordinates of V x vanish. A basis: the columns of V^{-1}
    // past the rank. Rather than invert, solve for the lattice directly:
    // kernel = { x : (V x)_i = 0, i < rank } = integer solutions of V' x = 0
    // with V' the first `rank` rows of V. Those rows are part of a Z-basis,
    // so gaussian elimination over Q plus clearing denominators stays exact;
    // we reuse saturate on the rational nullspace instead.
    Mat vr(snf.v.begin(), snf.v.begin() + snf.rank);
    // rational nullspace of vr
    QMat m = to_qmat(vr);
    size_t n = ambient_rank;
    // echelonize
    std::vector<int> pivots;
    {
        size_t row = 0;
        for (size_t col = 0; col < n && row < m.size(); ++col) {
            size_t p = row;
            while (p < m.size() && m[p][col] == 0) ++p;
            if (p == m.size()) continue;
            std::swap(m[row], m[p]);
            Rat inv = 1 / m[row][col];
            for (size_t j = col; j < n; ++j) m[row][j] *= inv;
            for (size_t i = 0; i < m.size(); ++i) {
                if (i == row || m[i][col] == 0) continue;
                Rat f = m[i][col];
                for (size_t j = col; j < n; ++j) m[i][j] -= f * m[row][j];
            }
            pivots.push_back(static_cast<int>(col));
            ++row;
        }
    }
    Mat null_basis;
    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[p] = true;
    for (size_t freecol = 0; freecol < n; ++freecol) {
        if (is_pivot[freecol]) continue;
        QVec x(n, 0);
        x[freecol] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][freecol];
        // clear denominators
        Int den = 1;
        for (const auto& q : x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
        Vec v(n);
        for (size_t j = 0; j < n; ++j) {
            Rat q = x[j] * Rat(den);
            v[j] = q.get_num();
        }
        null_basis.push_back(primitivize(v));
    }
    return saturate_rows(null_basis, ambient_rank);
}

}  // namespace logdegen
