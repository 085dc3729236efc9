#include "logdegen/linalg.hpp"

#include <algorithm>

namespace logdegen {

Int dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw validation_error("dot: size mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat qdot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw validation_error("qdot: size mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int content(const Vec& v) {
    Int g = 0;
    for (const auto& x : v) {
        Int a = abs(x);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    }
    return g;
}

Vec primitivize(const Vec& v) {
    Int g = content(v);
    if (g == 0 || g == 1) return v;
    Vec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

Vec negate(const Vec& v) {
    Vec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

Vec unit_vector(int rank, int i) {
    Vec v(rank, 0);
    v[i] = 1;
    return v;
}

Vec zero_vector(int rank) { return Vec(rank, 0); }

bool lex_less(const Vec& a, const Vec& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

void sort_rows_lex(Mat& rows) { std::sort(rows.begin(), rows.end(), lex_less); }

Int lcm_of(const std::vector<Int>& xs) {
    Int l = 1;
    for (const auto& x : xs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_mpz_t());
    return l;
}

Int gcd_of(const std::vector<Int>& xs) {
    Int g = 0;
    for (const auto& x : xs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

QMat to_qmat(const Mat& m) {
    QMat out;
    out.reserve(m.size());
    for (const auto& row : m) out.push_back(to_qvec(row));
    return out;
}

QVec to_qvec(const Vec& v) {
    QVec out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

namespace {

// Gaussian elimination, returns pivot columns; m is modified in place.
std::vector<int> echelonize(QMat& m) {
    std::vector<int> pivots;
    size_t row = 0;
    size_t cols = m.empty() ? 0 : m[0].size();
    for (size_t col = 0; col < cols && row < m.size(); ++col) {
        size_t p = row;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[row], m[p]);
        Rat inv = 1 / m[row][col];
        for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

}  // namespace

int rank_of(const Mat& rows) {
    QMat m = to_qmat(rows);
    return static_cast<int>(echelonize(m).size());
}

QMat qmat_inverse(const QMat& m) {
    size_t n = m.size();
    QMat aug(n, QVec(2 * n, 0));
    for (size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw validation_error("qmat_inverse: not square");
        for (size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    auto pivots = echelonize(aug);
    if (pivots.size() != n || (n > 0 && pivots.back() != static_cast<int>(n) - 1))
        throw validation_error("qmat_inverse: singular matrix");
    QMat inv(n, QVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

QVec qmat_apply(const QMat& m, const QVec& v) {
    QVec out(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i) out[i] = qdot(m[i], v);
    return out;
}

QVec solve_in_row_span(const Mat& rows, const Vec& b) {
    // Solve sum_i x_i rows[i] = b.
    size_t k = rows.size();
    size_t n = b.size();
    QMat aug(n, QVec(k + 1, 0));
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < k; ++i) aug[j][i] = Rat(rows[i][j]);
        aug[j][k] = Rat(b[j]);
    }
    auto pivots = echelonize(aug);
    QVec x(k, 0);
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == static_cast<int>(k))
            throw validation_error("solve_in_row_span: inconsistent system");
        x[pivots[r]] = aug[r][k];
    }
    // verify (rows need not be independent; any solution is checked)
    for (size_t j = 0; j < n; ++j) {
        Rat s = 0;
        for (size_t i = 0; i < k; ++i) s += x[i] * Rat(rows[i][j]);
        if (s != Rat(b[j])) throw validation_error("solve_in_row_span: inconsistent system");
    }
    return x;
}

std::string rat_to_string(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw validation_error("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

}  // namespace logdegen
