#include "logdegen/graded.hpp"

#include <algorithm>
#include <map>

namespace logdegen {

int GradedBasis::top_degree() const {
    int top = -1;
    for (size_t i = 0; i < pairing.size(); ++i)
        for (size_t j = 0; j < pairing[i].size(); ++j)
            if (pairing[i][j] != 0) top = std::max(top, degrees[i] + degrees[j]);
    return top;
}

void GradedBasis::validate() const {
    if (names.size() != degrees.size()) throw validation_error("graded basis: size mismatch");
    for (int d : degrees)
        if (d < 0) throw validation_error("graded basis: negative degree");
    if (!has_pairing()) return;
    size_t n = size();
    if (pairing.size() != n) throw validation_error("graded basis: pairing size mismatch");
    for (const auto& row : pairing)
        if (row.size() != n) throw validation_error("graded basis: pairing not square");
    int top = top_degree();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (pairing[i][j] != 0 && degrees[i] + degrees[j] != top)
                throw validation_error("graded basis: pairing not graded");
    qmat_inverse(pairing);  // throws when singular
}

GradedClass basis_class(const GradedBasis& b, size_t index) {
    GradedClass c{QVec(b.size(), 0)};
    c.coeffs[index] = 1;
    return c;
}

GradedClass zero_class(const GradedBasis& b) { return GradedClass{QVec(b.size(), 0)}; }

std::optional<int> homogeneous_degree(const GradedBasis& b, const GradedClass& c) {
    if (c.coeffs.size() != b.size()) throw validation_error("class over wrong basis");
    int deg = -1;
    for (size_t i = 0; i < c.coeffs.size(); ++i) {
        if (c.coeffs[i] == 0) continue;
        if (deg == -1)
            deg = b.degrees[i];
        else if (deg != b.degrees[i])
            return std::nullopt;
    }
    return deg == -1 ? 0 : deg;
}

std::vector<GradedClass> dual_basis(const GradedBasis& b) {
    if (!b.has_pairing()) throw validation_error("dual_basis: basis has no pairing");
    // d_i = sum_k C[i][k] b_k with sum_k C[i][k] pairing[k][j] = [i == j],
    // i.e. C = pairing^{-1}.
    QMat c = qmat_inverse(b.pairing);
    std::vector<GradedClass> out;
    out.reserve(b.size());
    for (size_t i = 0; i < b.size(); ++i) out.push_back(GradedClass{c[i]});
    return out;
}

std::vector<std::pair<GradedClass, GradedClass>> diagonal_summands(const GradedBasis& b) {
    std::vector<GradedClass> duals = dual_basis(b);
    std::vector<std::pair<GradedClass, GradedClass>> out;
    out.reserve(b.size());
    for (size_t j = 0; j < b.size(); ++j) out.emplace_back(basis_class(b, j), duals[j]);
    return out;
}

int koszul_sign(const std::vector<GradedSymbol>& from, const std::vector<GradedSymbol>& to) {
    if (from.size() != to.size()) throw validation_error("koszul_sign: words differ in length");
    size_t n = from.size();
    // match occurrences of equal ids left to right
    std::map<long, std::vector<size_t>> positions;
    for (size_t i = 0; i < n; ++i) positions[from[i].id].push_back(i);
    std::map<long, size_t> used;
    std::vector<size_t> perm(n);  // perm[k] = index in `from` of to[k]
    for (size_t k = 0; k < n; ++k) {
        auto it = positions.find(to[k].id);
        size_t& u = used[to[k].id];
        if (it == positions.end() || u >= it->second.size())
            throw validation_error("koszul_sign: words are not permutations of each other");
        perm[k] = it->second[u++];
        if (from[perm[k]].degree != to[k].degree)
            throw validation_error("koszul_sign: symbol degree mismatch");
    }
    long inversions = 0;
    for (size_t k = 0; k < n; ++k)
        for (size_t l = k + 1; l < n; ++l)
            if (perm[k] > perm[l] && to[k].degree % 2 != 0 && to[l].degree % 2 != 0) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace logdegen
