#pragma once

#include <optional>
#include <string>

#include "logdegen/linalg.hpp"

namespace logdegen {

/// Ordered homogeneous basis of a graded vector space, with an optional
/// intersection pairing (entry (i,j) = integral of b_i b_j).
struct GradedBasis {
    std::vector<std::string> names;
    std::vector<int> degrees;
    QMat pairing;  // empty when no pairing is needed

    size_t size() const { return names.size(); }
    bool has_pairing() const { return !pairing.empty(); }

    /// Largest degree sum carrying a nonzero pairing entry.
    int top_degree() const;

    /// Checks sizes, nonnegative degrees; with a pairing also gradedness
    /// (entries vanish off the top degree sum) and invertibility.
    void validate() const;
};

/// Element of the space spanned by a GradedBasis, as a coefficient vector.
struct GradedClass {
    QVec coeffs;

    bool operator==(const GradedClass&) const = default;
};

GradedClass basis_class(const GradedBasis& b, size_t index);
GradedClass zero_class(const GradedBasis& b);

/// Degree if the support is concentrated in one degree (0 for the zero
/// class); nullopt for mixed classes.
std::optional<int> homogeneous_degree(const GradedBasis& b, const GradedClass& c);

/// Classes d_j with pairing(d_i, b_j) = [i == j]. Requires the pairing.
std::vector<GradedClass> dual_basis(const GradedBasis& b);

/// Summands of the diagonal class of one factor: pairs (b_j, dual_j).
/// The evaluator picks one index j_e per edge.
std::vector<std::pair<GradedClass, GradedClass>> diagonal_summands(const GradedBasis& b);

/// Homogeneous symbol in a graded word; id ties occurrences together.
struct GradedSymbol {
    long id = 0;
    int degree = 0;

    bool operator==(const GradedSymbol&) const = default;
};

/// Sign (-1)^{number of transposed odd-odd pairs} of the permutation
/// carrying `from` to `to`. Throws if the words are not related by a
/// permutation of symbols.
int koszul_sign(const std::vector<GradedSymbol>& from, const std::vector<GradedSymbol>& to);

}  // namespace logdegen
