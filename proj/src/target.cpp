#include "logdegen/target.hpp"

namespace logdegen {

const TargetComponent& TargetModel::side(int r) const {
    if (r != 1 && r != 2) throw validation_error("component index must be 1 or 2");
    return component[r - 1];
}

Vec TargetModel::push(int r, const Vec& beta_v) const {
    const TargetComponent& c = side(r);
    if (beta_v.size() != c.pushforward_columns.size())
        throw validation_error("class has wrong rank for component");
    Vec out(ambient_rank, 0);
    for (size_t j = 0; j < beta_v.size(); ++j)
        for (int i = 0; i < ambient_rank; ++i) out[i] += beta_v[j] * c.pushforward_columns[j][i];
    return out;
}

Int TargetModel::d_deg(int r, const Vec& beta_v) const { return dot(side(r).d_degree, beta_v); }

Int TargetModel::size_of(int r, const Vec& beta_v) const { return dot(side(r).size, beta_v); }

void TargetModel::validate() const {
    if (ambient_rank < 0) throw validation_error("target: negative ambient rank");
    for (int s = 0; s < 2; ++s) {
        const TargetComponent& c = component[s];
        size_t k = c.generator_names.size();
        if (c.pushforward_columns.size() != k || c.d_degree.size() != k || c.size.size() != k)
            throw validation_error("target: component field sizes disagree");
        for (const auto& col : c.pushforward_columns)
            if (static_cast<int>(col.size()) != ambient_rank)
                throw validation_error("target: pushforward column has wrong rank");
        for (const auto& d : c.d_degree)
            if (d < 0) throw validation_error("target: d_degree must be nonnegative");
        for (const auto& x : c.size)
            if (x < 1) throw validation_error("target: size functional must be >= 1 on generators");
        c.cohomology.validate();
        if (c.restriction.size() != c.cohomology.size())
            throw validation_error("target: restriction matrix row count mismatch");
        for (size_t i = 0; i < c.restriction.size(); ++i) {
            if (c.restriction[i].size() != x_cohomology.size())
                throw validation_error("target: restriction matrix column count mismatch");
            for (size_t j = 0; j < c.restriction[i].size(); ++j)
                if (c.restriction[i][j] != 0 &&
                    c.cohomology.degrees[i] != x_cohomology.degrees[j])
                    throw validation_error("target: restriction does not preserve degree");
        }
    }
    x_cohomology.validate();
    d_cohomology.validate();
    if (!d_cohomology.has_pairing()) throw validation_error("target: D cohomology needs a pairing");
}

GradedClass restrict(const TargetModel& t, int r, const GradedClass& c) {
    const TargetComponent& comp = t.side(r);
    if (c.coeffs.size() != t.x_cohomology.size())
        throw validation_error("restrict: class not over H*(X)");
    return GradedClass{qmat_apply(comp.restriction, c.coeffs)};
}

}  // namespace logdegen
