#pragma once

#include "logdegen/basic_monoid.hpp"

namespace logdegen {

struct SplitResult {
    CurveHalf half1, half2;
    Cone q1_dual, q2_dual;              // tropical parameter cones of the halves
    std::vector<Cone> summands1, summands2;  // per connected component
};

/// Parameter cone of tropical curves on one half, in local coordinates
/// (x_V >= 0 per vertex, lambda_e >= 0 per compact edge); rigid vertices
/// are pinned to 0, weighted edges impose x_head - x_tail = w lambda_e.
Cone half_dual_cone(const CurveHalf& h);

/// Cut a curve graph at the splitting nodes of a ray into its two halves
/// (side 2 reflected into local coordinates) and build their cones with
/// the per-component direct-sum decomposition.
SplitResult split_cones(const CurveGraph& cg, const SplittingRay& rho);

struct SplitFacetWitness {
    bool verified = false;
    Mat witness;  // unimodular matrix between the facet and the product
};

/// Checks that the facet of the basic monoid dual to the ray is the
/// product of the two halves' monoids, by exhibiting a lattice
/// isomorphism. Throws search_cap_error if the matching search is cut off.
SplitFacetWitness verify_split_facet(const CurveGraph& cg, const SplittingRay& rho);

struct GlueResult {
    CurveGraph glued;
    BasicMonoidDual monoid;
    Vec rho;  // distinguished ray: side 1 at 0, side 2 at l
    Int l;    // lcm of the gluing weights
};

/// Glue two halves along equal half-edge labels (weights must match);
/// returns the glued graph, its basic dual cone and the ray with
/// l = lcm(gluing weights), l_e = l / w_e on glued nodes.
GlueResult glue_halves(const CurveHalf& h1, const CurveHalf& h2);

/// prod(w_e) / lcm(w_e); 1 on the empty multiset.
Rat gluing_degree(const std::vector<Int>& weights);

}  // namespace logdegen
