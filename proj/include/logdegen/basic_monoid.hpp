#pragma once

#include "logdegen/cone.hpp"
#include "logdegen/curve_graph.hpp"

namespace logdegen {

/// Dual of the basic monoid of a curve graph: the parameter cone of
/// tropical curves, in coordinates (x_V per vertex, l_e per edge, l).
struct BasicMonoidDual {
    Cone cone;
    int nv = 0;
    int ne = 0;
    std::vector<int> contracted;  // edge indices with u_e = 0
    Vec one_functional;           // reads l

    int rank() const { return nv + ne + 1; }
    Vec q_functional(int e) const { return unit_vector(rank(), nv + e); }
    static Int position(const Vec& p, int v) { return p[v]; }
    Int length(const Vec& p, int e) const { return p[nv + e]; }
    Int level(const Vec& p) const { return p[nv + ne]; }
};

BasicMonoidDual basic_dual_cone(const CurveGraph& cg);

/// Splits off the contracted-edge length coordinates (a free N-power) and
/// returns the reduced dual together with the number of summands removed.
/// Contracted edges keep their vertex identification x_head = x_tail in
/// the reduced dual; only their free length coordinates disappear, so the
/// full cone is the product of the reduced cone with N^removed.
std::pair<BasicMonoidDual, int> decompose_q0(const CurveGraph& cg);

struct SplittingRay {
    Vec ray;                          // primitive generator, full coordinates
    Int l;                            // ray(one_functional)
    Vec positions;                    // x_V values
    std::vector<Int> lengths;         // l_e values
    std::vector<int> splitting_nodes; // edges with l_e != 0
};

/// Rays of the basic dual cone with positive value on the level functional.
std::vector<SplittingRay> splitting_rays(const BasicMonoidDual& b);

struct TropicalCurveInstance {
    Vec positions;
    std::vector<Int> lengths;
    Int l;
};

/// The integral tropical curve given by a ray of the basic dual cone.
TropicalCurveInstance tropicalize(const BasicMonoidDual& b, const Vec& ray);

/// Collapse the curve graph along a splitting ray: edges of length zero
/// are contracted, surviving vertices take their side from the position
/// (0 -> 1, l -> 2), decorations aggregate (genus picks up the first Betti
/// number of each collapsed piece). Validates the result as a decorated
/// bipartite graph of the type computed from the curve graph itself.
DecoratedGraph trop_collapse(const TargetModel& t, const CurveGraph& cg, const SplittingRay& rho);

}  // namespace logdegen
