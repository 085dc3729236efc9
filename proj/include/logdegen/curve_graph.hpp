#pragma once

#include "logdegen/graph.hpp"

namespace logdegen {

/// Dual intersection graph of a curve in the degenerate target. Rigid
/// vertices are components pinned to the end of the interval for their
/// side; free vertices map to the divisor and can move.
enum class VertexType { rigid1, rigid2, free_vertex };

struct CurveVertex {
    VertexType type = VertexType::free_vertex;
    int g = 0;
    std::vector<int> markings;
    Vec cls;  // class in N^{k_side} for rigid vertices; empty for free

    bool operator==(const CurveVertex&) const = default;
};

/// Edge of the curve graph. A weighted edge scales by w along the interval
/// with the tail at the lower position; a contracted edge carries no
/// direction (its dual length is a free parameter).
struct CurveEdge {
    int tail = 0;
    int head = 0;
    bool contracted = false;
    Int w = 1;

    bool operator==(const CurveEdge&) const = default;
};

struct CurveGraph {
    std::vector<CurveVertex> vertices;
    std::vector<CurveEdge> edges;

    bool operator==(const CurveGraph&) const = default;
};

/// One side of a curve graph cut at its splitting nodes, in local
/// coordinates [0, infinity) with rigid vertices at 0 (side 2 is stored
/// reflected). Cut nodes become labelled half-edges.
struct CurveHalf {
    int side = 1;
    std::vector<CurveVertex> vertices;
    std::vector<CurveEdge> edges;       // compact edges, local orientation
    std::vector<HalfEdge> half_edges;   // rays, in label order

    bool operator==(const CurveHalf&) const = default;
};

/// Signed weight sum at a vertex (+w when tail, -w when head) over
/// weighted edges; tau is its negative for rigid vertices, 0 for free.
Int signed_weight_sum(const CurveGraph& g, int v);
Int tau_of(const CurveGraph& g, int v);

/// Checks: endpoint ranges, positive weights, balancing at free vertices,
/// rigid1 vertices only tails / rigid2 only heads of weighted edges.
void validate_curve_graph(const CurveGraph& g);

/// Same checks on a half in local coordinates: rigid vertices match the
/// side, balancing at free vertices counts half-edges as outgoing.
void validate_curve_half(const CurveHalf& h);

/// A bipartite-graph half becomes a curve-graph half with every vertex
/// rigid and no compact edges.
CurveHalf half_to_curve(const HalfGraph& h);

}  // namespace logdegen
