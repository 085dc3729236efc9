#include "logdegen/curve_graph.hpp"

namespace logdegen {

Int signed_weight_sum(const CurveGraph& g, int v) {
    Int s = 0;
    for (const auto& e : g.edges) {
        if (e.contracted) continue;
        if (e.tail == v) s += e.w;
        if (e.head == v) s -= e.w;
    }
    return s;
}

Int tau_of(const CurveGraph& g, int v) {
    if (g.vertices[v].type == VertexType::free_vertex) return 0;
    return -signed_weight_sum(g, v);
}

void validate_curve_graph(const CurveGraph& g) {
    int nv = static_cast<int>(g.vertices.size());
    if (nv == 0) throw validation_error("curve graph: no vertices");
    for (const auto& e : g.edges) {
        if (e.tail < 0 || e.head < 0 || e.tail >= nv || e.head >= nv)
            throw validation_error("curve graph: edge endpoint out of range");
        if (!e.contracted && e.w < 1)
            throw validation_error("curve graph: nonpositive edge weight");
        if (!e.contracted) {
            if (g.vertices[e.head].type == VertexType::rigid1 ||
                g.vertices[e.tail].type == VertexType::rigid2)
                throw validation_error(
                    "curve graph: weighted edge oriented into a rigid endpoint");
        }
    }
    for (int v = 0; v < nv; ++v)
        if (g.vertices[v].type == VertexType::free_vertex && signed_weight_sum(g, v) != 0)
            throw validation_error("curve graph: balancing violated at a free vertex");
}

void validate_curve_half(const CurveHalf& h) {
    int nv = static_cast<int>(h.vertices.size());
    if (nv == 0) throw validation_error("curve half: no vertices");
    VertexType own = h.side == 1 ? VertexType::rigid1 : VertexType::rigid2;
    VertexType other = h.side == 1 ? VertexType::rigid2 : VertexType::rigid1;
    for (const auto& v : h.vertices)
        if (v.type == other) throw validation_error("curve half: rigid vertex of the wrong side");
    for (const auto& e : h.edges) {
        if (e.tail < 0 || e.head < 0 || e.tail >= nv || e.head >= nv)
            throw validation_error("curve half: edge endpoint out of range");
        if (!e.contracted) {
            if (e.w < 1) throw validation_error("curve half: nonpositive edge weight");
            // local coordinates go away from 0 where rigid vertices sit
            if (h.vertices[e.head].type == own)
                throw validation_error("curve half: weighted edge oriented into a rigid vertex");
        }
    }
    for (const auto& he : h.half_edges) {
        if (he.vertex < 0 || he.vertex >= nv)
            throw validation_error("curve half: half-edge vertex out of range");
        if (he.w < 1) throw validation_error("curve half: nonpositive half-edge weight");
    }
    for (int v = 0; v < nv; ++v) {
        if (h.vertices[v].type != VertexType::free_vertex) continue;
        Int s = 0;
        for (const auto& e : h.edges) {
            if (e.contracted) continue;
            if (e.tail == v) s += e.w;
            if (e.head == v) s -= e.w;
        }
        for (const auto& he : h.half_edges)
            if (he.vertex == v) s += he.w;  // half-edges leave toward the divisor
        if (s != 0) throw validation_error("curve half: balancing violated at a free vertex");
    }
}

CurveHalf half_to_curve(const HalfGraph& h) {
    CurveHalf out;
    out.side = h.side;
    VertexType t = h.side == 1 ? VertexType::rigid1 : VertexType::rigid2;
    for (const auto& v : h.vertices) out.vertices.push_back({t, v.g, v.markings, v.beta});
    out.half_edges = h.half_edges;
    return out;
}

}  // namespace logdegen
