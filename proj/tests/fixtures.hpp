#pragma once

#include "logdegen/io.hpp"

namespace logdegen::testing {

/// Two interval-like components glued over a point-like D: one class
/// generator per side, unit pushforward into Z^2, contact degree 1,
/// size 1. The smallest target with a nontrivial bipartite enumeration.
inline TargetModel make_t2() {
    TargetModel t;
    t.ambient_rank = 2;
    for (int s = 0; s < 2; ++s) {
        TargetComponent& c = t.component[s];
        c.generator_names = {s == 0 ? "a1" : "a2"};
        c.pushforward_columns = {unit_vector(2, s)};
        c.d_degree = {1};
        c.size = {1};
        c.cohomology.names = {"one"};
        c.cohomology.degrees = {0};
        c.restriction = {{1}};
    }
    t.x_cohomology.names = {"one"};
    t.x_cohomology.degrees = {0};
    t.d_cohomology.names = {"pt"};
    t.d_cohomology.degrees = {0};
    t.d_cohomology.pairing = {{1}};
    t.validate();
    return t;
}

/// Same shape as make_t2 but D carries two odd-degree classes with an
/// antisymmetric pairing, so diagonal expansion and Koszul signs are
/// nontrivial.
inline TargetModel make_t2_odd_d() {
    TargetModel t = make_t2();
    t.d_cohomology.names = {"e1", "e2"};
    t.d_cohomology.degrees = {1, 1};
    t.d_cohomology.pairing = {{0, 1}, {-1, 0}};
    t.validate();
    return t;
}

/// Target whose graphs are all single-vertex: each side has one contact
/// generator (never usable, the ambient class keeps it at zero) and one
/// fiber-like generator with contact degree 0.
inline TargetModel make_fiber_target() {
    TargetModel t;
    t.ambient_rank = 2;
    for (int s = 0; s < 2; ++s) {
        TargetComponent& c = t.component[s];
        c.generator_names = {"a", "f"};
        c.pushforward_columns = {unit_vector(2, 0), unit_vector(2, 1)};
        c.d_degree = {1, 0};
        c.size = {1, 1};
        c.cohomology.names = {"one"};
        c.cohomology.degrees = {0};
        c.restriction = {{1}};
    }
    t.x_cohomology.names = {"one"};
    t.x_cohomology.degrees = {0};
    t.d_cohomology.names = {"pt"};
    t.d_cohomology.degrees = {0};
    t.d_cohomology.pairing = {{1}};
    t.validate();
    return t;
}

/// rigid1 --(w=1)--> rigid2, the one-edge curve graph.
inline CurveGraph make_e1() {
    CurveGraph cg;
    cg.vertices = {{VertexType::rigid1, 0, {}, {1}}, {VertexType::rigid2, 0, {}, {1}}};
    cg.edges = {{0, 1, false, 1}};
    validate_curve_graph(cg);
    return cg;
}

/// E1 plus a contracted edge at the rigid1 vertex (to a second rigid1
/// vertex with zero class).
inline CurveGraph make_e2() {
    CurveGraph cg = make_e1();
    cg.vertices.push_back({VertexType::rigid1, 1, {}, {0}});
    cg.edges.push_back({0, 2, true, 1});
    validate_curve_graph(cg);
    return cg;
}

/// rigid1 and rigid2 joined by two edges of weights 2 and 3.
inline CurveGraph make_e3() {
    CurveGraph cg;
    cg.vertices = {{VertexType::rigid1, 0, {}, {5}}, {VertexType::rigid2, 0, {}, {5}}};
    cg.edges = {{0, 1, false, 2}, {0, 1, false, 3}};
    validate_curve_graph(cg);
    return cg;
}

inline CurveHalf single_vertex_half(int side, std::vector<std::pair<Int, int>> weight_labels) {
    CurveHalf h;
    h.side = side;
    Int total = 0;
    for (const auto& [w, label] : weight_labels) total += w;
    h.vertices = {{side == 1 ? VertexType::rigid1 : VertexType::rigid2, 0, {}, {total}}};
    for (const auto& [w, label] : weight_labels) h.half_edges.push_back({0, w, label});
    validate_curve_half(h);
    return h;
}

}  // namespace logdegen::testing
