#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logdegen/io.hpp"
#include "logdegen/verify.hpp"

#include "fixtures.hpp"

using namespace logdegen;
using logdegen::testing::make_e1;
using logdegen::testing::make_e2;
using logdegen::testing::make_e3;
using logdegen::testing::make_t2;
using logdegen::testing::single_vertex_half;

TEST_CASE("curve graph validation") {
    CHECK_NOTHROW(validate_curve_graph(make_e1()));
    CHECK_NOTHROW(validate_curve_graph(make_e2()));
    CHECK_NOTHROW(validate_curve_graph(make_e3()));

    // unbalanced free vertex
    CurveGraph bad;
    bad.vertices = {{VertexType::rigid1, 0, {}, {1}},
                    {VertexType::free_vertex, 0, {}, {}},
                    {VertexType::rigid2, 0, {}, {1}}};
    bad.edges = {{0, 1, false, 2}, {1, 2, false, 3}};
    CHECK_THROWS_AS(validate_curve_graph(bad), validation_error);
    bad.edges[1].w = 2;  // balanced now
    CHECK_NOTHROW(validate_curve_graph(bad));

    // weighted edge into a rigid1 vertex
    CurveGraph wrong_dir = make_e1();
    std::swap(wrong_dir.edges[0].tail, wrong_dir.edges[0].head);
    CHECK_THROWS_AS(validate_curve_graph(wrong_dir), validation_error);
}

TEST_CASE("basic dual cone of the one-edge graph") {
    // coordinates (x_0, x_1, l_e, l); equations x_0 = 0, x_1 = l, x_1 - x_0 = l_e
    BasicMonoidDual b = basic_dual_cone(make_e1());
    CHECK(b.rank() == 4);
    CHECK(b.cone.dim() == 1);
    Mat r = rays(b.cone);
    REQUIRE(r.size() == 1);
    CHECK(r[0] == Vec{0, 1, 1, 1});
    // lattice points of the cone agree with the nested-loop oracle
    CHECK(lattice_points_box(b.cone, b.one_functional, 3) ==
          lattice_points_oracle(b.cone, b.one_functional, 3));
}

TEST_CASE("contracted edges split off as free summands") {
    BasicMonoidDual b2 = basic_dual_cone(make_e2());
    auto [reduced, q0] = decompose_q0(make_e2());
    CHECK(q0 == 1);
    CHECK(b2.cone.dim() == reduced.cone.dim() + 1);
    CHECK(reduced.cone.dim() == 1);
    auto [same, none] = decompose_q0(make_e1());
    CHECK(none == 0);
    CHECK(same.cone == basic_dual_cone(make_e1()).cone);
}

TEST_CASE("splitting rays of the weighted two-edge graph") {
    BasicMonoidDual b = basic_dual_cone(make_e3());
    auto rays_found = splitting_rays(b);
    REQUIRE(rays_found.size() == 1);
    const SplittingRay& rho = rays_found[0];
    CHECK(rho.l == 6);
    CHECK(rho.lengths == std::vector<Int>{3, 2});
    CHECK(rho.positions == Vec{0, 6});
    CHECK(rho.splitting_nodes == std::vector<int>{0, 1});
    CHECK(gcd_of(rho.lengths) == 1);

    // the contracted summand of E2 contributes no splitting ray
    CHECK(splitting_rays(basic_dual_cone(make_e2())).size() == 1);
}

TEST_CASE("tropicalize reads off the curve") {
    BasicMonoidDual b = basic_dual_cone(make_e3());
    auto rho = splitting_rays(b)[0];
    TropicalCurveInstance curve = tropicalize(b, rho.ray);
    CHECK(curve.l == 6);
    CHECK(curve.positions == Vec{0, 6});
    CHECK(curve.lengths == std::vector<Int>{3, 2});
    CHECK_THROWS_AS(tropicalize(b, Vec{1, 1, 1, 1, 1}), validation_error);
}

TEST_CASE("collapsing the one-edge graph gives the one-edge bipartite graph") {
    TargetModel t = make_t2();
    CurveGraph cg = make_e1();
    BasicMonoidDual b = basic_dual_cone(cg);
    auto rho = splitting_rays(b)[0];
    DecoratedGraph g = trop_collapse(t, cg, rho);
    CHECK(g == canonical_form(enumerate_graphs(t, 0, 0, {1, 1})[0]));
}

TEST_CASE("collapse aggregates genus along contracted cycles") {
    // two free vertices joined by two contracted edges hang off a rigid1
    // vertex; the collapsed component gains b_1 = 1.
    TargetModel t = make_t2();
    CurveGraph cg = make_e1();
    cg.vertices.push_back({VertexType::free_vertex, 0, {}, {}});
    cg.vertices.push_back({VertexType::free_vertex, 0, {}, {}});
    cg.edges.push_back({0, 2, true, 1});
    cg.edges.push_back({2, 3, true, 1});
    cg.edges.push_back({2, 3, true, 1});
    validate_curve_graph(cg);
    auto rays_found = splitting_rays(basic_dual_cone(cg));
    // pick the ray collapsing the contracted cluster onto the rigid1 vertex
    bool found = false;
    for (const auto& rho : rays_found) {
        if (rho.positions[2] != 0 || rho.positions[3] != 0) continue;
        DecoratedGraph g = trop_collapse(t, cg, rho);
        int gsum = 0;
        for (const auto& v : g.vertices) gsum += v.g;
        CHECK(gsum == 1);  // the contracted 2-cycle
        found = true;
    }
    CHECK(found);
}

TEST_CASE("splitting the hand examples gives zero cones and verified facets") {
    for (const CurveGraph& cg : {make_e1(), make_e3()}) {
        BasicMonoidDual b = basic_dual_cone(cg);
        auto rho = splitting_rays(b)[0];
        SplitResult s = split_cones(cg, rho);
        CHECK(s.q1_dual.dim() == 0);
        CHECK(s.q2_dual.dim() == 0);
        CHECK(verify_split_facet(cg, rho).verified);
    }
}

TEST_CASE("gluing single-vertex halves") {
    // one half-edge of weight 1 on each side reproduces the one-edge graph
    GlueResult r1 = glue_halves(single_vertex_half(1, {{1, 0}}), single_vertex_half(2, {{1, 0}}));
    CHECK(r1.l == 1);
    CHECK(r1.glued.edges.size() == 1);
    CHECK(basic_dual_cone(r1.glued).cone == basic_dual_cone(make_e1()).cone);

    // weights {2,3} give l = 6 with lengths (3,2)
    GlueResult r23 =
        glue_halves(single_vertex_half(1, {{2, 0}, {3, 1}}), single_vertex_half(2, {{2, 0}, {3, 1}}));
    CHECK(r23.l == 6);
    CHECK(r23.monoid.length(r23.rho, 0) == 3);
    CHECK(r23.monoid.length(r23.rho, 1) == 2);
    CHECK(r23.monoid.level(r23.rho) == 6);

    // mismatched weights on the same label are rejected
    CHECK_THROWS_AS(glue_halves(single_vertex_half(1, {{2, 0}}), single_vertex_half(2, {{3, 0}})),
                    validation_error);
    // mismatched label sets are rejected
    CHECK_THROWS_AS(glue_halves(single_vertex_half(1, {{2, 0}}), single_vertex_half(2, {{2, 1}})),
                    validation_error);
}

TEST_CASE("gluing degree") {
    CHECK(gluing_degree({1, 1}) == Rat(1));
    CHECK(gluing_degree({2, 3}) == Rat(1));
    CHECK(gluing_degree({2, 2}) == Rat(2));
    CHECK(gluing_degree({}) == Rat(1));
    CHECK(gluing_degree({2, 4, 6}) == Rat(4));  // 48 / 12
}

TEST_CASE("glue then split reproduces the halves") {
    CurveHalf h1 = single_vertex_half(1, {{2, 0}, {3, 1}});
    CurveHalf h2 = single_vertex_half(2, {{2, 0}, {3, 1}});
    GlueResult glued = glue_halves(h1, h2);
    auto rho_rays = splitting_rays(glued.monoid);
    REQUIRE(!rho_rays.empty());
    SplitResult s = split_cones(glued.glued, rho_rays[0]);
    CHECK(s.half1 == h1);
    CHECK(s.half2 == h2);
}

TEST_CASE("curve graph and half JSON round trips") {
    CurveGraph cg = make_e2();
    CHECK(load_curve_graph(save_curve_graph(cg)) == cg);
    CurveHalf h = single_vertex_half(1, {{2, 0}, {3, 1}});
    CHECK(load_curve_half(save_curve_half(h)) == h);
    CHECK_THROWS_AS(load_curve_graph("{}"), validation_error);
}
