#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logdegen/verify.hpp"

#include "fixtures.hpp"

using namespace logdegen;
using logdegen::testing::make_t2;

TEST_CASE("interval target enumeration, small classes") {
    TargetModel t = make_t2();
    // (0,0,(0,0)): the empty class admits no stable graph
    CHECK(enumerate_graphs(t, 0, 0, {0, 0}).empty());
    // (0,0,(1,1)): exactly the two-vertex one-edge graph of weight 1
    auto g11 = enumerate_graphs(t, 0, 0, {1, 1});
    REQUIRE(g11.size() == 1);
    CHECK(g11[0].vertices.size() == 2);
    REQUIRE(g11[0].edges.size() == 1);
    CHECK(g11[0].edges[0].w == 1);
    // (0,0,(2,2)): weight-2 edge, or a weight-1 star from either side
    auto g22 = enumerate_graphs(t, 0, 0, {2, 2});
    CHECK(g22.size() == 3);
    // unbalanced contact degrees admit nothing
    CHECK(enumerate_graphs(t, 0, 0, {2, 1}).empty());
}

TEST_CASE("genus raises edge counts") {
    TargetModel t = make_t2();
    // g=1, beta=(1,1): either a genus on a vertex with one edge, or two
    // parallel weight-... contact degree 1 forces a single weight-1 edge,
    // so the only extra graphs put the genus on a vertex.
    auto g1 = enumerate_graphs(t, 1, 0, {1, 1});
    CHECK(g1.size() == 2);
    for (const auto& g : g1) {
        int gsum = 0;
        for (const auto& v : g.vertices) gsum += v.g;
        CHECK(1 - (static_cast<int>(g.vertices.size()) - static_cast<int>(g.edges.size())) +
                  gsum ==
              1);
    }
}

TEST_CASE("marking partitions") {
    TargetModel t = make_t2();
    auto g = enumerate_graphs(t, 0, 2, {1, 1});
    // the single underlying graph with 2 markings distributed over 2
    // vertices: {12|-}, {1|2}, {2|1}, {-|12}
    CHECK(g.size() == 4);
    for (const auto& gr : g) {
        std::vector<int> all;
        for (const auto& v : gr.vertices)
            all.insert(all.end(), v.markings.begin(), v.markings.end());
        std::sort(all.begin(), all.end());
        CHECK(all == std::vector<int>{1, 2});
    }
}

TEST_CASE("validation rejects each broken condition") {
    TargetModel t = make_t2();
    DecoratedGraph g;
    g.vertices = {{1, 0, {}, {1}}, {2, 0, {}, {1}}};
    g.edges = {{0, 1, 1}};
    CHECK_NOTHROW(validate_graph(t, g, 0, 0, {1, 1}));

    DecoratedGraph wrong_class = g;
    wrong_class.vertices[0].beta = {2};
    CHECK_THROWS_AS(validate_graph(t, wrong_class, 0, 0, {1, 1}), validation_error);

    DecoratedGraph wrong_contact = g;
    wrong_contact.edges[0].w = 2;
    CHECK_THROWS_AS(validate_graph(t, wrong_contact, 0, 0, {1, 1}), validation_error);

    DecoratedGraph wrong_genus = g;
    wrong_genus.vertices[0].g = 1;
    CHECK_THROWS_AS(validate_graph(t, wrong_genus, 0, 0, {1, 1}), validation_error);

    DecoratedGraph not_bipartite = g;
    not_bipartite.vertices[1].r = 1;
    CHECK_THROWS_AS(validate_graph(t, not_bipartite, 0, 0, {1, 1}), validation_error);

    DecoratedGraph disconnected;
    disconnected.vertices = {{1, 0, {}, {1}}, {2, 0, {}, {1}},
                             {1, 0, {}, {1}}, {2, 0, {}, {1}}};
    disconnected.edges = {{0, 1, 1}, {2, 3, 1}};
    CHECK_THROWS_AS(validate_graph(t, disconnected, 0, 0, {2, 2}), validation_error);
}

TEST_CASE("canonical form and automorphisms") {
    // two interchangeable side-1 vertices feeding one side-2 vertex
    DecoratedGraph g;
    g.vertices = {{2, 0, {}, {2}}, {1, 0, {}, {1}}, {1, 0, {}, {1}}};
    g.edges = {{1, 0, 1}, {2, 0, 1}};
    DecoratedGraph relabeled;
    relabeled.vertices = {{1, 0, {}, {1}}, {2, 0, {}, {2}}, {1, 0, {}, {1}}};
    relabeled.edges = {{2, 1, 1}, {0, 1, 1}};
    CHECK(canonical_form(g) == canonical_form(relabeled));
    CHECK(automorphism_count(g) == 2);

    // distinct genera break the symmetry
    DecoratedGraph asym = g;
    asym.vertices[1].g = 1;
    CHECK(automorphism_count(asym) == 1);

    // two parallel edges of equal weight: swap is an automorphism
    DecoratedGraph par;
    par.vertices = {{1, 0, {}, {2}}, {2, 0, {}, {2}}};
    par.edges = {{0, 1, 1}, {0, 1, 1}};
    CHECK(automorphism_count(par) == 2);
}

TEST_CASE("edge orderings satisfy the counting identity") {
    TargetModel t = make_t2();
    for (const Vec& beta : {Vec{2, 2}, Vec{3, 3}}) {
        for (int g = 0; g <= 1; ++g) {
            for (const auto& gr : enumerate_graphs(t, g, 0, beta)) {
                Int aut = automorphism_count(gr);
                auto ords = edge_orderings(gr);
                CHECK(Int(static_cast<long>(ords.size())) * aut ==
                      factorial(static_cast<int>(gr.edges.size())));
                for (const auto& og : ords) CHECK(og.graph.edges.size() == gr.edges.size());
            }
        }
    }
}

TEST_CASE("half graphs carry the global edge labels") {
    DecoratedGraph g;
    g.vertices = {{1, 0, {}, {2}}, {2, 0, {}, {2}}};
    g.edges = {{0, 1, 2}};
    auto [h1, h2] = half_graphs(OrderedGraph{g});
    CHECK(h1.side == 1);
    CHECK(h2.side == 2);
    REQUIRE(h1.half_edges.size() == 1);
    CHECK(h1.half_edges[0].label == h2.half_edges[0].label);
    CHECK(h1.half_edges[0].w == 2);
}

TEST_CASE("multiplicity formulas on hand values") {
    MultiplicityData m23 = multiplicity_of_weights({2, 3});
    CHECK(m23.l_gamma == 6);
    CHECK(m23.numeric_coeff == Rat(3));       // 6 / 2!
    CHECK(m23.cycle_coeff == Rat(3));         // 6 / 2!
    CHECK(m23.deg_phi == Rat(1));             // 6 / 6
    CHECK(m23.deg_f == Rat(1, 3));            // 2! / 6

    MultiplicityData m22 = multiplicity_of_weights({2, 2});
    CHECK(m22.l_gamma == 2);
    CHECK(m22.numeric_coeff == Rat(2));       // 4 / 2!
    CHECK(m22.cycle_coeff == Rat(1));         // 2 / 2!
    CHECK(m22.deg_phi == Rat(2));             // 4 / 2
    CHECK(m22.deg_f == Rat(1));               // 2! / 2
    CHECK(m22.numeric_coeff == m22.cycle_coeff * m22.deg_phi);

    // one-vertex convention: no edges, every coefficient collapses to 1
    DecoratedGraph solo;
    solo.vertices = {{1, 2, {}, {0}}};
    MultiplicityData m0 = multiplicity_data(OrderedGraph{solo});
    CHECK(m0.numeric_coeff == Rat(1));
}
