#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logdegen/normal_form.hpp"
#include "logdegen/verify.hpp"

using namespace logdegen;

TEST_CASE("dual of a plane cone by hand") {
    // cone{(1,0),(1,1)}: dual inequalities are y >= 0 and x - y >= 0.
    Cone c = Cone::from_generators(2, {{1, 0}, {1, 1}});
    Cone d = dual(c);
    CHECK(rays(d) == Mat{{0, 1}, {1, -1}});
    CHECK(dual(d) == c);  // reflexivity
}

TEST_CASE("orthant is self-dual, zero cone dualizes to everything") {
    for (int n = 1; n <= 4; ++n) {
        Cone o = Cone::orthant(n);
        CHECK(dual(o) == o);
        CHECK(o.is_pointed());
        CHECK(o.dim() == n);
        Cone z = Cone::zero(n);
        CHECK(z.dim() == 0);
        Cone everything = dual(z);
        CHECK(everything.dim() == n);
        CHECK(static_cast<int>(everything.lineality().size()) == n);
    }
}

TEST_CASE("generators are reduced to primitive extreme rays") {
    // (2,2) is a multiple of (1,1); (1,1) is in the cone of the others.
    Cone c = Cone::from_generators(2, {{2, 0}, {2, 2}, {1, 1}, {0, 3}});
    CHECK(rays(c) == Mat{{0, 1}, {1, 0}});
}

TEST_CASE("halfspace and hyperplane keep their lineality") {
    Cone half = Cone::from_inequalities(2, {{1, 0}});
    CHECK_FALSE(half.is_pointed());
    CHECK(half.lineality() == Mat{{0, 1}});
    CHECK_THROWS_AS(rays(half), validation_error);

    Cone hyper = Cone::from_inequalities(3, {{1, 1, 1}, {-1, -1, -1}});
    CHECK(hyper.dim() == 2);
    CHECK(hyper.lineality().size() == 2);
    CHECK(hyper.span_equations() == Mat{{1, 1, 1}});
}

TEST_CASE("membership") {
    Cone c = Cone::from_generators(2, {{1, 0}, {1, 2}});
    CHECK(c.contains({1, 1}));
    CHECK(c.contains({0, 0}));
    CHECK(c.contains({3, 6}));
    CHECK_FALSE(c.contains({0, 1}));
    CHECK_FALSE(c.contains({-1, 0}));
}

TEST_CASE("facet of a dual ray") {
    Cone o = Cone::orthant(3);
    // rho = e_0 cuts the facet x_0 = 0 of the orthant.
    Cone f = facet_of_ray(o, {1, 0, 0});
    CHECK(f.dim() == 2);
    CHECK(rays(f) == Mat{{0, 0, 1}, {0, 1, 0}});
    CHECK_THROWS_AS(facet_of_ray(o, Vec{1, 1, -1}), validation_error);
}

TEST_CASE("saturation computes span intersect Z^n") {
    // span{(2,0,0),(0,2,2)} intersects Z^3 in Z(1,0,0) + Z(0,1,1).
    Sublattice s = saturate(Sublattice::from_basis(3, {{2, 0, 0}, {0, 2, 2}}));
    CHECK(s.basis == Mat{{1, 0, 0}, {0, 1, 1}});
    // index-2 sublattice of Z^2
    Sublattice t = saturate(Sublattice::from_basis(2, {{1, 1}, {1, -1}}));
    CHECK(t.basis.size() == 2);
    CHECK(abs(t.basis[0][0] * t.basis[1][1] - t.basis[0][1] * t.basis[1][0]) == 1);
}

TEST_CASE("products block-embed both factors") {
    Cone p = product(Cone::orthant(2), Cone::from_generators(1, {{1}, {-1}}));
    CHECK(p.ambient_rank() == 3);
    CHECK(p.dim() == 3);
    CHECK(p.lineality() == Mat{{0, 0, 1}});
    CHECK(p.extreme_rays() == Mat{{0, 1, 0}, {1, 0, 0}});
    Cone z = product(Cone::zero(2), Cone::zero(1));
    CHECK(z == Cone::zero(3));
}

TEST_CASE("restrict_to_span makes a cone full-dimensional on its own lattice") {
    // The cone on (1,1,0) and (0,0,1) inside the plane x=y.
    Cone c = Cone::from_generators(3, {{1, 1, 0}, {0, 0, 1}});
    Sublattice span;
    Cone r = restrict_to_span(c, &span);
    CHECK(r.ambient_rank() == 2);
    CHECK(r.dim() == 2);
    CHECK(r == Cone::orthant(2));
    CHECK(span.basis.size() == 2);
}

TEST_CASE("lattice isomorphism search") {
    Cone o = Cone::orthant(2);
    // shear image of the orthant: generated by (1,0) and (1,1)
    Cone sheared = Cone::from_generators(2, {{1, 0}, {1, 1}});
    auto m = find_lattice_isomorphism(o, sheared);
    REQUIRE(m.has_value());
    // the witness maps ray set onto ray set
    for (const Vec& r : rays(o)) {
        Vec image(2, 0);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) image[i] += (*m)[i][j] * r[j];
        CHECK(sheared.contains(image));
    }
    // no isomorphism between cones with different ray counts
    Cone simplicial = Cone::orthant(3);
    Cone square = Cone::from_generators(3, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}});
    CHECK_FALSE(find_lattice_isomorphism(simplicial, square).has_value());
}

TEST_CASE("lattice points in a height box match the nested-loop oracle") {
    Cone c = Cone::from_generators(2, {{1, 0}, {1, 2}});
    Vec height{1, 1};
    Mat pts = lattice_points_box(c, height, 4);
    Mat expected = lattice_points_oracle(c, height, 4);
    CHECK(pts == expected);
    // (1,1) has height 2 and lies strictly inside
    CHECK(std::find(pts.begin(), pts.end(), Vec{1, 1}) != pts.end());
    CHECK_THROWS_AS(lattice_points_box(Cone::from_generators(2, {{1, 0}, {-1, 0}}),
                                       Vec{1, 1}, Int(2)),
                    validation_error);
}

TEST_CASE("normal forms") {
    SmithResult s = smith_normal_form({{2, 4}, {6, 8}});
    REQUIRE(s.rank == 2);
    CHECK(s.diag[0][0] == 2);
    CHECK(s.diag[1][1] == 4);  // elementary divisors of [[2,4],[6,8]]
    Mat k = integer_kernel({{1, 1, 1}}, 3);
    CHECK(k.size() == 2);
    for (const Vec& v : k) CHECK(dot(v, {1, 1, 1}) == 0);
}
