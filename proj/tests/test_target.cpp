#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logdegen/io.hpp"
#include "logdegen/verify.hpp"

#include "fixtures.hpp"

using namespace logdegen;
using logdegen::testing::make_t2;
using logdegen::testing::make_t2_odd_d;

TEST_CASE("graded basis validation") {
    GradedBasis b;
    b.names = {"one", "pt"};
    b.degrees = {0, 2};
    b.pairing = {{0, 1}, {1, 0}};
    CHECK_NOTHROW(b.validate());
    CHECK(b.top_degree() == 2);

    GradedBasis bad = b;
    bad.pairing = {{1, 0}, {0, 0}};  // singular
    CHECK_THROWS_AS(bad.validate(), validation_error);

    GradedBasis ungraded = b;
    ungraded.pairing = {{1, 1}, {1, 0}};  // (one, one) pairs off top degree
    CHECK_THROWS_AS(ungraded.validate(), validation_error);
}

TEST_CASE("dual basis inverts the pairing") {
    GradedBasis b;
    b.names = {"one", "pt"};
    b.degrees = {0, 2};
    b.pairing = {{0, 1}, {1, 0}};
    auto d = dual_basis(b);
    REQUIRE(d.size() == 2);
    // pairing(d_i, b_j) = delta_ij; with this pairing d = (pt, one)
    CHECK(d[0].coeffs == QVec{0, 1});
    CHECK(d[1].coeffs == QVec{1, 0});
    auto diag = diagonal_summands(b);
    CHECK(diag.size() == 2);
    CHECK(diag[0].first.coeffs == basis_class(b, 0).coeffs);
    CHECK(diag[0].second.coeffs == d[0].coeffs);
}

TEST_CASE("homogeneous degree") {
    GradedBasis b;
    b.names = {"x", "y", "z"};
    b.degrees = {1, 1, 2};
    GradedClass mixed{{1, 0, 1}};
    CHECK_FALSE(homogeneous_degree(b, mixed).has_value());
    GradedClass pure{{2, -3, 0}};
    CHECK(homogeneous_degree(b, pure) == 1);
    CHECK(homogeneous_degree(b, zero_class(b)) == 0);
}

TEST_CASE("koszul sign on hand examples") {
    auto odd = [](long id) { return GradedSymbol{id, 1}; };
    auto even = [](long id) { return GradedSymbol{id, 2}; };
    // swapping two odd symbols flips the sign
    CHECK(koszul_sign({odd(1), odd(2)}, {odd(2), odd(1)}) == -1);
    // moving an even symbol is free
    CHECK(koszul_sign({even(1), odd(2), odd(3)}, {odd(2), odd(3), even(1)}) == 1);
    // 3-cycle of odd symbols is an even permutation
    CHECK(koszul_sign({odd(1), odd(2), odd(3)}, {odd(2), odd(3), odd(1)}) == 1);
    CHECK_THROWS_AS(koszul_sign({odd(1)}, {odd(2)}), validation_error);
    // agreement with the adjacent-transposition oracle on a bigger word
    std::vector<GradedSymbol> from{odd(1), even(2), odd(3), odd(4), even(5)};
    std::vector<GradedSymbol> to{odd(4), even(5), odd(1), even(2), odd(3)};
    CHECK(koszul_sign(from, to) == koszul_sign_oracle(from, to));
}

TEST_CASE("target model basics") {
    TargetModel t = make_t2();
    CHECK(t.push(1, {3}) == Vec{3, 0});
    CHECK(t.push(2, {2}) == Vec{0, 2});
    CHECK(t.d_deg(1, {3}) == 3);
    CHECK(t.size_of(2, {5}) == 5);
    GradedClass one = basis_class(t.x_cohomology, 0);
    CHECK(restrict(t, 1, one).coeffs == QVec{1});
}

TEST_CASE("target validation failures") {
    TargetModel t = make_t2();
    t.component[0].size = {0};  // sizes must be >= 1
    CHECK_THROWS_AS(t.validate(), validation_error);

    TargetModel t2 = make_t2();
    t2.d_cohomology.pairing.clear();  // D needs its pairing
    CHECK_THROWS_AS(t2.validate(), validation_error);

    TargetModel t3 = make_t2();
    t3.component[1].d_degree = {-1};
    CHECK_THROWS_AS(t3.validate(), validation_error);
}

TEST_CASE("target JSON round trip") {
    TargetModel t = make_t2_odd_d();
    TargetModel back = load_target(save_target(t));
    CHECK(back.ambient_rank == t.ambient_rank);
    CHECK(back.d_cohomology.names == t.d_cohomology.names);
    CHECK(back.d_cohomology.pairing == t.d_cohomology.pairing);
    CHECK(back.component[0].pushforward_columns == t.component[0].pushforward_columns);
    CHECK(back.component[1].restriction == t.component[1].restriction);
    CHECK_THROWS_AS(load_target("{\"schema\":\"nope\"}"), validation_error);
    CHECK_THROWS_AS(load_target("not json"), validation_error);
}
