#include "doctest.h"

#include <map>

#include "ct/complex.hpp"
#include "ct/errors.hpp"
#include "ct/fixtures.hpp"

using namespace ct;

namespace {

ColouredComplex solid_tet() {
    return ColouredComplex::build(3,
                                  {{0, Colour::Red}, {1, Colour::Red}, {2, Colour::Blue},
                                   {3, Colour::Blue}},
                                  {{0, 1, 2, 3}});
}

}  // namespace

TEST_CASE("face counts of the solid tetrahedron") {
    const ColouredComplex k = solid_tet();
    CHECK(k.dim() == 3);
    CHECK(k.count(3) == 1);
    CHECK(k.count(2) == 4);
    CHECK(k.count(1) == 6);
    CHECK(k.count(0) == 4);
    CHECK(k.vertex_count() == 4);
    CHECK(k.red_count({0, 1, 2, 3}) == 2);
    CHECK(euler_characteristic(k) == 1);
}

TEST_CASE("boundary of the solid tetrahedron is the 4-triangle sphere") {
    const ColouredComplex b = boundary(solid_tet());
    CHECK(b.dim() == 2);
    CHECK(b.maximal_simplices().size() == 4);
    CHECK(euler_characteristic(b) == 2);
    CHECK(boundary(b).empty());  // a closed complex has empty boundary
}

TEST_CASE("euler characteristics of the standard fixtures") {
    CHECK(euler_characteristic(fixtures::sigma_t()) == 2);
    CHECK(euler_characteristic(fixtures::octahedron()) == 2);
    CHECK(euler_characteristic(fixtures::torus7()) == 0);
    CHECK(euler_characteristic(fixtures::boundary_delta4()) == 0);
}

TEST_CASE("torus7 face counts") {
    const ColouredComplex t = fixtures::torus7();
    CHECK(t.count(0) == 7);
    CHECK(t.count(1) == 21);
    CHECK(t.count(2) == 14);
}

TEST_CASE("build validation") {
    // repeated vertex inside a simplex
    CHECK_THROWS_AS(ColouredComplex::build(2, {{0, Colour::Red}, {1, Colour::Red}},
                                           {{0, 0, 1}}),
                    ValidationError);
    // wrong arity
    CHECK_THROWS_AS(ColouredComplex::build(2,
                                           {{0, Colour::Red}, {1, Colour::Red},
                                            {2, Colour::Red}},
                                           {{0, 1}}),
                    ValidationError);
    // undeclared vertex id
    CHECK_THROWS_AS(ColouredComplex::build(1, {{0, Colour::Red}, {1, Colour::Red}},
                                           {{0, 2}}),
                    ValidationError);
    // declared but unused vertex
    CHECK_THROWS_AS(ColouredComplex::build(1,
                                           {{0, Colour::Red}, {1, Colour::Red},
                                            {5, Colour::Blue}},
                                           {{0, 1}}),
                    ValidationError);
    // empty complex
    CHECK_THROWS_AS(ColouredComplex::build(2, {}, {}), ValidationError);
}

TEST_CASE("duplicate maximal simplices collapse (set semantics)") {
    const ColouredComplex k = ColouredComplex::build(
        1, {{0, Colour::Red}, {1, Colour::Blue}}, {{0, 1}, {1, 0}});
    CHECK(k.maximal_simplices().size() == 1);
}

TEST_CASE("relabelled and colour_swapped") {
    const ColouredComplex k = solid_tet();
    const ColouredComplex r = k.relabelled([](VertexId v) { return v + 10; });
    CHECK(r.has_vertex(10));
    CHECK(r.colour(12) == Colour::Blue);
    CHECK(r.maximal_simplices().front() == Simplex{10, 11, 12, 13});

    const ColouredComplex s = k.colour_swapped();
    CHECK(s.colour(0) == Colour::Blue);
    CHECK(s.colour(2) == Colour::Red);
    CHECK(s.colour_swapped() == k);
}

TEST_CASE("connected components split and order by least vertex") {
    const ColouredComplex two = ColouredComplex::build(
        1,
        {{0, Colour::Red}, {1, Colour::Red}, {7, Colour::Blue}, {9, Colour::Blue}},
        {{0, 1}, {7, 9}});
    const auto comps = connected_components(two);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].has_vertex(0));
    CHECK(comps[1].has_vertex(7));
    CHECK(connected_components(fixtures::torus7()).size() == 1);
}
