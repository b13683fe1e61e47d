#include "doctest.h"

#include "ct/builders.hpp"
#include "ct/dual_graph.hpp"
#include "ct/errors.hpp"
#include "ct/fixtures.hpp"

using namespace ct;

TEST_CASE("red dual graph of the minimal prism midsection") {
    const CausalSlice k = prism_slice(fixtures::sigma_t());
    const MidsectionComplex s = midsection(k);
    const DualGraph g = dual_graph(s, Colour::Red);

    // Vertices: 4 quads + 4 red triangles; edges: (3*4 + 2*4)/2.
    CHECK(g.vertex_count() == 8);
    CHECK(g.edge_count() == 10);
    // Faces correspond to red boundary vertices.
    CHECK(g.faceCount ==
          static_cast<long long>(k.redBoundary.vertex_count()));
    CHECK(g.chi() == 2);
    CHECK(g.connected);
    for (long long d : g.degree) CHECK((d == 2 || d == 3));
}

TEST_CASE("blue dual graph mirrors the red one on a symmetric slice") {
    const MidsectionComplex s = midsection(prism_slice(fixtures::sigma_t()));
    const DualGraph r = dual_graph(s, Colour::Red);
    const DualGraph b = dual_graph(s, Colour::Blue);
    CHECK(r.vertex_count() == b.vertex_count());
    CHECK(r.edge_count() == b.edge_count());
    CHECK(r.faceCount == b.faceCount);
}

TEST_CASE("dual graph of the cone-based slice midsection") {
    const CausalSlice k = lemma3_slice(fixtures::sigma_t());
    const DualGraph g = dual_graph(midsection(k), Colour::Red);
    CHECK(g.vertex_count() == 10);  // 6 quads + 4 red triangles
    CHECK(g.edge_count() == 12);    // (3*4 + 2*6)/2
    CHECK(g.faceCount == 4);
    CHECK(g.chi() == 2);
}

TEST_CASE("torus prism keeps the dual Euler characteristic at zero") {
    const CausalSlice k = prism_slice(fixtures::torus7());
    const DualGraph g = dual_graph(midsection(k), Colour::Red);
    CHECK(g.vertex_count() == 28);  // 14 quads + 14 triangles
    CHECK(g.edge_count() == 35);
    CHECK(g.faceCount == 7);
    CHECK(g.chi() == 0);
}

TEST_CASE("euler identity ties dual graph, midsection and boundaries") {
    for (const ColouredComplex& base : {fixtures::sigma_t(), fixtures::torus7()}) {
        const CausalSlice k = prism_slice(base);
        const EulerIdentityReport rep = euler_identity_check(k);
        CHECK(rep.allEqual);
        CHECK(rep.chiDualRed == rep.chiMidsection);
        CHECK(rep.chiMidsection == rep.chiRedBoundary);
        CHECK(rep.chiRedBoundary == rep.chiBlueBoundary);
        CHECK(rep.chiDualRed == (base.count(0) - base.count(1) + base.count(2)));
    }
}

TEST_CASE("dual graphs are only defined for 2-dimensional midsections") {
    const MidsectionComplex s = midsection(prism_slice(fixtures::boundary_delta4()));
    CHECK_THROWS_AS(dual_graph(s, Colour::Red), ValidationError);
}
