#include "doctest.h"

#include <random>

#include "ct/builders.hpp"
#include "ct/canonical.hpp"
#include "ct/errors.hpp"
#include "ct/fixtures.hpp"

using namespace ct;

TEST_CASE("prism over the 4-triangle sphere: 12 tetrahedra, 4 of each type") {
    const CausalSlice s = prism_slice(fixtures::sigma_t());
    CHECK(s.volume() == 12);
    const auto counts = s.type_counts();
    CHECK(counts.at({3, 1}) == 4);
    CHECK(counts.at({2, 2}) == 4);
    CHECK(counts.at({1, 3}) == 4);
    CHECK(s.genus == 0);
    CHECK_FALSE(s.generalized);
    CHECK(s.redBoundary.maximal_simplices().size() == 4);
    CHECK(s.blueBoundary.maximal_simplices().size() == 4);
    // Both boundaries are copies of the base surface.
    CHECK(canonical_form(s.redBoundary, ColourMode::Ignore) ==
          canonical_form(fixtures::sigma_t(), ColourMode::Ignore));
    CHECK(canonical_form(s.blueBoundary, ColourMode::Ignore) ==
          canonical_form(fixtures::sigma_t(), ColourMode::Ignore));
}

TEST_CASE("prism over the 7-vertex torus: 42 tetrahedra, genus 1") {
    const CausalSlice s = prism_slice(fixtures::torus7());
    CHECK(s.volume() == 42);
    CHECK(s.genus == 1);
    CHECK(s.generalized);
}

TEST_CASE("prism over the minimal 3-sphere: 20 four-simplices, 5 of each type") {
    const CausalSlice s = prism_slice(fixtures::boundary_delta4());
    CHECK(s.complex.dim() == 4);
    CHECK(s.volume() == 20);
    const auto counts = s.type_counts();
    CHECK(counts.at({4, 1}) == 5);
    CHECK(counts.at({3, 2}) == 5);
    CHECK(counts.at({2, 3}) == 5);
    CHECK(counts.at({1, 4}) == 5);
    CHECK(s.generalized);  // 4D boundary topology is not classified
}

TEST_CASE("prism respects a custom vertex order and rejects bad ones") {
    const ColouredComplex base = fixtures::sigma_t();
    const CausalSlice s = prism_slice(base, {3, 1, 2, 0});
    CHECK(s.volume() == 12);
    CHECK_THROWS_AS(prism_slice(base, {0, 1, 2}), ValidationError);
    CHECK_THROWS_AS(prism_slice(base, {0, 1, 2, 2}), ValidationError);
    CHECK_THROWS_AS(prism_slice(base, {0, 1, 2, 9}), ValidationError);
}

TEST_CASE("prism rejects non-manifold and open bases") {
    CHECK_THROWS_AS(prism_slice(fixtures::pinched_pair()), ValidationError);
    const ColouredComplex disc =
        ColouredComplex::build(2, {{0, Colour::Red}, {1, Colour::Red}, {2, Colour::Red}},
                               {{0, 1, 2}});
    CHECK_THROWS_AS(prism_slice(disc), ValidationError);
}

TEST_CASE("cone-based slice over the 4-triangle sphere") {
    const CausalSlice s = lemma3_slice(fixtures::sigma_t());
    CHECK(s.volume() == 14);  // |surface| + 10
    CHECK(s.genus == 0);
    CHECK(s.redBoundary.maximal_simplices().size() == 4);
    CHECK(s.blueBoundary.maximal_simplices().size() == 4);
    CHECK(canonical_form(s.blueBoundary, ColourMode::Ignore) ==
          canonical_form(fixtures::sigma_t(), ColourMode::Ignore));
}

TEST_CASE("cone-based slice needs a degree-3 vertex") {
    CHECK_THROWS_AS(lemma3_slice(fixtures::octahedron()), ValidationError);
}

TEST_CASE("cone-based slice rejects higher genus") {
    CHECK_THROWS_AS(lemma3_slice(fixtures::torus7()), ValidationError);
}

TEST_CASE("cone-based slice volume is |surface| + 10 on random spheres") {
    std::mt19937 rng(20240818);
    for (int trial = 0; trial < 20; ++trial) {
        const ColouredComplex sphere = fixtures::stellar_sphere(rng, 1 + trial);
        const long long faces = sphere.count(2);
        const CausalSlice s = lemma3_slice(sphere);
        CHECK(s.volume() == faces + 10);
        CHECK(s.genus == 0);
        // Red boundary is the input sphere itself.
        CHECK(canonical_form(s.redBoundary, ColourMode::Ignore) ==
              canonical_form(sphere, ColourMode::Ignore));
        // Blue boundary is the minimal sphere.
        CHECK(s.blueBoundary.maximal_simplices().size() == 4);
    }
}
