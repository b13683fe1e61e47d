#include "doctest.h"

#include <random>

#include "ct/errors.hpp"
#include "ct/fixtures.hpp"
#include "ct/surface.hpp"

using namespace ct;

namespace {

ColouredComplex red_complex(int dim, int nverts, std::vector<Simplex> maximal) {
    std::vector<std::pair<VertexId, Colour>> colours;
    for (int v = 0; v < nverts; ++v) colours.push_back({v, Colour::Red});
    return ColouredComplex::build(dim, std::move(colours), std::move(maximal));
}

}  // namespace

TEST_CASE("sphere fixtures classify as genus 0") {
    CHECK(classify_surface(fixtures::sigma_t()).genus == 0);
    CHECK(classify_surface(fixtures::octahedron()).genus == 0);
}

TEST_CASE("7-vertex torus classifies as genus 1") {
    CHECK(classify_surface(fixtures::torus7()).genus == 1);
}

TEST_CASE("random stellar subdivisions stay 2-spheres") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 20; ++trial) {
        const int steps = trial % 2 == 0 ? trial : 31 - trial;
        const ColouredComplex s = fixtures::stellar_sphere(rng, steps);
        CHECK(classify_surface(s).genus == 0);
        CHECK(euler_characteristic(s) == 2);
        CHECK(s.count(2) == 4 + 2 * steps);
    }
}

TEST_CASE("disc analysis: surface with one boundary cycle") {
    const SurfaceAnalysis a = analyze_surface(red_complex(2, 3, {{0, 1, 2}}));
    CHECK(a.isSurface);
    CHECK(a.connected);
    CHECK_FALSE(a.closed);
    CHECK(a.boundaryCycles == 1);
    CHECK(a.chi == 1);
}

TEST_CASE("two triangles pinched at a vertex are not a surface") {
    const SurfaceAnalysis a = analyze_surface(red_complex(2, 5, {{0, 1, 2}, {0, 3, 4}}));
    CHECK_FALSE(a.isSurface);
}

TEST_CASE("classify_surface rejects open and disconnected complexes") {
    CHECK_THROWS_AS(classify_surface(red_complex(2, 3, {{0, 1, 2}})), ValidationError);
    CHECK_THROWS_AS(classify_surface(red_complex(
                        2, 8,
                        {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3},
                         {4, 5, 6}, {4, 5, 7}, {4, 6, 7}, {5, 6, 7}})),
                    ValidationError);
}

TEST_CASE("orientability") {
    CHECK(is_orientable(fixtures::sigma_t()));
    CHECK(is_orientable(fixtures::torus7()));
    // 5-triangle Moebius band {i, i+1, i+2} mod 5.
    const ColouredComplex moebius = red_complex(
        2, 5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 3, 4}, {0, 1, 4}});
    CHECK_FALSE(is_orientable(moebius));
}
