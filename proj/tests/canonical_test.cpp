#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "ct/canonical.hpp"
#include "ct/fixtures.hpp"

using namespace ct;

namespace {

ColouredComplex random_relabel(const ColouredComplex& k, std::mt19937& rng) {
    std::vector<VertexId> ids = k.vertices();
    std::vector<VertexId> target = ids;
    std::shuffle(target.begin(), target.end(), rng);
    std::map<VertexId, VertexId> perm;
    for (std::size_t i = 0; i < ids.size(); ++i) perm[ids[i]] = target[i];
    return k.relabelled([&](VertexId v) { return perm.at(v); });
}

ColouredComplex one_tet(Colour c0, Colour c1, Colour c2, Colour c3) {
    return ColouredComplex::build(3, {{0, c0}, {1, c1}, {2, c2}, {3, c3}},
                                  {{0, 1, 2, 3}});
}

}  // namespace

TEST_CASE("canonical form is invariant under vertex relabelling") {
    std::mt19937 rng(7);
    for (const ColouredComplex& k :
         {fixtures::sigma_t(), fixtures::torus7(), fixtures::boundary_delta4()}) {
        const CanonicalForm base = canonical_form(k);
        for (int i = 0; i < 10; ++i)
            CHECK(canonical_form(random_relabel(k, rng)) == base);
    }
}

TEST_CASE("colour assignments distinguish forms unless ignored") {
    const Colour R = Colour::Red, B = Colour::Blue;
    const ColouredComplex a = one_tet(R, R, R, B);
    const ColouredComplex b = one_tet(R, R, B, B);
    const ColouredComplex c = one_tet(R, B, B, B);

    // The three mixed colourings of a single tetrahedron are pairwise distinct.
    CHECK(canonical_form(a) != canonical_form(b));
    CHECK(canonical_form(b) != canonical_form(c));
    CHECK(canonical_form(a) != canonical_form(c));

    // Ignoring colours they are all the same complex.
    CHECK(canonical_form(a, ColourMode::Ignore) == canonical_form(b, ColourMode::Ignore));
    CHECK(canonical_form(b, ColourMode::Ignore) == canonical_form(c, ColourMode::Ignore));

    // Swapping colours maps type (3,1) onto type (1,3).
    CHECK(canonical_form(a.colour_swapped()) == canonical_form(c));

    // Placement of the colours within a type does not matter.
    CHECK(canonical_form(one_tet(R, B, R, R)) == canonical_form(a));
}

TEST_CASE("find_isomorphism returns an explicit vertex bijection") {
    std::mt19937 rng(11);
    const ColouredComplex t = fixtures::torus7();
    const ColouredComplex r = random_relabel(t, rng);
    const auto iso = find_isomorphism(t, r, ColourMode::Respect);
    REQUIRE(iso.has_value());
    const ColouredComplex mapped = t.relabelled([&](VertexId v) { return iso->at(v); });
    CHECK(mapped == r);

    CHECK_FALSE(
        find_isomorphism(fixtures::sigma_t(), fixtures::torus7(), ColourMode::Ignore)
            .has_value());
}

TEST_CASE("automorphism counts of the small spheres") {
    const auto tet = all_isomorphisms(fixtures::sigma_t(), fixtures::sigma_t(),
                                      ColourMode::Ignore);
    CHECK(tet.size() == 24);  // S_4
    const auto oct = all_isomorphisms(fixtures::octahedron(), fixtures::octahedron(),
                                      ColourMode::Ignore);
    CHECK(oct.size() == 48);  // octahedral symmetry
    for (const auto& iso : oct) {
        const ColouredComplex mapped =
            fixtures::octahedron().relabelled([&](VertexId v) { return iso.at(v); });
        CHECK(mapped == fixtures::octahedron());
    }
}

TEST_CASE("torus automorphisms (colour-blind) number 42") {
    // The 7-vertex torus is vertex-transitive with stabilizer of order 6.
    CHECK(all_isomorphisms(fixtures::torus7(), fixtures::torus7(), ColourMode::Ignore)
              .size() == 42);
}
