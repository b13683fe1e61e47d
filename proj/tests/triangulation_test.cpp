#include "doctest.h"

#include "ct/builders.hpp"
#include "ct/errors.hpp"
#include "ct/fixtures.hpp"
#include "ct/triangulation.hpp"

using namespace ct;

TEST_CASE("single-slice stack") {
    const CausalTriangulation t = stack_auto({prism_slice(fixtures::sigma_t())});
    CHECK(t.volume() == 12);
    CHECK(t.slices.size() == 1);
    CHECK(t.interfaceIsos.empty());
    CHECK(glued_complex(t).maximal.size() == 12);
}

TEST_CASE("two stacked prisms over the minimal sphere have volume 24") {
    const CausalSlice p = prism_slice(fixtures::sigma_t());
    const CausalTriangulation t = stack_auto({p, p});
    CHECK(t.volume() == 24);
    CHECK(canonical_form(t.sigma_in(), ColourMode::Ignore) ==
          canonical_form(fixtures::sigma_t(), ColourMode::Ignore));
    CHECK(canonical_form(t.sigma_out(), ColourMode::Ignore) ==
          canonical_form(fixtures::sigma_t(), ColourMode::Ignore));

    const LeveledComplex g = glued_complex(t);
    CHECK(g.levels == 2);
    CHECK(g.maximal.size() == 24);
    // 4 + 4 + 4 vertices across levels 0,1,2.
    CHECK(g.level.size() == 12);
}

TEST_CASE("two cone-based slices glue to the double-cone stack of volume 28") {
    const CausalSlice l = lemma3_slice(fixtures::sigma_t());
    const CausalTriangulation t = stack_auto({l, l});
    CHECK(t.volume() == 28);
    const long long vin = static_cast<long long>(t.sigma_in().maximal_simplices().size());
    const long long vout =
        static_cast<long long>(t.sigma_out().maximal_simplices().size());
    CHECK(t.volume() == vin + vout + 20);
}

TEST_CASE("stacking fails when boundaries do not match") {
    CHECK_THROWS_AS(
        stack_auto({prism_slice(fixtures::torus7()), prism_slice(fixtures::sigma_t())}),
        ValidationError);
}

TEST_CASE("explicit interface isos are verified") {
    const CausalSlice p = prism_slice(fixtures::sigma_t());
    // Identity on the blue boundary does not map onto the red boundary ids.
    std::map<VertexId, VertexId> bad;
    for (VertexId v : p.blueBoundary.vertices()) bad[v] = v;
    CHECK_THROWS_AS(stack_slices({p, p}, {bad}), ValidationError);

    // The natural shift blue -> red is accepted.
    std::map<VertexId, VertexId> good;
    for (VertexId v : p.blueBoundary.vertices()) good[v] = v - 4;
    CHECK_NOTHROW(stack_slices({p, p}, {good}));
}

TEST_CASE("three stacks glue to volume 84 and split back") {
    const CausalSlice l = lemma3_slice(fixtures::sigma_t());
    const CausalTriangulation t = stack_auto({l, l});
    const CausalTriangulation whole = glue_stacks(t, t, t);
    CHECK(whole.volume() == 84);
    CHECK(whole.slices.size() == 6);

    const auto parts = split_stack(whole, 2, 2);
    REQUIRE(parts.size() == 3);
    for (const CausalTriangulation& part : parts) {
        CHECK(part.volume() == 28);
        CHECK(canonical_form(part) == canonical_form(t));
    }
}

TEST_CASE("incompatible stacks cannot be glued") {
    const CausalTriangulation a = stack_auto({prism_slice(fixtures::sigma_t())});
    const CausalTriangulation b = stack_auto({prism_slice(fixtures::torus7())});
    CHECK_THROWS_AS(glue_stacks(a, b, a), ValidationError);
}

TEST_CASE("level-preserving canonical form ignores construction labels") {
    const CausalTriangulation a = stack_auto({prism_slice(fixtures::sigma_t())});
    const CausalTriangulation b =
        stack_auto({prism_slice(fixtures::sigma_t(), {3, 2, 1, 0})});
    CHECK(canonical_form(a) == canonical_form(b));

    const CausalTriangulation c = stack_auto({lemma3_slice(fixtures::sigma_t())});
    CHECK(canonical_form(a) != canonical_form(c));
}
