#include "doctest.h"

#include <random>
#include <set>

#include "ct/builders.hpp"
#include "ct/errors.hpp"
#include "ct/fixtures.hpp"
#include "ct/reconstruct.hpp"

using namespace ct;

TEST_CASE("round trips on the standard fixtures") {
    for (const CausalSlice& k :
         {prism_slice(fixtures::sigma_t()), prism_slice(fixtures::torus7()),
          lemma3_slice(fixtures::sigma_t()), prism_slice(fixtures::boundary_delta4())}) {
        const RoundtripCertificate cert = roundtrip_certify(k);
        CHECK(cert.equal);
        CHECK(cert.input == cert.rebuilt);
    }
}

TEST_CASE("round trips on random cone-based slices") {
    std::mt19937 rng(20240819);
    for (int trial = 0; trial < 8; ++trial) {
        const CausalSlice k = lemma3_slice(fixtures::stellar_sphere(rng, 2 + trial));
        CHECK(roundtrip_certify(k).equal);
    }
}

TEST_CASE("sectioning a rebuilt midsection returns the input complex") {
    const MidsectionComplex s = midsection(prism_slice(fixtures::torus7()));
    const CausalSlice rebuilt = reconstruct(s);
    CHECK(canonical_form(midsection(rebuilt)) == canonical_form(s));
}

TEST_CASE("corner classes count the slice vertices") {
    const CausalSlice k = prism_slice(fixtures::sigma_t());
    const VertexPairing p = corner_pairing(midsection(k));
    CHECK(p.redCount == 4);
    CHECK(p.blueCount == 4);
    // Distinct corners never share both classes on a genuine midsection.
    std::set<std::pair<int, int>> pairs;
    for (std::size_t v = 0; v < p.redClass.size(); ++v)
        pairs.insert({p.redClass[v], p.blueClass[v]});
    CHECK(pairs.size() == p.redClass.size());
}

TEST_CASE("corners joined by red and blue paths are an obstruction") {
    CHECK_THROWS_AS(reconstruct(fixtures::fig4_midsection()), ObstructionError);
    try {
        reconstruct(fixtures::fig4_midsection());
    } catch (const ObstructionError& e) {
        CHECK(std::string(e.what()) == "corners joined by red and blue paths");
    }
}

TEST_CASE("collision-free non-midsections fail post-validation, not obstruction") {
    const MidsectionComplex torus = fixtures::quad_torus_midsection();
    bool obstruction = false, validation = false;
    try {
        reconstruct(torus);
    } catch (const ObstructionError&) {
        obstruction = true;
    } catch (const ValidationError&) {
        validation = true;
    }
    CHECK_FALSE(obstruction);
    CHECK(validation);
}

TEST_CASE("rebuilt slices never contain a mono-coloured top simplex") {
    const CausalSlice k = reconstruct(midsection(lemma3_slice(fixtures::sigma_t())));
    for (const Simplex& s : k.complex.maximal_simplices()) {
        const int reds = k.complex.red_count(s);
        CHECK(reds > 0);
        CHECK(reds < static_cast<int>(s.size()));
    }
}
