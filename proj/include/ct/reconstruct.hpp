#pragma once

#include "ct/canonical.hpp"
#include "ct/midsection.hpp"
#include "ct/slice.hpp"

namespace ct {

// Corner classes of a midsection under mono-colour path connectivity: two
// corners share redClass iff joined by a blue path, and blueClass iff joined
// by a red path. Classes are numbered by their least corner.
struct VertexPairing {
    std::vector<int> redClass;   // per corner
    std::vector<int> blueClass;  // per corner
    int redCount = 0;
    int blueCount = 0;
};

VertexPairing corner_pairing(const MidsectionComplex& s);

// Rebuilds the slice a midsection came from: red vertices are the blue-path
// components, blue vertices the red-path components, and every cell emits one
// mixed D-simplex on its corner classes. Throws ObstructionError when two
// distinct corners are joined by both a red and a blue path, CollisionError
// when a cell collapses onto fewer than D+1 vertices, ValidationError when
// the emitted complex is not a valid slice.
CausalSlice reconstruct(const MidsectionComplex& s);

struct RoundtripCertificate {
    CanonicalForm input;    // canonical form of the slice
    CanonicalForm rebuilt;  // canonical form of reconstruct(midsection(slice))
    bool equal = false;
};

// Sections the slice, rebuilds it, and reports whether the round trip
// returned an isomorphic slice. Errors from reconstruction propagate.
RoundtripCertificate roundtrip_certify(const CausalSlice& k);

}  // namespace ct
