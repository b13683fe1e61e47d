#pragma once

#include <optional>
#include <string>

#include "ct/complex.hpp"

namespace ct {

// Result of classifying a connected closed orientable surface.
struct SurfaceClass {
    int genus = 0;
    bool closed = true;
};

// Structural analysis of a 2-complex as a compact surface, possibly with
// boundary. Used directly for link checks; classify_surface wraps it.
struct SurfaceAnalysis {
    bool isSurface = false;     // edge/vertex-link conditions hold
    std::string reason;         // first violation when !isSurface
    Simplex witness;            // offending simplex (may be empty)
    bool connected = false;
    bool closed = false;        // no boundary edges
    long long chi = 0;
    int boundaryCycles = 0;     // number of boundary components
};

SurfaceAnalysis analyze_surface(const ColouredComplex& k);

// Verifies k is a connected closed orientable surface and returns its genus
// (chi = 2 - 2g). Throws ValidationError otherwise.
SurfaceClass classify_surface(const ColouredComplex& k);

// Coherent-orientation propagation across facet adjacencies for a pure
// D-complex. Precondition (checked): every facet lies in at most 2 maximal
// simplices.
bool is_orientable(const ColouredComplex& k);

}  // namespace ct
