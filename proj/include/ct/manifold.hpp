#pragma once

#include <string>

#include "ct/complex.hpp"

namespace ct {

struct ManifoldReport {
    bool pass = false;
    std::string reason;  // empty when pass
    Simplex witness;     // first violating simplex (empty if none applies)
};

// Combinatorial 3-manifold-with-boundary certification:
//   (a) every triangle lies in at most two tetrahedra,
//   (b) the complex is connected,
//   (c) every edge link is a single path or single cycle,
//   (d) every vertex link is a disc (boundary vertex) or a closed genus-0
//       surface (interior vertex).
// Edge links are checked before vertex links so the cheaper, more local
// witness is reported first.
ManifoldReport check_manifold_3d(const ColouredComplex& k);

}  // namespace ct
