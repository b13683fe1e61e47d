#pragma once

#include <vector>

#include "ct/slice.hpp"

namespace ct {

// Product slice over a closed connected orientable manifold of dimension 2 or
// 3: each facet {v0 < .. < vd} (ordered by a global total vertex order) is
// thickened into the staircase of d+1 mixed simplices {v0..vi, vi'..vd'}, one
// of each type.  The shared order makes neighbouring staircases agree face to
// face.  The red boundary keeps the input's vertex ids; the blue copy of
// vertex v is v + maxId + 1.  `vertexOrder`, when non-empty, must list every
// input vertex exactly once; ascending id order is used otherwise.  Volume is
// (d+1) * (#facets).
CausalSlice prism_slice(const ColouredComplex& sigma,
                        const std::vector<VertexId>& vertexOrder = {});

// Minimal-volume slice over a sphere triangulation that has a vertex of
// degree 3: cone the surface minus that vertex's star to a new blue apex,
// then close up with a fixed core of thirteen tetrahedra.  The red boundary
// is the input surface; the blue boundary is the four-vertex sphere on the
// new vertices maxId+1 .. maxId+4.  Volume is (#triangles) + 10.  Throws
// ValidationError when no degree-3 vertex exists.
CausalSlice lemma3_slice(const ColouredComplex& sigma);

}  // namespace ct
