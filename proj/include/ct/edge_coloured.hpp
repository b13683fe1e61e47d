#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ct/canonical.hpp"
#include "ct/complex.hpp"

namespace ct {

// Pure simplicial complex with red/blue/black edge colours and uncoloured
// vertices. Used for subdivided 3-dimensional midsections (black = the
// diagonals the subdivision introduces) and for coloured surface
// triangulations in the census.
struct EdgeColouredComplex {
    int dim = 2;
    std::vector<VertexId> vertices;  // ascending
    std::vector<Simplex> maximal;    // each ascending; list sorted, deduped
    std::map<std::pair<VertexId, VertexId>, EdgeColour> colours;  // every closure edge

    // Validating factory: simplices must be (dim+1)-subsets of the declared
    // vertices, every vertex must be used, and `colours` must cover exactly
    // the closure's edge set.
    static EdgeColouredComplex build(int dim, std::vector<VertexId> vertices,
                                     std::vector<Simplex> maximal,
                                     std::map<std::pair<VertexId, VertexId>, EdgeColour> colours);

    EdgeColour colour(VertexId a, VertexId b) const;
    long long count_edges(EdgeColour c) const;
};

// Canonical form under colour-preserving isomorphism.
CanonicalForm canonical_form(const EdgeColouredComplex& k);

}  // namespace ct
