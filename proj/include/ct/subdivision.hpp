#pragma once

#include "ct/edge_coloured.hpp"
#include "ct/midsection.hpp"

namespace ct {

// Splits every cell of a 3-dimensional midsection into tetrahedra without new
// vertices. Each rectangle face gains the diagonal through its least corner
// (so shared faces agree); a prism is coned from its least corner onto the
// base-tet opposite it and onto the two halves of the far rectangle, giving
// three tetrahedra. Diagonals are coloured black, original edges keep their
// colour. Output: #tets + 3 * #prisms tetrahedra.
EdgeColouredComplex subdivide_4d(const MidsectionComplex& s);

// Inverse of subdivide_4d up to relabelling. Every black edge must sit in a
// unique rectangle (exactly two flanking triangles whose other edges are
// non-black); star sides of size three are regrouped into prisms, tetrahedra
// without black edges become mono-coloured cells. Throws ValidationError if
// the input is not a legal subdivision (e.g. a black triangle, inconsistent
// grouping, or diagonals violating the least-corner rule).
MidsectionComplex reassemble_4d(const EdgeColouredComplex& k);

}  // namespace ct
