#pragma once

#include <utility>
#include <vector>

#include "ct/midsection.hpp"

namespace ct {

// Graph on the barycenters of quadrangles and `colour` triangles of a
// 2-dimensional midsection; one arc per `colour` edge of the midsection.
// Faces are the complementary discs, traced through the rotation system the
// coherently oriented cells induce.
struct DualGraph {
    Colour colour = Colour::Red;
    std::vector<int> cellOfVertex;            // dual vertex -> cell index
    std::vector<std::pair<int, int>> edges;   // dual vertex pairs, sorted
    std::vector<int> degree;                  // per dual vertex (2 or 3)
    long long faceCount = 0;
    bool connected = false;

    long long vertex_count() const { return static_cast<long long>(cellOfVertex.size()); }
    long long edge_count() const { return static_cast<long long>(edges.size()); }
    long long chi() const { return vertex_count() - edge_count() + faceCount; }
};

// Requires a validated closed orientable 2-dimensional midsection.
DualGraph dual_graph(const MidsectionComplex& s, Colour colour);

// Cross-checks the Euler characteristic of the midsection surface against
// both boundary surfaces of a 3-dimensional slice: via the dual-graph count
// V - E + F, via the alternating count on the triangulated midsection, and
// via the two boundary complexes.
struct EulerIdentityReport {
    long long chiDualRed = 0;
    long long chiMidsection = 0;
    long long chiRedBoundary = 0;
    long long chiBlueBoundary = 0;
    bool allEqual = false;
};

EulerIdentityReport euler_identity_check(const CausalSlice& k);

}  // namespace ct
