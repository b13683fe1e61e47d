#pragma once

#include <map>
#include <string>
#include <vector>

#include "ct/complex.hpp"
#include "ct/slice.hpp"

namespace ct {

struct CensusOptions {
    // Explored-state budget across all partitions; exceeding it raises
    // ResourceCapError rather than returning approximate counts.
    long long stateCap = 4'000'000;
    int jobs = 1;
    // Optional caps on #(3,1) / #(1,3) tetrahedra of enumerated slices
    // (equivalently on the boundary sizes); -1 = uncapped. Used by the
    // fixed-boundary composition, where boundary sizes are budget-bounded.
    int redCap = -1;
    int blueCap = -1;
    // Joint budget: prune partial slices with V + #(3,1) + #(1,3) > this
    // bound; -1 = uncapped.
    int volumePlusBoundaryCap = -1;
    // Fixed-boundary composition only: count just the triangulations whose
    // individual slices have volume <= this bound (-1 = no bound). The capped
    // family is closed under the subadditivity gluing, and its counts are
    // lower bounds for the full table, so nonemptiness results transfer.
    int maxSliceVolume = -1;
};

struct CensusTable {
    int dimension = 3;
    int genus = 0;
    std::string strategy;            // "direct" | "midsection" | "fixed-boundary"
    int vmax = 0;
    std::map<int, long long> counts;  // V -> classes; every V in 1..vmax present

    // Midsection strategy bookkeeping: legal coloured triangulations seen
    // (pre-deduplication) and midsection classes rejected by the round-trip
    // filter.
    long long rawColoured = 0;
    long long filteredOut = 0;
};

// Slice census with representatives, one per isomorphism class, ordered by
// (volume, canonical form).
struct SliceCensus {
    CensusTable table;
    std::vector<CausalSlice> reps;
};

// Exhaustive enumeration of causal slices of volume <= vmax with boundary
// genus `genus`, by gluing typed tetrahedra at the least open mixed triangle,
// pruning states no valid slice can extend (triangle in >2 tetrahedra,
// interior mono-coloured triangle, closed vertex link, boundary caps) and
// deduplicating partial complexes and completions by canonical form.
SliceCensus enumerate_slices(int vmax, int genus = 0, const CensusOptions& opt = {});

// Independent strategy: enumerate 2-sphere triangulations, colour their edges
// (each triangle all-red, all-blue, or one black + one red + one blue with
// the two flanks of every black edge differing on their shared corner), erase
// the black edges into quadrangles, deduplicate the resulting cell complexes,
// and keep those that rebuild into a slice sectioning back to the same
// complex. Counts genus-0 slices; must agree with enumerate_slices.
CensusTable enumerate_via_midsections(int vmax, const CensusOptions& opt = {});

// All triangulations of the 2-sphere with at most maxTriangles triangles, up
// to isomorphism, ordered by (triangle count, canonical form).
std::vector<ColouredComplex> enumerate_sphere_triangulations(int maxTriangles,
                                                             const CensusOptions& opt = {});

// Counts causal triangulations (any number of slices) of total volume <= vmax
// whose in-boundary is sigmaIn and out-boundary is sigmaOut (as uncoloured
// complexes), by composing the slice census over all interface isomorphisms
// and deduplicating by level-preserving canonical form.
CensusTable count_fixed_boundaries(int vmax, const ColouredComplex& sigmaIn,
                                   const ColouredComplex& sigmaOut,
                                   const CensusOptions& opt = {});

struct BetaRow {
    int volume = 0;        // V
    double logNOverV = 0;  // log N(V - v0) / V
    double runningInf = 0; // running infimum of -log N(V - v0) / V
};

// Growth-rate report: for every V with N(V - v0) > 0 the row carries
// log N(V - v0) / V; -runningInf is the best growth-constant lower bound so
// far (monotone non-decreasing). Desk-scale V yields bounds, not the limit.
struct BetaEstimate {
    int v0 = 0;
    std::vector<BetaRow> rows;
};

BetaEstimate estimate_beta(const CensusTable& table, int v0);

}  // namespace ct
