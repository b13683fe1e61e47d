#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ct/canonical.hpp"
#include "ct/slice.hpp"

namespace ct {

// A stack of causal slices K^1..K^N glued along interfaces: the blue boundary
// of K^i is identified with the red boundary of K^{i+1} through an explicit
// vertex bijection (an isomorphism of uncoloured complexes).
struct CausalTriangulation {
    std::vector<CausalSlice> slices;
    // interfaceIsos[i]: blue-boundary vertices of slices[i] -> red-boundary
    // vertices of slices[i+1].
    std::vector<std::map<VertexId, VertexId>> interfaceIsos;

    long long volume() const;
    const ColouredComplex& sigma_in() const { return slices.front().redBoundary; }
    const ColouredComplex& sigma_out() const { return slices.back().blueBoundary; }
};

// Validating constructor: each iso must be a bijection of the interface
// vertex sets carrying the blue boundary's simplex set exactly onto the red
// boundary's.
CausalTriangulation stack_slices(std::vector<CausalSlice> slices,
                                 std::vector<std::map<VertexId, VertexId>> isos);

// Convenience: find one interface isomorphism per consecutive pair (colours
// ignored); throws ValidationError when some pair of boundaries is not
// isomorphic.
CausalTriangulation stack_auto(std::vector<CausalSlice> slices);

// The glued complex: slices receive disjoint fresh vertex ids, interface
// vertices are identified, and every vertex is assigned its level (red
// boundary of K^1 = level 0, blue boundary of K^i = level i).
struct LeveledComplex {
    int dim = 3;
    int levels = 0;  // number of slices N; vertex levels run 0..N
    std::vector<Simplex> maximal;
    std::map<VertexId, int> level;
};

LeveledComplex glued_complex(const CausalTriangulation& t);

// Canonical form under level-preserving isomorphism of the glued complex.
CanonicalForm canonical_form(const CausalTriangulation& t);

// Concatenates three stacks (volume V1+V0+V2), gluing the out-boundary of t1
// to the in-boundary of t0 and the out-boundary of t0 to the in-boundary of
// t2. Isos are found automatically when not supplied; throws ValidationError
// on incompatible boundaries.
CausalTriangulation glue_stacks(const CausalTriangulation& t1, const CausalTriangulation& t0,
                                const CausalTriangulation& t2,
                                std::optional<std::map<VertexId, VertexId>> iso10 = {},
                                std::optional<std::map<VertexId, VertexId>> iso02 = {});

// Splits a stack back into the prefix of n1 slices, the middle n0, and the
// remainder; inverse of glue_stacks given the middle block's position.
std::vector<CausalTriangulation> split_stack(const CausalTriangulation& t, int n1, int n0);

}  // namespace ct
