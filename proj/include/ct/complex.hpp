#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ct/colour.hpp"
#include "ct/errors.hpp"

namespace ct {

using VertexId = int32_t;

// A simplex is the sorted list of its distinct vertex ids.
using Simplex = std::vector<VertexId>;

// Pure (dimension-homogeneous) abstract simplicial complex with red/blue
// vertices, set-of-subsets semantics. Immutable after construction; every
// declared vertex must appear in at least one maximal simplex.
class ColouredComplex {
public:
    // Default state: the empty 0-complex. Composite types default-construct
    // members before filling them in; factories below are the real entry
    // points.
    ColouredComplex() = default;

    // Validating factory. Rejects empty complexes, duplicate vertices inside a
    // simplex, simplices of the wrong arity and undeclared vertex ids.
    // Duplicate listings of the same simplex collapse (set semantics).
    static ColouredComplex build(int dim,
                                 std::vector<std::pair<VertexId, Colour>> colours,
                                 std::vector<Simplex> maximal);

    // Unchecked variant used internally where emptiness is legal (e.g. the
    // boundary of a closed complex). Inputs must already be normalized.
    static ColouredComplex unchecked(int dim,
                                     std::vector<std::pair<VertexId, Colour>> colours,
                                     std::vector<Simplex> maximal);

    int dim() const { return dim_; }
    bool empty() const { return maximal_.empty(); }

    const std::vector<VertexId>& vertices() const { return verts_; }
    std::size_t vertex_count() const { return verts_.size(); }
    bool has_vertex(VertexId v) const;
    Colour colour(VertexId v) const;

    const std::vector<Simplex>& maximal_simplices() const { return maximal_; }
    bool has_simplex(const Simplex& s) const;  // among maximal simplices

    // All p-simplices of the downward closure, sorted lexicographically.
    std::vector<Simplex> simplices(int p) const;
    long long count(int p) const { return static_cast<long long>(simplices(p).size()); }

    // Number of red / blue vertices in a simplex.
    int red_count(const Simplex& s) const;

    // New complex with vertex ids mapped through `map` (must be injective on
    // the vertex set); colours carried along.
    ColouredComplex relabelled(const std::function<VertexId(VertexId)>& map) const;

    // New complex with all vertex colours swapped red <-> blue.
    ColouredComplex colour_swapped() const;

    bool operator==(const ColouredComplex& o) const;

private:
    int dim_ = 0;
    std::vector<VertexId> verts_;   // ascending
    std::vector<Colour> colours_;   // parallel to verts_
    std::vector<Simplex> maximal_;  // each ascending; list sorted, deduped
};

// All (D-1)-simplices lying in exactly one maximal simplex, closed downward.
// Returns an empty (D-1)-complex when K is closed.
ColouredComplex boundary(const ColouredComplex& k);

// Connected components (via shared vertices) as full subcomplexes, sorted by
// their smallest vertex id. An empty complex has no components.
std::vector<ColouredComplex> connected_components(const ColouredComplex& k);

// Alternating sum over all simplex dimensions of the downward closure.
long long euler_characteristic(const ColouredComplex& k);

}  // namespace ct
