#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ct/canonical.hpp"
#include "ct/slice.hpp"

namespace ct {

// Cell kinds of the midsection. A type-(k, D+1-k) simplex contributes one
// cell with k*(D+1-k) corners; each corner is a mixed edge of the slice.
enum class CellKind : uint8_t {
    RedTriangle = 0,   // from (3,1); all edges red
    BlueTriangle = 1,  // from (1,3); all edges blue
    Quadrangle = 2,    // from (2,2); sides alternate red/blue
    RedTet = 3,        // from (4,1); all edges red
    BlueTet = 4,       // from (1,4); all edges blue
    RedPrism = 5,      // from (3,2); two red triangles joined by blue verticals
    BluePrism = 6,     // from (2,3); two blue triangles joined by red verticals
};

const char* to_token(CellKind k);
int corner_count_for(CellKind k);
bool kind_allowed(CellKind k, int dim);

// Corner arrangements (all canonical, see normalize_cell):
//  * triangles / tets: corners ascending;
//  * quadrangle: corners in cyclic order, least corner first, first side red;
//  * prism [a1 a2 a3 b1 b2 b3]: triangles (a1,a2,a3), (b1,b2,b3) and vertical
//    edges (ai,bi); a1 is the least corner and a2 < a3.
struct Cell {
    CellKind kind;
    std::vector<int> corners;

    bool operator==(const Cell& o) const = default;
    bool operator<(const Cell& o) const {
        return std::pair(kind, corners) < std::pair(o.kind, o.corners);
    }
};

// Rewrites the corner list into the canonical arrangement for its kind,
// assuming it already follows the structural layout above.
Cell normalize_cell(CellKind kind, std::vector<int> corners);

// Undirected coloured edge of a cell: (sorted corner pair, colour).
using CellEdge = std::pair<std::pair<int, int>, Colour>;
std::vector<CellEdge> cell_edges(const Cell& c);

// Two-dimensional face of a 3D cell: a triangle (3 corners ascending, all
// edges `colour`) or a rectangle (cyclic corners, normalized like a
// quadrangle: least corner first, first side red; `colour` unused).
struct CellFace {
    bool rectangle = false;
    Colour colour = Colour::Red;
    std::vector<int> corners;

    bool operator==(const CellFace& o) const = default;
    bool operator<(const CellFace& o) const {
        return std::tuple(rectangle, colour, corners) <
               std::tuple(o.rectangle, o.colour, o.corners);
    }
};
std::vector<CellFace> cell_faces(const Cell& c);  // dim-3 kinds only

// Coloured cell complex produced by sectioning a slice between its two
// boundaries; dimension 2 for 3D slices, 3 for 4D slices.
struct MidsectionComplex {
    int dim = 2;
    int cornerCount = 0;        // corners are 0 .. cornerCount-1
    std::vector<Cell> cells;    // sorted by (kind, corners)

    // Provenance, filled by midsection(); empty for parsed or reassembled
    // inputs. cornerOrigin[c] is the mixed slice edge the corner sections;
    // cellOrigin[i] is the source D-simplex of cells[i].
    std::vector<Simplex> cornerOrigin;
    std::vector<Simplex> cellOrigin;

    std::map<CellKind, long long> kind_counts() const;
    long long cell_count() const { return static_cast<long long>(cells.size()); }

    // Union of all cell edges, deduplicated by (pair, colour), sorted.
    std::vector<CellEdge> edges() const;
};

// Sections a validated slice: one cell per D-simplex, corners indexed by the
// mixed edges of the slice in ascending order.
MidsectionComplex midsection(const CausalSlice& k);

// Structural validation for externally supplied complexes: corner ids in
// range, kinds legal for the dimension, corner arrangements canonical, every
// corner used, and closedness (dim 2: every coloured edge borders exactly two
// cell sides; dim 3: every face borders exactly two cells).
void validate_midsection(const MidsectionComplex& s);

// Canonical form of the coloured cell complex (provenance ignored).
CanonicalForm canonical_form(const MidsectionComplex& s);

// 2-complex with every quadrangle split along the diagonal at its least
// corner; vertex set = corners (coloured red, colours carry no meaning).
// Supports the Euler-characteristic cross-check.
ColouredComplex triangulated_midsection(const MidsectionComplex& s);

}  // namespace ct
