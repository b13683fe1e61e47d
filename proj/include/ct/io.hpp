#pragma once

#include <string>

#include "ct/census.hpp"
#include "ct/complex.hpp"
#include "ct/edge_coloured.hpp"
#include "ct/midsection.hpp"
#include "ct/triangulation.hpp"

namespace ct {
namespace io {

// Line-based UTF-8 text formats with version headers. Serialization is
// canonical: parse followed by serialize reproduces the input byte for byte,
// and serializing structurally equal objects yields equal bytes. Parsers
// enforce the canonical grammar strictly and throw FormatError on any
// deviation (with a line number); semantic failures surface as
// ValidationError from the underlying validators.

// "cmplx v1": a coloured simplicial complex.
//   cmplx v1
//   dim <D>
//   v <id> <R|B>        one line per vertex, ids strictly ascending
//   s <id ...>          one line per maximal simplex (D+1 ascending ids),
//                       lines in lexicographic order
std::string write_complex(const ColouredComplex& k);
ColouredComplex read_complex(const std::string& text);

// Edge-coloured variant of "cmplx v1": vertices are uncoloured and every
// closure edge carries a colour token, including black (K) for subdivision
// diagonals.
//   cmplx v1
//   dim <D>
//   v <id>              one line per vertex, ids strictly ascending
//   e <u> <v> <R|B|K>   one line per closure edge, u < v, lines ascending
//   s <id ...>          maximal simplices as in the vertex-coloured form
std::string write_edge_coloured(const EdgeColouredComplex& k);
EdgeColouredComplex read_edge_coloured(const std::string& text);

// "msec v1": a midsection cell complex (sectioning provenance is not stored).
//   msec v1
//   dim <2|3>
//   corner <i>          one line per corner, i = 0 .. N-1 in order
//   cell <kind> <c ...> <word>
//                       one line per cell in (kind, corners) order; kinds are
//                       rtri btri quad (dim 2) / rtet btet rprism bprism
//                       (dim 3), corners in the canonical arrangement, word =
//                       the cell's edge colours in edge order (fixed per
//                       kind, e.g. RBRB for quad)
std::string write_midsection(const MidsectionComplex& m);
MidsectionComplex read_midsection(const std::string& text);

// "ctri v1": a stack of causal slices glued blue-to-red.
//   ctri v1
//   slices <N>
//   slice <i>           followed by the dim/v/s body of slice i
//   iface <i>           for i = 0 .. N-2
//   p <blue> <red>      one line per interface vertex pair, ascending in
//                       the blue id
// Reading revalidates every slice and every interface bijection.
std::string write_triangulation(const CausalTriangulation& t);
CausalTriangulation read_triangulation(const std::string& text);

// Census CSV: header "V,count,strategy,genus", one row per volume 1..vmax in
// ascending order; strategy and genus are constant across rows.
std::string write_census_csv(const CensusTable& t);
CensusTable read_census_csv(const std::string& text);

// Growth-estimate CSV: header "V,logN_over_V,running_inf", one row per
// nonzero census entry at the shifted volume; doubles printed with %.12g.
std::string write_beta_csv(const BetaEstimate& b);

// Whole-file helpers; failures to open/read/write throw FormatError naming
// the path.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace io
}  // namespace ct
