#include "ct/subdivision.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>

#include "ct/errors.hpp"

namespace ct {

namespace {

using Pair = std::pair<VertexId, VertexId>;

Pair ordered(VertexId a, VertexId b) { return a < b ? Pair{a, b} : Pair{b, a}; }

// Diagonal of a rectangle given in cyclic order: the one through the least
// corner.
Pair rect_diagonal(const std::array<int, 4>& cycle) {
    int at = 0;
    for (int i = 1; i < 4; ++i)
        if (cycle[i] < cycle[at]) at = i;
    return ordered(cycle[at], cycle[(at + 2) % 4]);
}

struct PrismSplit {
    std::array<Simplex, 3> tets;   // each sorted
    std::array<Pair, 3> diagonals; // sorted pairs, ascending list
};

// Cone from the least corner m = a1: base tet m + (b1,b2,b3), plus m + each
// half of the far rectangle (a2,a3,b3,b2) split along its own least-corner
// diagonal. m's two rectangle diagonals are (m,b2) and (m,b3).
PrismSplit split_prism(const Cell& c) {
    const auto& v = c.corners;
    const int m = v[0];
    const std::array<int, 4> far{v[1], v[2], v[5], v[4]};
    const Pair fd = rect_diagonal(far);
    std::vector<int> rest;
    for (int x : far)
        if (x != fd.first && x != fd.second) rest.push_back(x);

    PrismSplit out;
    out.tets[0] = {m, v[3], v[4], v[5]};
    out.tets[1] = {m, fd.first, fd.second, rest[0]};
    out.tets[2] = {m, fd.first, fd.second, rest[1]};
    for (Simplex& t : out.tets) std::sort(t.begin(), t.end());
    out.diagonals = {ordered(m, v[4]), ordered(m, v[5]), fd};
    std::sort(out.diagonals.begin(), out.diagonals.end());
    return out;
}

bool is_prism(CellKind k) { return k == CellKind::RedPrism || k == CellKind::BluePrism; }
bool is_tet(CellKind k) { return k == CellKind::RedTet || k == CellKind::BlueTet; }

void add_colour(std::map<Pair, EdgeColour>& colours, Pair e, EdgeColour c) {
    auto [it, inserted] = colours.insert({e, c});
    if (!inserted && it->second != c)
        throw ValidationError("edge (" + std::to_string(e.first) + "," +
                              std::to_string(e.second) + ") receives conflicting colours");
}

}  // namespace

EdgeColouredComplex subdivide_4d(const MidsectionComplex& s) {
    validate_midsection(s);
    if (s.dim != 3) throw ValidationError("subdivision requires a 3-dimensional midsection");

    std::vector<Simplex> tets;
    std::map<Pair, EdgeColour> colours;
    for (const Cell& c : s.cells) {
        for (const CellEdge& e : cell_edges(c))
            add_colour(colours, e.first, edge_colour(e.second));
        if (is_tet(c.kind)) {
            tets.push_back(c.corners);
        } else {
            const PrismSplit sp = split_prism(c);
            tets.insert(tets.end(), sp.tets.begin(), sp.tets.end());
            for (const Pair& d : sp.diagonals) add_colour(colours, d, EdgeColour::Black);
        }
    }
    const std::set<Simplex> distinct(tets.begin(), tets.end());
    if (distinct.size() != tets.size())
        throw ValidationError("subdivision produced coinciding tetrahedra");

    std::vector<VertexId> verts(s.cornerCount);
    for (int i = 0; i < s.cornerCount; ++i) verts[i] = i;
    return EdgeColouredComplex::build(3, std::move(verts), std::move(tets), std::move(colours));
}

namespace {

// A prism recovered from a three-tetrahedron star side, keyed by its tets.
struct Claim {
    std::array<Simplex, 3> tets;
    Cell cell;
};

// Recovers the prism whose subdivision is exactly `side` (three tets sharing
// the main diagonal). The coloured edges within the side must form two
// mono-coloured triangles matched by verticals of the other colour, and
// re-splitting the candidate must reproduce the side and its black edges.
Cell recover_prism(const EdgeColouredComplex& k, const std::array<Simplex, 3>& side) {
    std::set<int> cornerSet;
    for (const Simplex& t : side) cornerSet.insert(t.begin(), t.end());
    if (cornerSet.size() != 6)
        throw ValidationError("prism star side does not span six corners");

    std::set<Pair> redE, blueE, blackE;
    for (const Simplex& t : side)
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = i + 1; j < t.size(); ++j) {
                const Pair e = ordered(t[i], t[j]);
                switch (k.colour(e.first, e.second)) {
                    case EdgeColour::Red: redE.insert(e); break;
                    case EdgeColour::Blue: blueE.insert(e); break;
                    case EdgeColour::Black: blackE.insert(e); break;
                }
            }
    if (blackE.size() != 3)
        throw ValidationError("prism star side does not contain exactly three diagonals");

    const bool redTriangles = redE.size() == 6 && blueE.size() == 3;
    if (!redTriangles && !(blueE.size() == 6 && redE.size() == 3))
        throw ValidationError("star side edges do not form a prism");
    const auto& triE = redTriangles ? redE : blueE;
    const auto& vertE = redTriangles ? blueE : redE;

    // Split the six corners into the two triangles via triangle-edge paths.
    std::map<int, int> comp;
    for (int v : cornerSet) comp[v] = v;
    auto root = [&](int v) {
        while (comp[v] != v) v = comp[v] = comp[comp[v]];
        return v;
    };
    for (const Pair& e : triE) comp[root(e.first)] = root(e.second);
    std::map<int, std::vector<int>> groups;
    for (int v : cornerSet) groups[root(v)].push_back(v);
    if (groups.size() != 2) throw ValidationError("star side edges do not form a prism");
    for (auto& [r, g] : groups) {
        (void)r;
        if (g.size() != 3) throw ValidationError("star side edges do not form a prism");
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                if (!triE.count(ordered(g[i], g[j])))
                    throw ValidationError("star side edges do not form a prism");
    }

    std::map<int, int> partner;
    for (const Pair& e : vertE) {
        partner[e.first] = e.second;
        partner[e.second] = e.first;
    }
    auto git = groups.begin();
    std::vector<int> a = git->second;
    ++git;
    const std::set<int> bSet(git->second.begin(), git->second.end());
    std::vector<int> corners = {a[0], a[1], a[2]};
    for (int x : a) {
        auto it = partner.find(x);
        if (it == partner.end() || !bSet.count(it->second))
            throw ValidationError("star side verticals do not match the prism triangles");
        corners.push_back(it->second);
    }
    Cell cell = normalize_cell(redTriangles ? CellKind::RedPrism : CellKind::BluePrism,
                               std::move(corners));

    const PrismSplit sp = split_prism(cell);
    std::array<Simplex, 3> expect = sp.tets, got = side;
    std::sort(expect.begin(), expect.end());
    std::sort(got.begin(), got.end());
    if (expect != got || std::set<Pair>(sp.diagonals.begin(), sp.diagonals.end()) != blackE)
        throw ValidationError("star side does not follow the least-corner diagonal rule");
    return cell;
}

}  // namespace

MidsectionComplex reassemble_4d(const EdgeColouredComplex& k) {
    if (k.dim != 3) throw ValidationError("reassembly requires a 3-dimensional complex");

    std::map<Pair, std::vector<int>> tetsOfEdge;
    for (std::size_t ti = 0; ti < k.maximal.size(); ++ti) {
        const Simplex& t = k.maximal[ti];
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = i + 1; j < t.size(); ++j)
                tetsOfEdge[ordered(t[i], t[j])].push_back(static_cast<int>(ti));
    }

    std::vector<Pair> blackEdges;
    for (const auto& [e, c] : k.colours)
        if (c == EdgeColour::Black) blackEdges.push_back(e);

    std::map<std::array<Simplex, 3>, Cell> claims;
    std::map<int, const std::array<Simplex, 3>*> claimOfTet;
    for (const Pair& e : blackEdges) {
        const auto& star = tetsOfEdge.at(e);

        // Triangles on e whose other two edges are non-black: the two halves
        // of the unique rectangle e is a diagonal of.
        std::set<Simplex> halves;
        for (int ti : star)
            for (VertexId x : k.maximal[ti]) {
                if (x == e.first || x == e.second) continue;
                if (k.colour(e.first, x) == EdgeColour::Black) continue;
                if (k.colour(e.second, x) == EdgeColour::Black) continue;
                Simplex tri = {e.first, e.second, x};
                std::sort(tri.begin(), tri.end());
                halves.insert(tri);
            }
        if (halves.size() != 2)
            throw ValidationError("black edge flanked by " + std::to_string(halves.size()) +
                                  " non-black triangles, expected 2");

        // Star sides: tets adjacent when they share a triangle on e that is
        // not one of the two halves.
        std::map<Simplex, std::vector<int>> byTri;
        for (int ti : star)
            for (VertexId x : k.maximal[ti]) {
                if (x == e.first || x == e.second) continue;
                Simplex tri = {e.first, e.second, x};
                std::sort(tri.begin(), tri.end());
                if (!halves.count(tri)) byTri[tri].push_back(ti);
            }
        std::map<int, int> comp;
        for (int ti : star) comp[ti] = ti;
        auto root = [&](int v) {
            while (comp[v] != v) v = comp[v] = comp[comp[v]];
            return v;
        };
        for (const auto& [tri, ts] : byTri) {
            (void)tri;
            for (std::size_t i = 1; i < ts.size(); ++i) comp[root(ts[0])] = root(ts[i]);
        }
        std::map<int, std::vector<int>> sides;
        for (int ti : star) sides[root(ti)].push_back(ti);
        if (sides.size() != 2)
            throw ValidationError("black edge star does not split into two sides");
        for (const auto& [r, side] : sides) {
            (void)r;
            if (side.size() == 2) continue;  // e is a far diagonal for this side
            if (side.size() != 3)
                throw ValidationError("black edge star side of unexpected size " +
                                      std::to_string(side.size()));
            std::array<Simplex, 3> tets{k.maximal[side[0]], k.maximal[side[1]],
                                        k.maximal[side[2]]};
            std::sort(tets.begin(), tets.end());
            Cell cell = recover_prism(k, tets);
            auto [it, inserted] = claims.insert({tets, cell});
            if (!inserted) {
                if (it->second == cell) continue;
                throw ValidationError("tetrahedron grouping inconsistent");
            }
            for (int ti : side) {
                auto [cit, fresh] = claimOfTet.insert({ti, &it->first});
                if (!fresh && *cit->second != tets)
                    throw ValidationError("tetrahedron grouping inconsistent");
            }
        }
    }

    std::vector<Cell> cells;
    for (const auto& [tets, cell] : claims) {
        (void)tets;
        cells.push_back(cell);
    }
    for (std::size_t ti = 0; ti < k.maximal.size(); ++ti) {
        const Simplex& t = k.maximal[ti];
        bool hasBlack = false, hasRed = false, hasBlue = false;
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = i + 1; j < t.size(); ++j)
                switch (k.colour(t[i], t[j])) {
                    case EdgeColour::Red: hasRed = true; break;
                    case EdgeColour::Blue: hasBlue = true; break;
                    case EdgeColour::Black: hasBlack = true; break;
                }
        if (hasBlack) {
            if (!claimOfTet.count(static_cast<int>(ti)))
                throw ValidationError("tetrahedron with a diagonal belongs to no prism");
            continue;
        }
        if (hasRed && hasBlue)
            throw ValidationError("tetrahedron with mixed non-black edges is not a cell");
        cells.push_back(
            normalize_cell(hasRed ? CellKind::RedTet : CellKind::BlueTet, t));
    }

    // Renumber corners densely in ascending id order.
    std::map<VertexId, int> dense;
    for (VertexId v : k.vertices) dense[v] = static_cast<int>(dense.size());
    for (Cell& c : cells) {
        for (int& x : c.corners) x = dense.at(x);
        c = normalize_cell(c.kind, std::move(c.corners));
    }
    std::sort(cells.begin(), cells.end());

    MidsectionComplex out;
    out.dim = 3;
    out.cornerCount = static_cast<int>(k.vertices.size());
    out.cells = std::move(cells);
    validate_midsection(out);
    if (canonical_form(subdivide_4d(out)) != canonical_form(k))
        throw ValidationError("reassembled complex does not subdivide back to the input");
    return out;
}

}  // namespace ct
