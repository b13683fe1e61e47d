#include "ct/midsection.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "ct/errors.hpp"

namespace ct {

namespace {

// The four arrangements of an alternating 4-cycle that keep the first side's
// colour; the least one starts at the least corner.
std::vector<int> least_cycle4(const std::vector<int>& c) {
    std::vector<std::vector<int>> cand = {
        {c[0], c[1], c[2], c[3]},
        {c[2], c[3], c[0], c[1]},
        {c[1], c[0], c[3], c[2]},
        {c[3], c[2], c[1], c[0]},
    };
    return *std::min_element(cand.begin(), cand.end());
}

Colour triangle_colour(CellKind k) {
    switch (k) {
        case CellKind::RedTriangle:
        case CellKind::RedTet:
        case CellKind::RedPrism: return Colour::Red;
        default: return Colour::Blue;
    }
}

CellEdge make_edge(int a, int b, Colour c) {
    if (a > b) std::swap(a, b);
    return {{a, b}, c};
}

}  // namespace

const char* to_token(CellKind k) {
    switch (k) {
        case CellKind::RedTriangle: return "rtri";
        case CellKind::BlueTriangle: return "btri";
        case CellKind::Quadrangle: return "quad";
        case CellKind::RedTet: return "rtet";
        case CellKind::BlueTet: return "btet";
        case CellKind::RedPrism: return "rprism";
        default: return "bprism";
    }
}

int corner_count_for(CellKind k) {
    switch (k) {
        case CellKind::RedTriangle:
        case CellKind::BlueTriangle: return 3;
        case CellKind::Quadrangle:
        case CellKind::RedTet:
        case CellKind::BlueTet: return 4;
        default: return 6;
    }
}

bool kind_allowed(CellKind k, int dim) {
    bool planar = k == CellKind::RedTriangle || k == CellKind::BlueTriangle ||
                  k == CellKind::Quadrangle;
    return dim == 2 ? planar : !planar;
}

Cell normalize_cell(CellKind kind, std::vector<int> corners) {
    switch (kind) {
        case CellKind::RedTriangle:
        case CellKind::BlueTriangle:
        case CellKind::RedTet:
        case CellKind::BlueTet:
            std::sort(corners.begin(), corners.end());
            return {kind, std::move(corners)};
        case CellKind::Quadrangle:
            return {kind, least_cycle4(corners)};
        default: {
            // [a1 a2 a3 b1 b2 b3]: move the least corner into a1 keeping the
            // vertical pairing, then order the other two columns.
            std::array<int, 3> a = {corners[0], corners[1], corners[2]};
            std::array<int, 3> b = {corners[3], corners[4], corners[5]};
            int least = *std::min_element(corners.begin(), corners.end());
            if (b[0] == least || b[1] == least || b[2] == least) std::swap(a, b);
            std::array<int, 3> idx = {0, 1, 2};
            std::sort(idx.begin(), idx.end(), [&](int i, int j) { return a[i] < a[j]; });
            return {kind,
                    {a[idx[0]], a[idx[1]], a[idx[2]], b[idx[0]], b[idx[1]], b[idx[2]]}};
        }
    }
}

std::vector<CellEdge> cell_edges(const Cell& c) {
    const auto& v = c.corners;
    switch (c.kind) {
        case CellKind::RedTriangle:
        case CellKind::BlueTriangle: {
            Colour col = triangle_colour(c.kind);
            return {make_edge(v[0], v[1], col), make_edge(v[0], v[2], col),
                    make_edge(v[1], v[2], col)};
        }
        case CellKind::Quadrangle:
            return {make_edge(v[0], v[1], Colour::Red), make_edge(v[1], v[2], Colour::Blue),
                    make_edge(v[2], v[3], Colour::Red), make_edge(v[3], v[0], Colour::Blue)};
        case CellKind::RedTet:
        case CellKind::BlueTet: {
            Colour col = triangle_colour(c.kind);
            std::vector<CellEdge> out;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) out.push_back(make_edge(v[i], v[j], col));
            return out;
        }
        default: {
            Colour tri = triangle_colour(c.kind);
            Colour vert = other(tri);
            std::vector<CellEdge> out;
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) {
                    out.push_back(make_edge(v[i], v[j], tri));
                    out.push_back(make_edge(v[3 + i], v[3 + j], tri));
                }
            for (int i = 0; i < 3; ++i) out.push_back(make_edge(v[i], v[3 + i], vert));
            return out;
        }
    }
}

std::vector<CellFace> cell_faces(const Cell& c) {
    const auto& v = c.corners;
    Colour tri = triangle_colour(c.kind);
    std::vector<CellFace> out;
    auto add_triangle = [&](int x, int y, int z) {
        std::vector<int> t = {x, y, z};
        std::sort(t.begin(), t.end());
        out.push_back({false, tri, std::move(t)});
    };
    switch (c.kind) {
        case CellKind::RedTet:
        case CellKind::BlueTet:
            for (int drop = 0; drop < 4; ++drop) {
                std::vector<int> t;
                for (int i = 0; i < 4; ++i)
                    if (i != drop) t.push_back(v[i]);
                out.push_back({false, tri, std::move(t)});
            }
            return out;
        case CellKind::RedPrism:
        case CellKind::BluePrism: {
            add_triangle(v[0], v[1], v[2]);
            add_triangle(v[3], v[4], v[5]);
            const std::array<std::pair<int, int>, 3> pairs = {{{0, 1}, {0, 2}, {1, 2}}};
            for (auto [i, j] : pairs) {
                // Cycle a_i - a_j - b_j - b_i; rotate so the first side is red.
                std::vector<int> cyc = {v[i], v[j], v[3 + j], v[3 + i]};
                if (tri != Colour::Red) cyc = {v[j], v[3 + j], v[3 + i], v[i]};
                out.push_back({true, Colour::Red, least_cycle4(cyc)});
            }
            return out;
        }
        default:
            throw ValidationError("cell_faces is defined for 3-dimensional cells only");
    }
}

std::map<CellKind, long long> MidsectionComplex::kind_counts() const {
    std::map<CellKind, long long> out;
    for (const auto& c : cells) ++out[c.kind];
    return out;
}

std::vector<CellEdge> MidsectionComplex::edges() const {
    std::set<CellEdge> out;
    for (const auto& c : cells)
        for (const auto& e : cell_edges(c)) out.insert(e);
    return {out.begin(), out.end()};
}

MidsectionComplex midsection(const CausalSlice& k) {
    const ColouredComplex& kc = k.complex;
    const int d = kc.dim();

    std::vector<Simplex> mixed;
    for (const auto& e : kc.simplices(1))
        if (kc.red_count(e) == 1) mixed.push_back(e);
    std::map<std::pair<VertexId, VertexId>, int> cornerOf;
    for (std::size_t i = 0; i < mixed.size(); ++i)
        cornerOf[{mixed[i][0], mixed[i][1]}] = static_cast<int>(i);
    auto corner = [&](VertexId r, VertexId b) {
        return cornerOf.at({std::min(r, b), std::max(r, b)});
    };

    std::vector<std::pair<Cell, Simplex>> built;
    for (const auto& s : kc.maximal_simplices()) {
        std::vector<VertexId> reds, blues;
        for (VertexId v : s)
            (kc.colour(v) == Colour::Red ? reds : blues).push_back(v);
        const int nr = static_cast<int>(reds.size());
        Cell cell;
        if (d == 3) {
            if (nr == 3) {
                cell = normalize_cell(CellKind::RedTriangle,
                                      {corner(reds[0], blues[0]), corner(reds[1], blues[0]),
                                       corner(reds[2], blues[0])});
            } else if (nr == 1) {
                cell = normalize_cell(CellKind::BlueTriangle,
                                      {corner(reds[0], blues[0]), corner(reds[0], blues[1]),
                                       corner(reds[0], blues[2])});
            } else {
                cell = normalize_cell(
                    CellKind::Quadrangle,
                    {corner(reds[0], blues[0]), corner(reds[1], blues[0]),
                     corner(reds[1], blues[1]), corner(reds[0], blues[1])});
            }
        } else {
            if (nr == 4) {
                cell = normalize_cell(CellKind::RedTet,
                                      {corner(reds[0], blues[0]), corner(reds[1], blues[0]),
                                       corner(reds[2], blues[0]), corner(reds[3], blues[0])});
            } else if (nr == 1) {
                cell = normalize_cell(CellKind::BlueTet,
                                      {corner(reds[0], blues[0]), corner(reds[0], blues[1]),
                                       corner(reds[0], blues[2]), corner(reds[0], blues[3])});
            } else if (nr == 3) {
                cell = normalize_cell(CellKind::RedPrism,
                                      {corner(reds[0], blues[0]), corner(reds[1], blues[0]),
                                       corner(reds[2], blues[0]), corner(reds[0], blues[1]),
                                       corner(reds[1], blues[1]), corner(reds[2], blues[1])});
            } else {
                cell = normalize_cell(CellKind::BluePrism,
                                      {corner(reds[0], blues[0]), corner(reds[0], blues[1]),
                                       corner(reds[0], blues[2]), corner(reds[1], blues[0]),
                                       corner(reds[1], blues[1]), corner(reds[1], blues[2])});
            }
        }
        built.emplace_back(std::move(cell), s);
    }
    std::sort(built.begin(), built.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    MidsectionComplex out;
    out.dim = d - 1;
    out.cornerCount = static_cast<int>(mixed.size());
    out.cornerOrigin = std::move(mixed);
    for (auto& [cell, origin] : built) {
        out.cells.push_back(std::move(cell));
        out.cellOrigin.push_back(std::move(origin));
    }
    return out;
}

void validate_midsection(const MidsectionComplex& s) {
    if (s.dim != 2 && s.dim != 3)
        throw ValidationError("midsection dimension must be 2 or 3");
    if (s.cells.empty()) throw ValidationError("midsection has no cells");
    if (s.cornerCount <= 0) throw ValidationError("midsection has no corners");

    std::vector<char> used(static_cast<std::size_t>(s.cornerCount), 0);
    for (const auto& c : s.cells) {
        if (!kind_allowed(c.kind, s.dim))
            throw ValidationError(std::string("cell kind ") + to_token(c.kind) +
                                  " is not legal in dimension " + std::to_string(s.dim));
        if (static_cast<int>(c.corners.size()) != corner_count_for(c.kind))
            throw ValidationError("cell has the wrong number of corners");
        std::set<int> distinct(c.corners.begin(), c.corners.end());
        if (distinct.size() != c.corners.size())
            throw ValidationError("cell repeats a corner");
        for (int v : c.corners) {
            if (v < 0 || v >= s.cornerCount)
                throw ValidationError("cell references corner " + std::to_string(v) +
                                      " outside 0.." + std::to_string(s.cornerCount - 1));
            used[static_cast<std::size_t>(v)] = 1;
        }
        if (normalize_cell(c.kind, c.corners).corners != c.corners)
            throw ValidationError("cell corners are not in canonical arrangement");
    }
    for (int v = 0; v < s.cornerCount; ++v)
        if (!used[static_cast<std::size_t>(v)])
            throw ValidationError("corner " + std::to_string(v) + " is unused");
    if (!std::is_sorted(s.cells.begin(), s.cells.end()))
        throw ValidationError("cells are not sorted");

    if (s.dim == 2) {
        std::map<CellEdge, int> slots;
        for (const auto& c : s.cells)
            for (const auto& e : cell_edges(c)) ++slots[e];
        for (const auto& [e, n] : slots)
            if (n != 2)
                throw ValidationError(
                    "edge {" + std::to_string(e.first.first) + "," +
                    std::to_string(e.first.second) + "} of colour " +
                    std::string(1, to_char(e.second)) + " borders " + std::to_string(n) +
                    " cell sides, expected 2");
    } else {
        std::map<CellFace, int> slots;
        for (const auto& c : s.cells)
            for (const auto& f : cell_faces(c)) ++slots[f];
        for (const auto& [f, n] : slots)
            if (n != 2)
                throw ValidationError("a 2-face borders " + std::to_string(n) +
                                      " cells, expected 2");
    }
}

CanonicalForm canonical_form(const MidsectionComplex& s) {
    CanonGraph g;
    for (int i = 0; i < s.cornerCount; ++i) g.add_node(0);
    std::map<CellEdge, int> edgeNode;
    for (const auto& e : s.edges()) {
        int n = g.add_node(e.second == Colour::Red ? 1 : 2);
        edgeNode[e] = n;
        g.add_edge(n, e.first.first);
        g.add_edge(n, e.first.second);
    }
    for (const auto& c : s.cells) {
        int n = g.add_node(3 + static_cast<int>(c.kind));
        for (const auto& e : cell_edges(c)) g.add_edge(n, edgeNode.at(e));
    }
    return "MSEC:" + std::to_string(s.dim) + ":" + canonical_labelling(g).form;
}

ColouredComplex triangulated_midsection(const MidsectionComplex& s) {
    if (s.dim != 2)
        throw ValidationError("triangulated_midsection expects a 2-dimensional midsection");
    std::vector<std::pair<VertexId, Colour>> colours;
    std::set<int> seen;
    for (const auto& c : s.cells) seen.insert(c.corners.begin(), c.corners.end());
    for (int v : seen) colours.emplace_back(v, Colour::Red);

    std::vector<Simplex> tris;
    long long expected = 0;
    for (const auto& c : s.cells) {
        const auto& v = c.corners;
        if (c.kind == CellKind::Quadrangle) {
            tris.push_back({v[0], v[1], v[2]});
            tris.push_back({v[0], v[2], v[3]});
            expected += 2;
        } else {
            tris.push_back({v[0], v[1], v[2]});
            ++expected;
        }
    }
    ColouredComplex out = ColouredComplex::build(2, std::move(colours), std::move(tris));
    if (static_cast<long long>(out.maximal_simplices().size()) != expected)
        throw ValidationError(
            "quadrangle diagonals collide with existing triangles; the complex "
            "cannot be triangulated by least-corner diagonals");
    return out;
}

}  // namespace ct
