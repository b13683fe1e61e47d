#include "ct/dual_graph.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "ct/errors.hpp"

namespace ct {

namespace {

struct Slot {
    int cell;
    int side;  // index into the cell's boundary cycle
};

// Directed boundary sides of a 2D cell in cyclic order.
std::vector<std::pair<int, int>> cell_cycle(const Cell& c) {
    const auto& v = c.corners;
    if (c.kind == CellKind::Quadrangle)
        return {{v[0], v[1]}, {v[1], v[2]}, {v[2], v[3]}, {v[3], v[0]}};
    return {{v[0], v[1]}, {v[1], v[2]}, {v[2], v[0]}};
}

Colour side_colour(const Cell& c, int side) {
    if (c.kind == CellKind::RedTriangle) return Colour::Red;
    if (c.kind == CellKind::BlueTriangle) return Colour::Blue;
    return side % 2 == 0 ? Colour::Red : Colour::Blue;
}

}  // namespace

DualGraph dual_graph(const MidsectionComplex& s, Colour colour) {
    if (s.dim != 2) throw ValidationError("dual_graph expects a 2-dimensional midsection");
    validate_midsection(s);

    const int nc = static_cast<int>(s.cells.size());
    std::vector<std::vector<std::pair<int, int>>> cycles;
    cycles.reserve(static_cast<std::size_t>(nc));
    for (const auto& c : s.cells) cycles.push_back(cell_cycle(c));
    auto cyc_side = [&](const Slot& sl) {
        return cycles[static_cast<std::size_t>(sl.cell)][static_cast<std::size_t>(sl.side)];
    };

    // Both slots of every coloured edge (validate_midsection guarantees two).
    std::map<CellEdge, std::vector<Slot>> byKey;
    for (int ci = 0; ci < nc; ++ci)
        for (int si = 0; si < static_cast<int>(cycles[static_cast<std::size_t>(ci)].size());
             ++si) {
            auto [u, v] = cyc_side({ci, si});
            CellEdge key = {{std::min(u, v), std::max(u, v)},
                            side_colour(s.cells[static_cast<std::size_t>(ci)], si)};
            byKey[key].push_back({ci, si});
        }
    std::vector<CellEdge> edgeKeys;
    std::vector<std::array<Slot, 2>> edgeSlots;
    std::vector<std::vector<int>> edgesOfCell(static_cast<std::size_t>(nc));
    for (const auto& [key, ss] : byKey) {
        int ei = static_cast<int>(edgeSlots.size());
        edgeKeys.push_back(key);
        edgeSlots.push_back({ss[0], ss[1]});
        edgesOfCell[static_cast<std::size_t>(ss[0].cell)].push_back(ei);
        if (ss[1].cell != ss[0].cell)
            edgesOfCell[static_cast<std::size_t>(ss[1].cell)].push_back(ei);
    }

    // Coherent orientation: the two slots of every edge must traverse it in
    // opposite directions once cell flips are applied.
    std::vector<int> flip(static_cast<std::size_t>(nc), -1);
    auto directed = [&](const Slot& sl) {
        auto d = cyc_side(sl);
        if (flip[static_cast<std::size_t>(sl.cell)] == 1) std::swap(d.first, d.second);
        return d;
    };
    flip[0] = 0;
    std::vector<int> stack = {0};
    int seen = 1;
    while (!stack.empty()) {
        int ci = stack.back();
        stack.pop_back();
        for (int ei : edgesOfCell[static_cast<std::size_t>(ci)]) {
            const auto& ss = edgeSlots[static_cast<std::size_t>(ei)];
            for (int which = 0; which < 2; ++which) {
                const Slot& mine = ss[static_cast<std::size_t>(which)];
                const Slot& theirs = ss[static_cast<std::size_t>(1 - which)];
                if (mine.cell != ci) continue;
                auto dm = directed(mine);
                auto raw = cyc_side(theirs);
                int want = (raw.first == dm.second && raw.second == dm.first) ? 0 : 1;
                int& f = flip[static_cast<std::size_t>(theirs.cell)];
                if (f == -1) {
                    f = want;
                    ++seen;
                    stack.push_back(theirs.cell);
                } else {
                    auto dt = directed(theirs);
                    if (!(dt.first == dm.second && dt.second == dm.first))
                        throw ValidationError("midsection surface is not orientable");
                }
            }
        }
    }
    if (seen != nc) throw ValidationError("midsection surface is not connected");

    DualGraph g;
    g.colour = colour;
    std::vector<int> dualIndex(static_cast<std::size_t>(nc), -1);
    for (int ci = 0; ci < nc; ++ci) {
        CellKind k = s.cells[static_cast<std::size_t>(ci)].kind;
        bool isVertex = k == CellKind::Quadrangle ||
                        (colour == Colour::Red ? k == CellKind::RedTriangle
                                               : k == CellKind::BlueTriangle);
        if (isVertex) {
            dualIndex[static_cast<std::size_t>(ci)] = static_cast<int>(g.cellOfVertex.size());
            g.cellOfVertex.push_back(ci);
        }
    }

    g.degree.assign(g.cellOfVertex.size(), 0);
    for (std::size_t ei = 0; ei < edgeSlots.size(); ++ei) {
        if (edgeKeys[ei].second != colour) continue;
        int a = dualIndex[static_cast<std::size_t>(edgeSlots[ei][0].cell)];
        int b = dualIndex[static_cast<std::size_t>(edgeSlots[ei][1].cell)];
        if (a < 0 || b < 0)
            throw ValidationError("a coloured edge borders a cell with no side of that colour");
        ++g.degree[static_cast<std::size_t>(a)];
        ++g.degree[static_cast<std::size_t>(b)];
        g.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(g.edges.begin(), g.edges.end());
    for (int d : g.degree)
        if (d != 2 && d != 3)
            throw ValidationError("dual-graph vertex of degree " + std::to_string(d));

    // Rotation-system face tracing: darts are the colour-side slots; the
    // successor of a dart is the next colour side, in oriented cycle order,
    // after its partner slot.
    std::map<std::pair<int, int>, Slot> partner;
    std::vector<Slot> darts;
    for (std::size_t ei = 0; ei < edgeSlots.size(); ++ei) {
        if (edgeKeys[ei].second != colour) continue;
        const auto& ss = edgeSlots[ei];
        partner[{ss[0].cell, ss[0].side}] = ss[1];
        partner[{ss[1].cell, ss[1].side}] = ss[0];
        darts.push_back(ss[0]);
        darts.push_back(ss[1]);
    }
    auto next_colour_side = [&](Slot sl) {
        const auto& cyc = cycles[static_cast<std::size_t>(sl.cell)];
        const Cell& cell = s.cells[static_cast<std::size_t>(sl.cell)];
        int n = static_cast<int>(cyc.size());
        int step = flip[static_cast<std::size_t>(sl.cell)] == 1 ? n - 1 : 1;
        int i = sl.side;
        do {
            i = (i + step) % n;
        } while (side_colour(cell, i) != colour);
        return Slot{sl.cell, i};
    };
    std::map<std::pair<int, int>, int> dartFace;
    long long faces = 0;
    for (const Slot& d0 : darts) {
        if (dartFace.count({d0.cell, d0.side})) continue;
        Slot d = d0;
        while (!dartFace.count({d.cell, d.side})) {
            dartFace[{d.cell, d.side}] = static_cast<int>(faces);
            d = next_colour_side(partner.at({d.cell, d.side}));
        }
        ++faces;
    }
    g.faceCount = faces;

    // Connectivity of the dual graph itself.
    std::vector<int> comp(g.cellOfVertex.size());
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int x) {
        while (comp[static_cast<std::size_t>(x)] != x) {
            comp[static_cast<std::size_t>(x)] =
                comp[static_cast<std::size_t>(comp[static_cast<std::size_t>(x)])];
            x = comp[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (auto [a, b] : g.edges) comp[static_cast<std::size_t>(find(a))] = find(b);
    g.connected = !g.cellOfVertex.empty();
    for (std::size_t i = 0; i < comp.size(); ++i)
        if (find(static_cast<int>(i)) != find(0)) g.connected = false;

    // Counting identities implied by the construction.
    long long rt = 0, q = 0;
    for (const auto& c : s.cells) {
        if (c.kind == CellKind::Quadrangle) ++q;
        if (colour == Colour::Red ? c.kind == CellKind::RedTriangle
                                  : c.kind == CellKind::BlueTriangle)
            ++rt;
    }
    if (g.vertex_count() != rt + q || 2 * g.edge_count() != 3 * rt + 2 * q)
        throw ValidationError("dual-graph vertex/edge counts are inconsistent");
    return g;
}

EulerIdentityReport euler_identity_check(const CausalSlice& k) {
    if (k.complex.dim() != 3)
        throw ValidationError("euler_identity_check expects a 3-dimensional slice");
    MidsectionComplex s = midsection(k);
    DualGraph g = dual_graph(s, Colour::Red);

    EulerIdentityReport r;
    r.chiDualRed = g.chi();
    r.chiMidsection = euler_characteristic(triangulated_midsection(s));
    r.chiRedBoundary = euler_characteristic(k.redBoundary);
    r.chiBlueBoundary = euler_characteristic(k.blueBoundary);
    r.allEqual = r.chiDualRed == r.chiMidsection && r.chiMidsection == r.chiRedBoundary &&
                 r.chiRedBoundary == r.chiBlueBoundary;
    return r;
}

}  // namespace ct
