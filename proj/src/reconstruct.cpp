#include "ct/reconstruct.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ct/errors.hpp"

namespace ct {

namespace {

// Union-find components over corners restricted to edges of one colour,
// renumbered 0.. in order of each component's least corner.
std::pair<std::vector<int>, int> colour_components(int n, const std::vector<CellEdge>& edges,
                                                   Colour c) {
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto root = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const CellEdge& e : edges)
        if (e.second == c) {
            int a = root(e.first.first), b = root(e.first.second);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<int> klass(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        int r = root(v);
        if (klass[r] < 0) klass[r] = next++;
        klass[v] = klass[r];
    }
    return {klass, next};
}

}  // namespace

VertexPairing corner_pairing(const MidsectionComplex& s) {
    const std::vector<CellEdge> edges = s.edges();
    VertexPairing p;
    // Blue paths identify red endpoints; red paths identify blue endpoints.
    std::tie(p.redClass, p.redCount) = colour_components(s.cornerCount, edges, Colour::Blue);
    std::tie(p.blueClass, p.blueCount) = colour_components(s.cornerCount, edges, Colour::Red);
    return p;
}

CausalSlice reconstruct(const MidsectionComplex& s) {
    validate_midsection(s);
    const int D = s.dim + 1;
    const VertexPairing p = corner_pairing(s);

    std::map<std::pair<int, int>, int> seenPair;
    for (int v = 0; v < s.cornerCount; ++v) {
        auto [it, inserted] = seenPair.insert({{p.redClass[v], p.blueClass[v]}, v});
        if (!inserted)
            throw ObstructionError("corners joined by red and blue paths");
        (void)it;
    }

    // Vertex ids: red classes 0..redCount-1, blue classes after them.
    auto red = [&](int corner) { return static_cast<VertexId>(p.redClass[corner]); };
    auto blue = [&](int corner) {
        return static_cast<VertexId>(p.redCount + p.blueClass[corner]);
    };

    std::set<Simplex> emitted;
    for (const Cell& c : s.cells) {
        const std::vector<int>& v = c.corners;
        Simplex s5;
        switch (c.kind) {
            case CellKind::RedTriangle:
                s5 = {red(v[0]), red(v[1]), red(v[2]), blue(v[0])};
                break;
            case CellKind::BlueTriangle:
                s5 = {blue(v[0]), blue(v[1]), blue(v[2]), red(v[0])};
                break;
            case CellKind::Quadrangle:
                // Cycle sides are red, blue, red, blue: v0,v1 share their blue
                // endpoint, v0,v3 their red one.
                s5 = {red(v[0]), red(v[1]), blue(v[0]), blue(v[2])};
                break;
            case CellKind::RedTet:
                s5 = {red(v[0]), red(v[1]), red(v[2]), red(v[3]), blue(v[0])};
                break;
            case CellKind::BlueTet:
                s5 = {blue(v[0]), blue(v[1]), blue(v[2]), blue(v[3]), red(v[0])};
                break;
            case CellKind::RedPrism:
                // Triangles fix the blue endpoint; verticals fix the red one.
                s5 = {red(v[0]), red(v[1]), red(v[2]), blue(v[0]), blue(v[3])};
                break;
            case CellKind::BluePrism:
                s5 = {blue(v[0]), blue(v[1]), blue(v[2]), red(v[0]), red(v[3])};
                break;
        }
        std::sort(s5.begin(), s5.end());
        if (std::adjacent_find(s5.begin(), s5.end()) != s5.end())
            throw CollisionError("identified corners collapse a cell onto fewer than " +
                                 std::to_string(D + 1) + " vertices");
        if (!emitted.insert(s5).second)
            throw ValidationError("two cells emit the same simplex");
    }

    std::vector<std::pair<VertexId, Colour>> colours;
    for (int i = 0; i < p.redCount; ++i)
        colours.push_back({static_cast<VertexId>(i), Colour::Red});
    for (int i = 0; i < p.blueCount; ++i)
        colours.push_back({static_cast<VertexId>(p.redCount + i), Colour::Blue});
    const ColouredComplex k = ColouredComplex::build(
        D, std::move(colours), std::vector<Simplex>(emitted.begin(), emitted.end()));
    return validate_slice(k);
}

RoundtripCertificate roundtrip_certify(const CausalSlice& k) {
    RoundtripCertificate cert;
    cert.input = canonical_form(k.complex);
    cert.rebuilt = canonical_form(reconstruct(midsection(k)).complex);
    cert.equal = cert.input == cert.rebuilt;
    return cert;
}

}  // namespace ct
