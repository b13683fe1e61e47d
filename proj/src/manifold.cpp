#include "ct/manifold.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "ct/surface.hpp"

namespace ct {

namespace {

ManifoldReport fail(std::string reason, Simplex witness) {
    ManifoldReport r;
    r.pass = false;
    r.reason = std::move(reason);
    r.witness = std::move(witness);
    return r;
}

}  // namespace

ManifoldReport check_manifold_3d(const ColouredComplex& k) {
    if (k.dim() != 3) return fail("not a 3-complex", {});
    const auto& tets = k.maximal_simplices();

    // (a) triangles in at most two tetrahedra.
    std::map<Simplex, std::vector<std::size_t>> triTets;
    for (std::size_t ti = 0; ti < tets.size(); ++ti) {
        const auto& s = tets[ti];
        for (std::size_t drop = 0; drop < 4; ++drop) {
            Simplex f;
            for (std::size_t i = 0; i < 4; ++i)
                if (i != drop) f.push_back(s[i]);
            triTets[f].push_back(ti);
        }
    }
    for (const auto& [f, inc] : triTets)
        if (inc.size() > 2) return fail("triangle lies in more than two tetrahedra", f);

    // (b) connectivity.
    if (connected_components(k).size() != 1) return fail("complex is not connected", {});

    // (c) edge links: for edge {a,b}, vertices w with {a,b,w} a triangle and
    // edges {w,x} for tetrahedra {a,b,w,x}; must be a single path or cycle.
    std::set<std::pair<VertexId, VertexId>> edges;
    for (const auto& s : tets)
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j) edges.insert({s[i], s[j]});
    for (const auto& [a, b] : edges) {
        std::map<VertexId, std::vector<VertexId>> adj;
        for (const auto& s : tets) {
            if (!std::binary_search(s.begin(), s.end(), a) ||
                !std::binary_search(s.begin(), s.end(), b))
                continue;
            std::vector<VertexId> rest;
            for (VertexId v : s)
                if (v != a && v != b) rest.push_back(v);
            adj[rest[0]].push_back(rest[1]);
            adj[rest[1]].push_back(rest[0]);
        }
        // Degenerate: no tetrahedron contains the edge -- impossible here.
        int endpoints = 0;
        bool bad = adj.empty();
        for (const auto& [w, nb] : adj) {
            if (nb.size() > 2) bad = true;
            if (nb.size() <= 1) ++endpoints;
        }
        if (!bad) {
            std::set<VertexId> seen;
            std::queue<VertexId> q;
            q.push(adj.begin()->first);
            seen.insert(adj.begin()->first);
            while (!q.empty()) {
                VertexId v = q.front();
                q.pop();
                for (VertexId w : adj.at(v))
                    if (seen.insert(w).second) q.push(w);
            }
            if (seen.size() != adj.size()) bad = true;
            if (endpoints != 0 && endpoints != 2) bad = true;
        }
        if (bad) return fail("edge link is not a single path or cycle", {a, b});
    }

    // Which vertices lie on the boundary (in a triangle with one tetrahedron)?
    std::set<VertexId> boundaryVerts;
    for (const auto& [f, inc] : triTets)
        if (inc.size() == 1) boundaryVerts.insert(f.begin(), f.end());

    // (d) vertex links.
    for (VertexId v : k.vertices()) {
        std::vector<Simplex> linkTris;
        std::set<VertexId> linkVerts;
        for (const auto& s : tets) {
            if (!std::binary_search(s.begin(), s.end(), v)) continue;
            Simplex f;
            for (VertexId w : s)
                if (w != v) f.push_back(w);
            linkVerts.insert(f.begin(), f.end());
            linkTris.push_back(std::move(f));
        }
        std::vector<std::pair<VertexId, Colour>> colours;
        for (VertexId w : linkVerts) colours.emplace_back(w, k.colour(w));
        auto link = ColouredComplex::unchecked(2, std::move(colours), std::move(linkTris));
        SurfaceAnalysis a = analyze_surface(link);
        if (!a.isSurface || !a.connected)
            return fail("vertex link is not a surface disc or sphere", {v});
        if (boundaryVerts.count(v)) {
            // Disc: chi = 1 with a single boundary cycle.
            if (a.closed || a.chi != 1 || a.boundaryCycles != 1)
                return fail("boundary vertex link is not a disc", {v});
        } else {
            // Closed connected surface with chi = 2 is the 2-sphere.
            if (!a.closed || a.chi != 2)
                return fail("interior vertex link is not a 2-sphere", {v});
        }
    }

    ManifoldReport r;
    r.pass = true;
    return r;
}

}  // namespace ct
