#include "ct/surface.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace ct {

namespace {

// Is the graph given by `adj` a single path or single cycle covering all its
// vertices? Returns {ok, isCycle}.
std::pair<bool, bool> path_or_cycle(const std::map<VertexId, std::vector<VertexId>>& adj) {
    if (adj.empty()) return {false, false};
    int endpoints = 0;
    for (const auto& [v, nb] : adj) {
        if (nb.size() > 2) return {false, false};
        if (nb.size() == 0) {
            // Isolated link vertex: only legal as the sole vertex (a path of
            // length 0 cannot occur in our complexes since every link edge
            // comes with its endpoints, so reject).
            return {false, false};
        }
        if (nb.size() == 1) ++endpoints;
    }
    // Connectivity.
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
    if (seen.size() != adj.size()) return {false, false};
    if (endpoints == 0) return {true, true};
    if (endpoints == 2) return {true, false};
    return {false, false};
}

}  // namespace

SurfaceAnalysis analyze_surface(const ColouredComplex& k) {
    SurfaceAnalysis out;
    if (k.dim() != 2) {
        out.reason = "not a 2-complex";
        return out;
    }
    if (k.empty()) {
        out.reason = "empty complex";
        return out;
    }

    const auto& tris = k.maximal_simplices();
    std::map<std::pair<VertexId, VertexId>, int> edgeTriangles;
    for (const auto& t : tris) {
        edgeTriangles[{t[0], t[1]}]++;
        edgeTriangles[{t[0], t[2]}]++;
        edgeTriangles[{t[1], t[2]}]++;
    }
    for (const auto& [e, n] : edgeTriangles) {
        if (n > 2) {
            out.reason = "edge lies in more than two triangles";
            out.witness = {e.first, e.second};
            return out;
        }
    }

    // Vertex links: one edge {u,w} per triangle {v,u,w}.
    std::map<VertexId, std::map<VertexId, std::vector<VertexId>>> link;
    for (const auto& t : tris) {
        link[t[0]][t[1]].push_back(t[2]);
        link[t[0]][t[2]].push_back(t[1]);
        link[t[1]][t[0]].push_back(t[2]);
        link[t[1]][t[2]].push_back(t[0]);
        link[t[2]][t[0]].push_back(t[1]);
        link[t[2]][t[1]].push_back(t[0]);
    }
    for (const auto& [v, adj] : link) {
        auto [ok, isCycle] = path_or_cycle(adj);
        if (!ok) {
            out.reason = "vertex link is not a single path or cycle";
            out.witness = {v};
            return out;
        }
        (void)isCycle;
    }
    out.isSurface = true;

    // Connectivity of the whole complex.
    out.connected = connected_components(k).size() == 1;

    // Boundary edges (in exactly one triangle) form disjoint cycles; count them.
    std::map<VertexId, std::vector<VertexId>> bnd;
    long long boundaryEdges = 0;
    for (const auto& [e, n] : edgeTriangles) {
        if (n == 1) {
            ++boundaryEdges;
            bnd[e.first].push_back(e.second);
            bnd[e.second].push_back(e.first);
        }
    }
    out.closed = boundaryEdges == 0;
    if (!out.closed) {
        std::set<VertexId> seen;
        for (const auto& [v, nb] : bnd) {
            if (seen.count(v)) continue;
            ++out.boundaryCycles;
            std::queue<VertexId> q;
            q.push(v);
            seen.insert(v);
            while (!q.empty()) {
                VertexId x = q.front();
                q.pop();
                for (VertexId w : bnd.at(x))
                    if (seen.insert(w).second) q.push(w);
            }
        }
    }

    out.chi = static_cast<long long>(k.vertex_count()) -
              static_cast<long long>(edgeTriangles.size()) + static_cast<long long>(tris.size());
    return out;
}

SurfaceClass classify_surface(const ColouredComplex& k) {
    SurfaceAnalysis a = analyze_surface(k);
    if (!a.isSurface) throw ValidationError("not a surface: " + a.reason);
    if (!a.connected) throw ValidationError("not a surface: not connected");
    if (!a.closed) throw ValidationError("not a closed surface: boundary edges present");
    if (!is_orientable(k)) throw ValidationError("surface is not orientable");
    // chi = 2 - 2g for connected closed orientable surfaces.
    if (a.chi > 2 || (a.chi % 2) != 0)
        throw ValidationError("inconsistent Euler characteristic for a closed surface");
    SurfaceClass c;
    c.closed = true;
    c.genus = static_cast<int>((2 - a.chi) / 2);
    return c;
}

bool is_orientable(const ColouredComplex& k) {
    if (k.empty()) return true;
    const auto& top = k.maximal_simplices();

    // facet -> list of (simplex index, dropped position)
    std::map<Simplex, std::vector<std::pair<std::size_t, int>>> facets;
    for (std::size_t si = 0; si < top.size(); ++si) {
        const auto& s = top[si];
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            Simplex f;
            f.reserve(s.size() - 1);
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) f.push_back(s[i]);
            facets[f].emplace_back(si, static_cast<int>(drop));
        }
    }
    for (const auto& [f, inc] : facets)
        if (inc.size() > 2) throw ValidationError("facet lies in more than two maximal simplices");

    // Orientation of a sorted simplex = +-1; the induced orientation on the
    // facet dropping position i carries sign (-1)^i. Coherence demands the two
    // induced orientations of an interior facet be opposite.
    std::vector<int> orient(top.size(), 0);
    for (std::size_t seed = 0; seed < top.size(); ++seed) {
        if (orient[seed] != 0) continue;
        orient[seed] = 1;
        std::queue<std::size_t> q;
        q.push(seed);
        while (!q.empty()) {
            std::size_t si = q.front();
            q.pop();
            const auto& s = top[si];
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                Simplex f;
                f.reserve(s.size() - 1);
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop) f.push_back(s[i]);
                const auto& inc = facets[f];
                if (inc.size() != 2) continue;
                for (const auto& [sj, dropJ] : inc) {
                    if (sj == si) continue;
                    int sign = ((static_cast<int>(drop) + dropJ) % 2 == 0) ? -1 : 1;
                    int want = sign * orient[si];
                    if (orient[sj] == 0) {
                        orient[sj] = want;
                        q.push(sj);
                    } else if (orient[sj] != want) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

}  // namespace ct
