#include "ct/builders.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ct/errors.hpp"
#include "ct/manifold.hpp"
#include "ct/surface.hpp"

namespace ct {

namespace {

VertexId max_id(const ColouredComplex& sigma) {
    VertexId m = 0;
    for (VertexId v : sigma.vertices()) {
        if (v < 0) throw ValidationError("builder inputs must use non-negative vertex ids");
        m = std::max(m, v);
    }
    return m;
}

}  // namespace

CausalSlice prism_slice(const ColouredComplex& sigma, const std::vector<VertexId>& vertexOrder) {
    const int d = sigma.dim();
    if (d != 2 && d != 3)
        throw ValidationError("prism_slice expects a 2- or 3-dimensional complex");
    if (d == 2) {
        classify_surface(sigma);  // closed connected surface
    } else {
        const ManifoldReport mr = check_manifold_3d(sigma);
        if (!mr.pass) throw ValidationError("prism base is not a 3-manifold: " + mr.reason);
        if (!boundary(sigma).empty()) throw ValidationError("prism base must be closed");
        if (connected_components(sigma).size() != 1)
            throw ValidationError("prism base must be connected");
        if (!is_orientable(sigma)) throw ValidationError("prism base must be orientable");
    }

    std::map<VertexId, int> rank;
    if (vertexOrder.empty()) {
        int i = 0;
        for (VertexId v : sigma.vertices()) rank[v] = i++;
    } else {
        int i = 0;
        for (VertexId v : vertexOrder) {
            if (!sigma.has_vertex(v))
                throw ValidationError("vertex order mentions unknown vertex " + std::to_string(v));
            if (!rank.emplace(v, i++).second)
                throw ValidationError("vertex order repeats vertex " + std::to_string(v));
        }
        if (rank.size() != sigma.vertices().size())
            throw ValidationError("vertex order does not cover every surface vertex");
    }

    const VertexId off = max_id(sigma) + 1;
    std::vector<std::pair<VertexId, Colour>> colours;
    for (VertexId v : sigma.vertices()) {
        colours.emplace_back(v, Colour::Red);
        colours.emplace_back(v + off, Colour::Blue);
    }

    // Staircase over each facet {v0 < .. < v_d} (in rank order): the i-th
    // prism simplex keeps v0..v_i and lifts the rest, {v0..v_i, v_i'..v_d'}.
    std::vector<Simplex> cells;
    for (const auto& t : sigma.maximal_simplices()) {
        Simplex s = t;
        std::sort(s.begin(), s.end(),
                  [&](VertexId x, VertexId y) { return rank.at(x) < rank.at(y); });
        for (int i = 0; i <= d; ++i) {
            Simplex cell;
            for (int k = 0; k <= i; ++k) cell.push_back(s[static_cast<std::size_t>(k)]);
            for (int k = i; k <= d; ++k) cell.push_back(s[static_cast<std::size_t>(k)] + off);
            cells.push_back(std::move(cell));
        }
    }

    return validate_slice(ColouredComplex::build(d + 1, colours, cells));
}

CausalSlice lemma3_slice(const ColouredComplex& sigma) {
    if (sigma.dim() != 2) throw ValidationError("lemma3_slice expects a 2-dimensional complex");
    SurfaceClass sc = classify_surface(sigma);
    if (sc.genus != 0)
        throw ValidationError("lemma3_slice requires a sphere, got genus " +
                              std::to_string(sc.genus));

    std::map<VertexId, std::set<VertexId>> nbr;
    for (const auto& e : sigma.simplices(1)) {
        nbr[e[0]].insert(e[1]);
        nbr[e[1]].insert(e[0]);
    }
    VertexId apex = -1;
    for (VertexId v : sigma.vertices())
        if (nbr.at(v).size() == 3) {
            apex = v;
            break;
        }
    if (apex < 0) throw ValidationError("surface has no vertex of degree 3");

    std::vector<VertexId> n(nbr.at(apex).begin(), nbr.at(apex).end());
    const VertexId v0 = apex, n1 = n[0], n2 = n[1], n3 = n[2];
    const VertexId m = max_id(sigma);
    const VertexId a = m + 1, b = m + 2, c = m + 3, d = m + 4;

    std::vector<std::pair<VertexId, Colour>> colours;
    for (VertexId v : sigma.vertices()) colours.emplace_back(v, Colour::Red);
    for (VertexId v : {a, b, c, d}) colours.emplace_back(v, Colour::Blue);

    std::vector<Simplex> tets;
    for (const auto& t : sigma.maximal_simplices()) {
        if (std::find(t.begin(), t.end(), v0) != t.end()) continue;
        Simplex s = t;
        s.push_back(a);
        tets.push_back(std::move(s));
    }
    // Core closing up the removed star: three tetrahedra over its triangles,
    // four with blue triangles forming the outgoing boundary, six of mixed
    // type (2,2) in between.
    tets.push_back({b, v0, n2, n3});
    tets.push_back({c, v0, n1, n3});
    tets.push_back({d, v0, n1, n2});
    tets.push_back({a, c, d, n1});
    tets.push_back({a, b, d, n2});
    tets.push_back({a, b, c, n3});
    tets.push_back({b, c, d, v0});
    tets.push_back({c, d, v0, n1});
    tets.push_back({b, d, v0, n2});
    tets.push_back({b, c, v0, n3});
    tets.push_back({a, c, n1, n3});
    tets.push_back({a, d, n1, n2});
    tets.push_back({a, b, n2, n3});

    return validate_slice(ColouredComplex::build(3, colours, tets));
}

}  // namespace ct
