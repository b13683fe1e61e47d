#include "ct/edge_coloured.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ct/errors.hpp"

namespace ct {

namespace {

std::set<std::pair<VertexId, VertexId>> closure_edges(const std::vector<Simplex>& maximal) {
    std::set<std::pair<VertexId, VertexId>> out;
    for (const Simplex& s : maximal)
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j) out.insert({s[i], s[j]});
    return out;
}

}  // namespace

EdgeColouredComplex EdgeColouredComplex::build(
    int dim, std::vector<VertexId> vertices, std::vector<Simplex> maximal,
    std::map<std::pair<VertexId, VertexId>, EdgeColour> colours) {
    if (dim < 1) throw ValidationError("edge-coloured complex dimension must be at least 1");
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw ValidationError("duplicate vertex id");
    const std::set<VertexId> declared(vertices.begin(), vertices.end());
    for (Simplex& s : maximal) {
        std::sort(s.begin(), s.end());
        if (static_cast<int>(s.size()) != dim + 1)
            throw ValidationError("maximal simplex arity does not match dimension");
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw ValidationError("repeated vertex in simplex");
        for (VertexId v : s)
            if (!declared.count(v)) throw ValidationError("simplex uses undeclared vertex");
    }
    std::sort(maximal.begin(), maximal.end());
    maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
    if (maximal.empty()) throw ValidationError("edge-coloured complex has no maximal simplices");

    std::set<VertexId> used;
    for (const Simplex& s : maximal) used.insert(s.begin(), s.end());
    if (used != declared) throw ValidationError("declared vertex not used by any simplex");

    const auto edges = closure_edges(maximal);
    for (const auto& [e, c] : colours) {
        (void)c;
        if (e.first >= e.second) throw ValidationError("edge colour key is not an ascending pair");
        if (!edges.count(e)) throw ValidationError("colour assigned to a non-edge");
    }
    for (const auto& e : edges)
        if (!colours.count(e))
            throw ValidationError("edge (" + std::to_string(e.first) + "," +
                                  std::to_string(e.second) + ") has no colour");

    EdgeColouredComplex k;
    k.dim = dim;
    k.vertices = std::move(vertices);
    k.maximal = std::move(maximal);
    k.colours = std::move(colours);
    return k;
}

EdgeColour EdgeColouredComplex::colour(VertexId a, VertexId b) const {
    if (a > b) std::swap(a, b);
    auto it = colours.find({a, b});
    if (it == colours.end()) throw ValidationError("colour queried for a non-edge");
    return it->second;
}

long long EdgeColouredComplex::count_edges(EdgeColour c) const {
    long long n = 0;
    for (const auto& [e, ec] : colours) {
        (void)e;
        if (ec == c) ++n;
    }
    return n;
}

CanonicalForm canonical_form(const EdgeColouredComplex& k) {
    // Node classes: 0 vertices, 1/2/3 edges by colour, 4 maximal simplices.
    // Edge nodes attach to their endpoints; simplex nodes attach to their
    // vertex nodes (a simplex is determined by its vertex set).
    CanonGraph g;
    std::map<VertexId, int> vnode;
    for (VertexId v : k.vertices) vnode[v] = g.add_node(0);
    for (const auto& [e, c] : k.colours) {
        int cls = c == EdgeColour::Red ? 1 : (c == EdgeColour::Blue ? 2 : 3);
        int en = g.add_node(cls);
        g.add_edge(en, vnode.at(e.first));
        g.add_edge(en, vnode.at(e.second));
    }
    for (const Simplex& s : k.maximal) {
        int sn = g.add_node(4);
        for (VertexId v : s) g.add_edge(sn, vnode.at(v));
    }
    return "ECPX:" + std::to_string(k.dim) + ":" + canonical_labelling(g).form;
}

}  // namespace ct
