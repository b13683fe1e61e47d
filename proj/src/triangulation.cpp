#include "ct/triangulation.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ct/errors.hpp"

namespace ct {

long long CausalTriangulation::volume() const {
    long long v = 0;
    for (const CausalSlice& s : slices) v += s.volume();
    return v;
}

namespace {

// Checks that `iso` maps the vertex set of `from` bijectively onto the vertex
// set of `to` and carries the maximal simplex set exactly (colours ignored).
void verify_interface(const ColouredComplex& from, const ColouredComplex& to,
                      const std::map<VertexId, VertexId>& iso, std::size_t at) {
    const std::string where = "interface " + std::to_string(at) + ": ";
    if (iso.size() != from.vertex_count())
        throw ValidationError(where + "iso does not cover the blue boundary vertex set");
    std::set<VertexId> image;
    for (const auto& [a, b] : iso) {
        if (!from.has_vertex(a))
            throw ValidationError(where + "iso maps a vertex outside the blue boundary");
        if (!to.has_vertex(b))
            throw ValidationError(where + "iso image vertex outside the red boundary");
        image.insert(b);
    }
    if (image.size() != to.vertex_count())
        throw ValidationError(where + "iso is not a bijection onto the red boundary vertices");
    const ColouredComplex mapped =
        from.relabelled([&](VertexId v) { return iso.at(v); });
    if (mapped.maximal_simplices() != to.maximal_simplices())
        throw ValidationError(where + "iso does not carry the simplex set onto the red boundary");
}

}  // namespace

CausalTriangulation stack_slices(std::vector<CausalSlice> slices,
                                 std::vector<std::map<VertexId, VertexId>> isos) {
    if (slices.empty()) throw ValidationError("a triangulation needs at least one slice");
    if (isos.size() + 1 != slices.size())
        throw ValidationError("expected one interface iso per consecutive slice pair");
    for (std::size_t i = 0; i + 1 < slices.size(); ++i) {
        if (slices[i].complex.dim() != slices[i + 1].complex.dim())
            throw ValidationError("slices of mixed dimension");
        verify_interface(slices[i].blueBoundary, slices[i + 1].redBoundary, isos[i], i);
    }
    return CausalTriangulation{std::move(slices), std::move(isos)};
}

CausalTriangulation stack_auto(std::vector<CausalSlice> slices) {
    std::vector<std::map<VertexId, VertexId>> isos;
    for (std::size_t i = 0; i + 1 < slices.size(); ++i) {
        auto iso = find_isomorphism(slices[i].blueBoundary, slices[i + 1].redBoundary,
                                    ColourMode::Ignore);
        if (!iso)
            throw ValidationError("consecutive boundaries are not isomorphic (interface " +
                                  std::to_string(i) + ")");
        isos.push_back(std::move(*iso));
    }
    return stack_slices(std::move(slices), std::move(isos));
}

LeveledComplex glued_complex(const CausalTriangulation& t) {
    // Fresh ids: slice i vertex v -> i * stride + v, then union-find across
    // interfaces, then compress to dense ids.
    VertexId stride = 1;
    for (const CausalSlice& s : t.slices)
        for (VertexId v : s.complex.vertices()) stride = std::max(stride, v + 1);

    const auto fresh = [stride](std::size_t slice, VertexId v) {
        return static_cast<VertexId>(static_cast<VertexId>(slice) * stride + v);
    };

    std::map<VertexId, VertexId> parent;
    auto root = [&](VertexId v) {
        while (true) {
            auto it = parent.find(v);
            if (it == parent.end() || it->second == v) return v;
            v = it->second;
        }
    };
    for (std::size_t i = 0; i < t.interfaceIsos.size(); ++i)
        for (const auto& [b, r] : t.interfaceIsos[i]) {
            VertexId a = root(fresh(i, b)), c = root(fresh(i + 1, r));
            if (a != c) parent[std::max(a, c)] = std::min(a, c);
        }

    LeveledComplex out;
    out.dim = t.slices.front().complex.dim();
    out.levels = static_cast<int>(t.slices.size());
    std::set<Simplex> maximal;
    for (std::size_t i = 0; i < t.slices.size(); ++i) {
        const CausalSlice& s = t.slices[i];
        for (VertexId v : s.complex.vertices()) {
            const VertexId id = root(fresh(i, v));
            const int lvl = static_cast<int>(i) + (s.complex.colour(v) == Colour::Red ? 0 : 1);
            auto [it, inserted] = out.level.insert({id, lvl});
            if (!inserted && it->second != lvl)
                throw ValidationError("interface vertex with inconsistent level");
        }
        for (const Simplex& m : s.complex.maximal_simplices()) {
            Simplex g;
            for (VertexId v : m) g.push_back(root(fresh(i, v)));
            std::sort(g.begin(), g.end());
            if (!maximal.insert(std::move(g)).second)
                throw ValidationError("gluing identified two top simplices");
        }
    }
    out.maximal.assign(maximal.begin(), maximal.end());
    if (static_cast<long long>(out.maximal.size()) != t.volume())
        throw ValidationError("glued volume differs from the sum of slice volumes");
    return out;
}

CanonicalForm canonical_form(const CausalTriangulation& t) {
    const LeveledComplex g = glued_complex(t);
    CanonGraph graph;
    std::map<VertexId, int> node;
    for (const auto& [v, lvl] : g.level) node[v] = graph.add_node(lvl);
    for (const Simplex& s : g.maximal) {
        const int sn = graph.add_node(g.levels + 1);
        for (VertexId v : s) graph.add_edge(sn, node.at(v));
    }
    return "CTRI:" + std::to_string(g.dim) + ":" + std::to_string(g.levels) + ":" +
           canonical_labelling(graph).form;
}

CausalTriangulation glue_stacks(const CausalTriangulation& t1, const CausalTriangulation& t0,
                                const CausalTriangulation& t2,
                                std::optional<std::map<VertexId, VertexId>> iso10,
                                std::optional<std::map<VertexId, VertexId>> iso02) {
    if (!iso10)
        iso10 = find_isomorphism(t1.sigma_out(), t0.sigma_in(), ColourMode::Ignore);
    if (!iso10) throw ValidationError("boundaries of the first and middle stacks incompatible");
    if (!iso02)
        iso02 = find_isomorphism(t0.sigma_out(), t2.sigma_in(), ColourMode::Ignore);
    if (!iso02) throw ValidationError("boundaries of the middle and last stacks incompatible");

    std::vector<CausalSlice> slices = t1.slices;
    std::vector<std::map<VertexId, VertexId>> isos = t1.interfaceIsos;
    isos.push_back(std::move(*iso10));
    slices.insert(slices.end(), t0.slices.begin(), t0.slices.end());
    isos.insert(isos.end(), t0.interfaceIsos.begin(), t0.interfaceIsos.end());
    isos.push_back(std::move(*iso02));
    slices.insert(slices.end(), t2.slices.begin(), t2.slices.end());
    isos.insert(isos.end(), t2.interfaceIsos.begin(), t2.interfaceIsos.end());
    return stack_slices(std::move(slices), std::move(isos));
}

std::vector<CausalTriangulation> split_stack(const CausalTriangulation& t, int n1, int n0) {
    const int n = static_cast<int>(t.slices.size());
    if (n1 < 1 || n0 < 1 || n1 + n0 >= n)
        throw ValidationError("split positions do not leave three non-empty stacks");
    auto block = [&](int from, int count) {
        std::vector<CausalSlice> slices(t.slices.begin() + from,
                                        t.slices.begin() + from + count);
        std::vector<std::map<VertexId, VertexId>> isos(
            t.interfaceIsos.begin() + from, t.interfaceIsos.begin() + from + count - 1);
        return stack_slices(std::move(slices), std::move(isos));
    };
    return {block(0, n1), block(n1, n0), block(n1 + n0, n - n1 - n0)};
}

}  // namespace ct
