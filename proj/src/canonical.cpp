#include "ct/canonical.hpp"

#include <algorithm>
#include <set>

namespace ct {

namespace {

using Cells = std::vector<std::vector<int>>;

void refine(const CanonGraph& g, Cells& cells) {
    bool changed = true;
    std::vector<int> cellOf(static_cast<std::size_t>(g.n));
    while (changed) {
        changed = false;
        for (std::size_t ci = 0; ci < cells.size(); ++ci)
            for (int v : cells[ci]) cellOf[static_cast<std::size_t>(v)] = static_cast<int>(ci);
        Cells next;
        next.reserve(cells.size());
        for (auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(std::move(cell));
                continue;
            }
            std::map<std::vector<int>, std::vector<int>> groups;
            for (int v : cell) {
                std::vector<int> sig;
                sig.reserve(g.adj[static_cast<std::size_t>(v)].size());
                for (int w : g.adj[static_cast<std::size_t>(v)])
                    sig.push_back(cellOf[static_cast<std::size_t>(w)]);
                std::sort(sig.begin(), sig.end());
                groups[std::move(sig)].push_back(v);
            }
            if (groups.size() > 1) changed = true;
            for (auto& [sig, vs] : groups) next.push_back(std::move(vs));
        }
        cells = std::move(next);
    }
}

std::string leaf_encoding(const CanonGraph& g, const Cells& cells, std::vector<int>* labellingOut) {
    std::vector<int> nodeAt(static_cast<std::size_t>(g.n));
    std::vector<int> pos(static_cast<std::size_t>(g.n));
    for (std::size_t p = 0; p < cells.size(); ++p) {
        nodeAt[p] = cells[p][0];
        pos[static_cast<std::size_t>(cells[p][0])] = static_cast<int>(p);
    }
    std::string out;
    out.reserve(static_cast<std::size_t>(g.n) * 8);
    out += std::to_string(g.n);
    out += ';';
    for (int p = 0; p < g.n; ++p) {
        out += std::to_string(g.klass[static_cast<std::size_t>(nodeAt[static_cast<std::size_t>(p)])]);
        out += ',';
    }
    out += '|';
    for (int p = 0; p < g.n; ++p) {
        std::vector<int> row;
        for (int w : g.adj[static_cast<std::size_t>(nodeAt[static_cast<std::size_t>(p)])])
            row.push_back(pos[static_cast<std::size_t>(w)]);
        std::sort(row.begin(), row.end());
        for (int x : row) {
            out += std::to_string(x);
            out += ',';
        }
        out += ';';
    }
    if (labellingOut) *labellingOut = std::move(pos);
    return out;
}

struct Best {
    bool set = false;
    std::string form;
    std::vector<int> labelling;
};

void search(const CanonGraph& g, Cells cells, Best& best) {
    refine(g, cells);
    int target = -1;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].size() > 1) {
            target = static_cast<int>(i);
            break;
        }
    }
    if (target < 0) {
        std::vector<int> labelling;
        std::string form = leaf_encoding(g, cells, &labelling);
        if (!best.set || form < best.form) {
            best.set = true;
            best.form = std::move(form);
            best.labelling = std::move(labelling);
        }
        return;
    }
    std::vector<int> cell = cells[static_cast<std::size_t>(target)];
    std::sort(cell.begin(), cell.end());
    for (int x : cell) {
        Cells branch = cells;
        branch[static_cast<std::size_t>(target)] = {x};
        std::vector<int> rest;
        rest.reserve(cell.size() - 1);
        for (int y : cell)
            if (y != x) rest.push_back(y);
        branch.insert(branch.begin() + target + 1, std::move(rest));
        search(g, std::move(branch), best);
    }
}

}  // namespace

CanonResult canonical_labelling(const CanonGraph& g) {
    if (g.n == 0) return {std::string("0;|"), {}};
    // Initial cells grouped and ordered by class value.
    std::map<int, std::vector<int>> byClass;
    for (int v = 0; v < g.n; ++v) byClass[g.klass[static_cast<std::size_t>(v)]].push_back(v);
    Cells cells;
    cells.reserve(byClass.size());
    for (auto& [k, vs] : byClass) cells.push_back(std::move(vs));
    Best best;
    search(g, std::move(cells), best);
    return {std::move(best.form), std::move(best.labelling)};
}

namespace {

constexpr int kSimplexNodeClass = 100;

CanonGraph encode_complex(const ColouredComplex& k, ColourMode mode,
                          std::vector<VertexId>* nodeVertex) {
    CanonGraph g;
    const auto& verts = k.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i) {
        int cls = mode == ColourMode::Respect ? (k.colour(verts[i]) == Colour::Red ? 0 : 1) : 0;
        g.add_node(cls);
    }
    auto vertexNode = [&](VertexId v) {
        return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    for (const auto& s : k.maximal_simplices()) {
        int sn = g.add_node(kSimplexNodeClass);
        for (VertexId v : s) g.add_edge(sn, vertexNode(v));
    }
    if (nodeVertex) *nodeVertex = verts;
    return g;
}

}  // namespace

ComplexCanon canonical_complex(const ColouredComplex& k, ColourMode mode) {
    std::vector<VertexId> verts;
    CanonGraph g = encode_complex(k, mode, &verts);
    CanonResult res = canonical_labelling(g);
    ComplexCanon out;
    out.form = (mode == ColourMode::Respect ? "CPLX:" : "CPLXU:") + std::to_string(k.dim()) + ":" +
               res.form;
    for (std::size_t i = 0; i < verts.size(); ++i) out.vertexLabel[verts[i]] = res.labelling[i];
    return out;
}

CanonicalForm canonical_form(const ColouredComplex& k, ColourMode mode) {
    return canonical_complex(k, mode).form;
}

std::optional<std::map<VertexId, VertexId>> find_isomorphism(const ColouredComplex& a,
                                                             const ColouredComplex& b,
                                                             ColourMode mode) {
    ComplexCanon ca = canonical_complex(a, mode);
    ComplexCanon cb = canonical_complex(b, mode);
    if (ca.form != cb.form) return std::nullopt;
    std::map<int, VertexId> posToB;
    for (const auto& [v, p] : cb.vertexLabel) posToB[p] = v;
    std::map<VertexId, VertexId> iso;
    for (const auto& [v, p] : ca.vertexLabel) iso[v] = posToB.at(p);
    return iso;
}

std::vector<std::map<VertexId, VertexId>> all_isomorphisms(const ColouredComplex& a,
                                                           const ColouredComplex& b,
                                                           ColourMode mode) {
    std::vector<std::map<VertexId, VertexId>> out;
    if (a.dim() != b.dim() || a.vertex_count() != b.vertex_count() ||
        a.maximal_simplices().size() != b.maximal_simplices().size())
        return out;

    const auto& av = a.vertices();
    const auto& bv = b.vertices();
    auto degree = [](const ColouredComplex& k, VertexId v) {
        int d = 0;
        for (const auto& s : k.maximal_simplices())
            if (std::binary_search(s.begin(), s.end(), v)) ++d;
        return d;
    };
    std::map<VertexId, int> degA, degB;
    for (VertexId v : av) degA[v] = degree(a, v);
    for (VertexId v : bv) degB[v] = degree(b, v);

    std::set<Simplex> bSimp(b.maximal_simplices().begin(), b.maximal_simplices().end());

    // Map A-vertices in a fixed order; check any fully-mapped simplex.
    std::vector<VertexId> order(av.begin(), av.end());
    std::map<VertexId, VertexId> cur;
    std::set<VertexId> used;

    // Simplices of A indexed by the position of their last-mapped vertex.
    std::map<VertexId, int> posOf;
    for (std::size_t i = 0; i < order.size(); ++i) posOf[order[i]] = static_cast<int>(i);
    std::vector<std::vector<Simplex>> dueAt(order.size());
    for (const auto& s : a.maximal_simplices()) {
        int last = 0;
        for (VertexId v : s) last = std::max(last, posOf[v]);
        dueAt[static_cast<std::size_t>(last)].push_back(s);
    }

    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == order.size()) {
            out.push_back(cur);
            return;
        }
        VertexId va = order[i];
        for (VertexId vb : bv) {
            if (used.count(vb)) continue;
            if (degA[va] != degB[vb]) continue;
            if (mode == ColourMode::Respect && a.colour(va) != b.colour(vb)) continue;
            cur[va] = vb;
            used.insert(vb);
            bool ok = true;
            for (const auto& s : dueAt[i]) {
                Simplex img;
                img.reserve(s.size());
                for (VertexId v : s) img.push_back(cur[v]);
                std::sort(img.begin(), img.end());
                if (!bSimp.count(img)) {
                    ok = false;
                    break;
                }
            }
            if (ok) rec(i + 1);
            used.erase(vb);
            cur.erase(va);
        }
    };
    rec(0);
    return out;
}

}  // namespace ct
