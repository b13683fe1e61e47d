#include "ct/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ct/canonical.hpp"
#include "ct/errors.hpp"
#include "ct/midsection.hpp"
#include "ct/reconstruct.hpp"
#include "ct/surface.hpp"
#include "ct/triangulation.hpp"

namespace ct {

namespace {

// ---------------------------------------------------------------------------
// Direct strategy: grow coloured 3-complexes one tetrahedron at a time at the
// lexicographically least open mixed triangle. Dedup is by canonical form, so
// each isomorphism class of partial complexes is expanded once per partition.

// feasible(V, #(3,1), #(1,3)) -> keep the partial? Must be antitone: once
// false it stays false along any extension (all three arguments only grow).
using Budget = std::function<bool(int, int, int)>;

struct PartialStats {
    std::map<Simplex, int> faceCount;  // triangle -> number of incident tets
    int redTets = 0;                   // #(3,1)
    int blueTets = 0;                  // #(1,3)
};

bool is_mixed(const ColouredComplex& k, const Simplex& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (k.colour(s[i]) != k.colour(s[0])) return true;
    return false;
}

PartialStats partial_stats(const ColouredComplex& k) {
    PartialStats st;
    for (const Simplex& t : k.maximal_simplices()) {
        int reds = 0;
        for (VertexId v : t) reds += k.colour(v) == Colour::Red ? 1 : 0;
        if (reds == 3) ++st.redTets;
        if (reds == 1) ++st.blueTets;
        for (std::size_t i = 0; i < t.size(); ++i) {
            Simplex f;
            for (std::size_t j = 0; j < t.size(); ++j)
                if (j != i) f.push_back(t[j]);
            ++st.faceCount[f];
        }
    }
    return st;
}

// A partial complex is kept only when no state below can still reach a valid
// slice. Each rejected condition is permanent along extensions:
//  * a triangle in three tetrahedra stays overfull;
//  * a mono-coloured triangle in two tetrahedra stays interior;
//  * a mono-coloured edge whose triangles are all paired has a closed fan, so
//    it stays interior (a third tetrahedron would overfill a triangle);
//  * open mono triangles are final boundary faces, so a mono edge carrying
//    three of them can never lie in a surface;
//  * a vertex with no open triangle has a closed link and stays interior;
//  * covering the open mixed triangles needs at least ceil(open/4) more
//    tetrahedra (one covers its base plus at most three others);
//  * the caller's budget is antitone in (V, #(3,1), #(1,3)).
bool admissible_partial(const ColouredComplex& k, const PartialStats& st, int vmax,
                        const Budget& feasible) {
    const int volume = static_cast<int>(k.maximal_simplices().size());
    if (volume > vmax) return false;
    if (!feasible(volume, st.redTets, st.blueTets)) return false;

    std::map<VertexId, bool> vertexOpen;
    for (VertexId v : k.vertices()) vertexOpen[v] = false;
    std::set<std::pair<VertexId, VertexId>> edgeOpen;
    std::map<std::pair<VertexId, VertexId>, int> monoFaces;
    int openMixed = 0;
    for (const auto& [f, c] : st.faceCount) {
        if (c > 2) return false;
        const bool mixed = is_mixed(k, f);
        if (c == 2 && !mixed) return false;
        if (c == 1) {
            if (mixed) ++openMixed;
            for (VertexId v : f) vertexOpen[v] = true;
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = i + 1; j < 3; ++j) {
                    edgeOpen.insert({f[i], f[j]});
                    if (!mixed && ++monoFaces[{f[i], f[j]}] > 2) return false;
                }
        }
    }
    if (volume + (openMixed + 3) / 4 > vmax) return false;
    for (const auto& [v, open] : vertexOpen)
        if (!open) return false;
    for (const Simplex& e : k.simplices(1))
        if (k.colour(e[0]) == k.colour(e[1]) && !edgeOpen.count({e[0], e[1]}))
            return false;
    return true;
}

std::optional<Simplex> least_open_mixed(const ColouredComplex& k, const PartialStats& st) {
    for (const auto& [f, c] : st.faceCount)
        if (c == 1 && is_mixed(k, f)) return f;
    return std::nullopt;
}

// Every way to cover `tri` with one more tetrahedron: a fresh vertex of either
// colour, or any existing vertex not already forming this tetrahedron.
std::vector<ColouredComplex> extensions_at(const ColouredComplex& k, const Simplex& tri) {
    std::vector<std::pair<VertexId, Colour>> colours;
    for (VertexId v : k.vertices()) colours.emplace_back(v, k.colour(v));
    const std::vector<Simplex>& tets = k.maximal_simplices();

    std::vector<ColouredComplex> out;
    auto with_vertex = [&](VertexId x, std::optional<Colour> fresh) {
        Simplex t = tri;
        t.push_back(x);
        std::sort(t.begin(), t.end());
        if (k.has_simplex(t)) return;
        auto cs = colours;
        if (fresh) cs.emplace_back(x, *fresh);
        std::vector<Simplex> ts = tets;
        ts.push_back(t);
        out.push_back(ColouredComplex::build(3, std::move(cs), std::move(ts)));
    };

    const VertexId fresh = k.vertices().back() + 1;
    with_vertex(fresh, Colour::Red);
    with_vertex(fresh, Colour::Blue);
    for (VertexId x : k.vertices())
        if (std::find(tri.begin(), tri.end(), x) == tri.end()) with_vertex(x, std::nullopt);
    return out;
}

struct SliceSearchState {
    int vmax = 0;
    long long cap = 0;
    const Budget* feasible = nullptr;
    std::atomic<long long> explored{0};
    std::atomic<bool> blown{false};
    std::mutex mu;
    std::map<CanonicalForm, CausalSlice> found;
};

void slice_branch(SliceSearchState& sh, std::vector<ColouredComplex> work,
                  std::set<CanonicalForm> seen) {
    while (!work.empty()) {
        if (sh.blown.load()) return;
        ColouredComplex k = std::move(work.back());
        work.pop_back();
        if (sh.explored.fetch_add(1) + 1 > sh.cap) {
            sh.blown.store(true);
            return;
        }
        const PartialStats st = partial_stats(k);
        const std::optional<Simplex> tri = least_open_mixed(k, st);
        if (!tri) {
            // No open mixed triangle: the complex is final (extensions attach
            // only there). Keep it when it certifies as a slice.
            try {
                CausalSlice s = validate_slice(k);
                CanonicalForm form = canonical_form(k);
                const std::lock_guard<std::mutex> lock(sh.mu);
                sh.found.emplace(std::move(form), std::move(s));
            } catch (const ValidationError&) {
            }
            continue;
        }
        for (ColouredComplex& next : extensions_at(k, *tri)) {
            const PartialStats nst = partial_stats(next);
            if (!admissible_partial(next, nst, sh.vmax, *sh.feasible)) continue;
            if (seen.insert(canonical_form(next)).second) work.push_back(std::move(next));
        }
    }
}

// All completions (valid slices, any genus) of volume <= vmax within budget.
std::map<CanonicalForm, CausalSlice> slice_search(int vmax, const CensusOptions& opt,
                                                  const Budget& feasible) {
    if (vmax < 0) throw ValidationError("census: negative volume bound");
    SliceSearchState sh;
    sh.vmax = vmax;
    sh.cap = opt.stateCap;
    sh.feasible = &feasible;

    std::vector<ColouredComplex> roots;
    std::set<CanonicalForm> seen;
    for (int reds = 3; reds >= 1; --reds) {
        std::vector<std::pair<VertexId, Colour>> cs;
        for (VertexId v = 0; v < 4; ++v)
            cs.emplace_back(v, v < reds ? Colour::Red : Colour::Blue);
        ColouredComplex root = ColouredComplex::build(3, std::move(cs), {{0, 1, 2, 3}});
        const PartialStats st = partial_stats(root);
        if (!admissible_partial(root, st, vmax, feasible)) continue;
        if (seen.insert(canonical_form(root)).second) roots.push_back(std::move(root));
    }

    const int jobs = std::max(1, opt.jobs);
    if (jobs == 1 || roots.empty()) {
        slice_branch(sh, std::move(roots), std::move(seen));
    } else {
        // Partition the depth-1 frontier. Every branch's seen-set holds the
        // whole frontier, so states reachable only through a foreign seed are
        // left to that seed's owner; completions merge under the lock.
        std::vector<ColouredComplex> level1;
        for (const ColouredComplex& r : roots) {
            const PartialStats st = partial_stats(r);
            const std::optional<Simplex> tri = least_open_mixed(r, st);
            if (!tri) continue;  // single tetrahedra always have open mixed triangles
            for (ColouredComplex& next : extensions_at(r, *tri)) {
                const PartialStats nst = partial_stats(next);
                if (!admissible_partial(next, nst, vmax, feasible)) continue;
                if (seen.insert(canonical_form(next)).second) level1.push_back(std::move(next));
            }
        }
        sh.explored.fetch_add(static_cast<long long>(roots.size()));
        std::vector<std::vector<ColouredComplex>> parts(static_cast<std::size_t>(jobs));
        for (std::size_t i = 0; i < level1.size(); ++i)
            parts[i % static_cast<std::size_t>(jobs)].push_back(std::move(level1[i]));
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back([&sh, seen, part = std::move(parts[static_cast<std::size_t>(j)])]() mutable {
                slice_branch(sh, std::move(part), std::move(seen));
            });
        for (std::thread& th : pool) th.join();
    }
    if (sh.blown.load()) throw ResourceCapError("slice census exceeded the state cap");
    return std::move(sh.found);
}

std::map<int, long long> zero_counts(int vmax) {
    std::map<int, long long> c;
    for (int v = 1; v <= vmax; ++v) c[v] = 0;
    return c;
}

// Prunes for partial closed-surface triangulations. Permanent along
// extensions: an edge in three triangles stays overfull; once some component
// of a vertex link closes into a cycle while another exists, the final link
// cannot be a single cycle (closed-cycle edges are saturated); and covering
// the open edges needs at least ceil(open/3) more triangles.
bool sphere_admissible(const ColouredComplex& k, int maxTriangles) {
    const std::vector<Simplex>& tris = k.maximal_simplices();
    std::map<std::pair<VertexId, VertexId>, int> edgeCount;
    for (const Simplex& t : tris) {
        if (++edgeCount[{t[0], t[1]}] > 2) return false;
        if (++edgeCount[{t[0], t[2]}] > 2) return false;
        if (++edgeCount[{t[1], t[2]}] > 2) return false;
    }
    int open = 0;
    for (const auto& [e, c] : edgeCount) open += c == 1 ? 1 : 0;
    if (static_cast<int>(tris.size()) + (open + 2) / 3 > maxTriangles) return false;

    std::map<VertexId, std::map<VertexId, int>> link;  // v -> link-vertex -> degree
    std::map<VertexId, std::map<VertexId, VertexId>> parent;
    std::function<VertexId(std::map<VertexId, VertexId>&, VertexId)> find =
        [&find](std::map<VertexId, VertexId>& par, VertexId x) {
            while (par[x] != x) x = par[x] = par[par[x]];
            return x;
        };
    for (const Simplex& t : tris)
        for (std::size_t i = 0; i < 3; ++i) {
            const VertexId v = t[i];
            const VertexId a = t[(i + 1) % 3], b = t[(i + 2) % 3];
            ++link[v][a];
            ++link[v][b];
            auto& par = parent[v];
            par.try_emplace(a, a);
            par.try_emplace(b, b);
            par[find(par, a)] = find(par, b);
        }
    for (auto& [v, deg] : link) {
        auto& par = parent[v];
        std::map<VertexId, bool> compClosed;
        for (const auto& [u, d] : deg) {
            const VertexId root = find(par, u);
            auto it = compClosed.try_emplace(root, true).first;
            if (d != 2) it->second = false;
        }
        if (compClosed.size() > 1)
            for (const auto& [root, closed] : compClosed)
                if (closed) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Midsection strategy: enumerate sphere triangulations, colour their edges so
// every triangle is all-red, all-blue or black+red+blue, erase the black
// edges into quadrangles, and keep the complexes that rebuild into a slice
// sectioning back to the same complex.

struct MidsectionSearch {
    int vmax = 0;
    long long cap = 0;
    std::atomic<long long> explored{0};
    std::atomic<bool> blown{false};
    std::atomic<long long> raw{0};
    std::mutex mu;
    std::set<CanonicalForm> seen;
    std::map<int, long long> counts;
    long long filtered = 0;
};

// Edge colours during the search: 0 red, 1 blue, 2 black, -1 unassigned.
constexpr int kRed = 0, kBlue = 1, kBlack = 2;

struct ColouringProblem {
    std::vector<Simplex> tris;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::map<std::pair<VertexId, VertexId>, int> edgeIndex;
    std::vector<std::array<int, 3>> triEdges;    // per triangle, ascending pair order
    std::vector<std::array<int, 2>> trisOfEdge;  // the two triangles of each edge
    std::vector<int> order;                      // edge assignment order
};

ColouringProblem index_sphere(const ColouredComplex& sphere) {
    ColouringProblem p;
    p.tris = sphere.maximal_simplices();
    auto edge_id = [&p](VertexId a, VertexId b) {
        const std::pair<VertexId, VertexId> key{std::min(a, b), std::max(a, b)};
        auto it = p.edgeIndex.find(key);
        if (it != p.edgeIndex.end()) return it->second;
        const int id = static_cast<int>(p.edges.size());
        p.edgeIndex.emplace(key, id);
        p.edges.push_back(key);
        p.trisOfEdge.push_back({-1, -1});
        return id;
    };
    for (std::size_t ti = 0; ti < p.tris.size(); ++ti) {
        const Simplex& t = p.tris[ti];
        const std::array<int, 3> es{edge_id(t[0], t[1]), edge_id(t[0], t[2]),
                                    edge_id(t[1], t[2])};
        p.triEdges.push_back(es);
        for (int e : es) p.trisOfEdge[static_cast<std::size_t>(e)][p.trisOfEdge[static_cast<std::size_t>(e)][0] < 0 ? 0 : 1] = static_cast<int>(ti);
    }
    // Assign edges in breadth-first triangle order so each new triangle closes
    // at most two fresh edges and pattern checks fire early.
    std::vector<int> triOrder;
    std::vector<bool> queued(p.tris.size(), false);
    triOrder.push_back(0);
    queued[0] = true;
    for (std::size_t head = 0; head < triOrder.size(); ++head) {
        for (int e : p.triEdges[static_cast<std::size_t>(triOrder[head])])
            for (int ti : p.trisOfEdge[static_cast<std::size_t>(e)])
                if (!queued[static_cast<std::size_t>(ti)]) {
                    queued[static_cast<std::size_t>(ti)] = true;
                    triOrder.push_back(ti);
                }
    }
    std::vector<bool> placed(p.edges.size(), false);
    for (int ti : triOrder)
        for (int e : p.triEdges[static_cast<std::size_t>(ti)])
            if (!placed[static_cast<std::size_t>(e)]) {
                placed[static_cast<std::size_t>(e)] = true;
                p.order.push_back(e);
            }
    return p;
}

VertexId third_vertex(const Simplex& t, VertexId a, VertexId b) {
    for (VertexId v : t)
        if (v != a && v != b) return v;
    return -1;
}

// A fully coloured sphere triangulation: erase black edges into quadrangles
// and run the candidate through deduplication and the round-trip filter.
void consume_leaf(const ColouredComplex& sphere, const ColouringProblem& p,
                  const std::vector<int>& colour, MidsectionSearch& sh) {
    sh.raw.fetch_add(1);
    auto colour_of = [&](VertexId a, VertexId b) {
        return colour[static_cast<std::size_t>(
            p.edgeIndex.at({std::min(a, b), std::max(a, b)}))];
    };

    std::vector<Cell> cells;
    for (std::size_t ti = 0; ti < p.tris.size(); ++ti) {
        const std::array<int, 3>& es = p.triEdges[ti];
        const bool hasBlack = colour[static_cast<std::size_t>(es[0])] == kBlack ||
                              colour[static_cast<std::size_t>(es[1])] == kBlack ||
                              colour[static_cast<std::size_t>(es[2])] == kBlack;
        if (hasBlack) continue;  // half of a quadrangle
        const CellKind kind = colour[static_cast<std::size_t>(es[0])] == kRed
                                  ? CellKind::RedTriangle
                                  : CellKind::BlueTriangle;
        cells.push_back(normalize_cell(kind, {p.tris[ti][0], p.tris[ti][1], p.tris[ti][2]}));
    }
    for (std::size_t ei = 0; ei < p.edges.size(); ++ei) {
        if (colour[ei] != kBlack) continue;
        const auto [u, v] = p.edges[ei];
        const VertexId x = third_vertex(p.tris[static_cast<std::size_t>(p.trisOfEdge[ei][0])], u, v);
        const VertexId y = third_vertex(p.tris[static_cast<std::size_t>(p.trisOfEdge[ei][1])], u, v);
        // Cycle (x,u,y,v); rotate so the first side is red.
        std::vector<int> cyc = colour_of(x, u) == kRed ? std::vector<int>{x, u, y, v}
                                                       : std::vector<int>{u, y, v, x};
        cells.push_back(normalize_cell(CellKind::Quadrangle, std::move(cyc)));
    }
    std::sort(cells.begin(), cells.end());
    const bool degenerate = std::adjacent_find(cells.begin(), cells.end()) != cells.end();

    MidsectionComplex m;
    m.dim = 2;
    m.cornerCount = static_cast<int>(sphere.vertex_count());
    m.cells = std::move(cells);
    const CanonicalForm form = canonical_form(m);

    const std::lock_guard<std::mutex> lock(sh.mu);
    if (!sh.seen.insert(form).second) return;
    if (static_cast<int>(m.cells.size()) > sh.vmax) return;
    if (degenerate) {
        ++sh.filtered;
        return;
    }
    try {
        validate_midsection(m);
        const CausalSlice k = reconstruct(m);
        if (canonical_form(midsection(k)) == form)
            ++sh.counts[static_cast<int>(m.cells.size())];
        else
            ++sh.filtered;
    } catch (const ValidationError&) {
        ++sh.filtered;
    }
}

void colour_sphere(const ColouredComplex& sphere, MidsectionSearch& sh) {
    const ColouringProblem p = index_sphere(sphere);
    std::vector<int> colour(p.edges.size(), -1);

    auto triangle_ok = [&](int ti) {
        const std::array<int, 3>& es = p.triEdges[static_cast<std::size_t>(ti)];
        int reds = 0, blues = 0, blacks = 0;
        for (int e : es) {
            const int c = colour[static_cast<std::size_t>(e)];
            if (c < 0) return true;  // incomplete: decided later
            reds += c == kRed;
            blues += c == kBlue;
            blacks += c == kBlack;
        }
        if (blacks == 0) return reds == 3 || blues == 3;
        return blacks == 1 && reds == 1 && blues == 1;
    };
    auto complete = [&](int ti) {
        for (int e : p.triEdges[static_cast<std::size_t>(ti)])
            if (colour[static_cast<std::size_t>(e)] < 0) return false;
        return true;
    };
    // For a black edge (u,v) flanked by completed triangles with third
    // vertices x and y, the quadrangle sides meeting at u must differ.
    auto alternation_ok = [&](int ei) {
        const auto [u, v] = p.edges[static_cast<std::size_t>(ei)];
        const auto& ts = p.trisOfEdge[static_cast<std::size_t>(ei)];
        if (!complete(ts[0]) || !complete(ts[1])) return true;
        const VertexId x = third_vertex(p.tris[static_cast<std::size_t>(ts[0])], u, v);
        const VertexId y = third_vertex(p.tris[static_cast<std::size_t>(ts[1])], u, v);
        const auto col = [&](VertexId a, VertexId b) {
            return colour[static_cast<std::size_t>(
                p.edgeIndex.at({std::min(a, b), std::max(a, b)}))];
        };
        return col(u, x) != col(u, y);
    };

    std::function<void(std::size_t)> dfs = [&](std::size_t pos) {
        if (sh.blown.load()) return;
        if (sh.explored.fetch_add(1) + 1 > sh.cap) {
            sh.blown.store(true);
            return;
        }
        if (pos == p.order.size()) {
            consume_leaf(sphere, p, colour, sh);
            return;
        }
        const int ei = p.order[pos];
        for (int c : {kRed, kBlue, kBlack}) {
            colour[static_cast<std::size_t>(ei)] = c;
            bool ok = true;
            for (int ti : p.trisOfEdge[static_cast<std::size_t>(ei)]) {
                if (!triangle_ok(ti)) ok = false;
                if (ok && complete(ti))
                    for (int e : p.triEdges[static_cast<std::size_t>(ti)])
                        if (colour[static_cast<std::size_t>(e)] == kBlack && !alternation_ok(e))
                            ok = false;
            }
            if (ok) dfs(pos + 1);
        }
        colour[static_cast<std::size_t>(ei)] = -1;
    };
    dfs(0);
}

}  // namespace

SliceCensus enumerate_slices(int vmax, int genus, const CensusOptions& opt) {
    const Budget feasible = [&opt](int v, int r, int b) {
        if (opt.redCap >= 0 && r > opt.redCap) return false;
        if (opt.blueCap >= 0 && b > opt.blueCap) return false;
        if (opt.volumePlusBoundaryCap >= 0 && v + r + b > opt.volumePlusBoundaryCap)
            return false;
        return true;
    };
    std::map<CanonicalForm, CausalSlice> found = slice_search(vmax, opt, feasible);

    SliceCensus census;
    census.table.dimension = 3;
    census.table.genus = genus;
    census.table.strategy = "direct";
    census.table.vmax = vmax;
    census.table.counts = zero_counts(vmax);
    for (auto& [form, s] : found) {
        if (s.genus != genus) continue;
        ++census.table.counts[static_cast<int>(s.volume())];
        census.reps.push_back(std::move(s));
    }
    std::stable_sort(census.reps.begin(), census.reps.end(),
                     [](const CausalSlice& a, const CausalSlice& b) {
                         return a.volume() < b.volume();
                     });
    return census;
}

std::vector<ColouredComplex> enumerate_sphere_triangulations(int maxTriangles,
                                                             const CensusOptions& opt) {
    std::vector<ColouredComplex> out;
    if (maxTriangles < 4) return out;

    long long explored = 0;
    std::set<CanonicalForm> seen;
    std::map<CanonicalForm, ColouredComplex> found;
    std::vector<ColouredComplex> work;
    ColouredComplex root = ColouredComplex::build(
        2, {{0, Colour::Red}, {1, Colour::Red}, {2, Colour::Red}}, {{0, 1, 2}});
    seen.insert(canonical_form(root, ColourMode::Ignore));
    work.push_back(std::move(root));

    while (!work.empty()) {
        ColouredComplex k = std::move(work.back());
        work.pop_back();
        if (++explored > opt.stateCap)
            throw ResourceCapError("sphere census exceeded the state cap");

        std::map<std::pair<VertexId, VertexId>, int> edgeCount;
        for (const Simplex& t : k.maximal_simplices()) {
            ++edgeCount[{t[0], t[1]}];
            ++edgeCount[{t[0], t[2]}];
            ++edgeCount[{t[1], t[2]}];
        }
        std::optional<std::pair<VertexId, VertexId>> open;
        for (const auto& [e, c] : edgeCount)
            if (c == 1) {
                open = e;
                break;
            }
        if (!open) {
            try {
                if (classify_surface(k).genus == 0)
                    found.emplace(canonical_form(k, ColourMode::Ignore), std::move(k));
            } catch (const ValidationError&) {
            }
            continue;
        }
        if (static_cast<int>(k.maximal_simplices().size()) >= maxTriangles) continue;

        auto try_vertex = [&](VertexId x, bool fresh) {
            Simplex t{open->first, open->second, x};
            std::sort(t.begin(), t.end());
            if (!fresh && k.has_simplex(t)) return;
            std::vector<std::pair<VertexId, Colour>> cs;
            for (VertexId v : k.vertices()) cs.emplace_back(v, Colour::Red);
            if (fresh) cs.emplace_back(x, Colour::Red);
            std::vector<Simplex> ts = k.maximal_simplices();
            ts.push_back(std::move(t));
            ColouredComplex next = ColouredComplex::build(2, std::move(cs), std::move(ts));
            if (!sphere_admissible(next, maxTriangles)) return;
            if (seen.insert(canonical_form(next, ColourMode::Ignore)).second)
                work.push_back(std::move(next));
        };
        try_vertex(k.vertices().back() + 1, true);
        for (VertexId x : k.vertices())
            if (x != open->first && x != open->second) try_vertex(x, false);
    }

    for (auto& [form, k] : found) out.push_back(std::move(k));
    std::stable_sort(out.begin(), out.end(), [](const ColouredComplex& a, const ColouredComplex& b) {
        return a.maximal_simplices().size() < b.maximal_simplices().size();
    });
    return out;
}

CensusTable enumerate_via_midsections(int vmax, const CensusOptions& opt) {
    CensusTable t;
    t.dimension = 3;
    t.genus = 0;
    t.strategy = "midsection";
    t.vmax = vmax;
    t.counts = zero_counts(vmax);

    // A slice of volume V sections into V cells, of which at least four are
    // red and four are blue triangles; triangulating the quadrangles yields at
    // most 2V-8 triangles, so spheres that large cover every candidate.
    const int maxTriangles = 2 * vmax - 8;
    if (maxTriangles < 4) return t;
    const std::vector<ColouredComplex> spheres =
        enumerate_sphere_triangulations(maxTriangles, opt);

    MidsectionSearch sh;
    sh.vmax = vmax;
    sh.cap = opt.stateCap;
    const int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        for (const ColouredComplex& sphere : spheres) {
            colour_sphere(sphere, sh);
            if (sh.blown.load()) break;
        }
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back([&, j]() {
                for (std::size_t i = static_cast<std::size_t>(j); i < spheres.size();
                     i += static_cast<std::size_t>(jobs)) {
                    colour_sphere(spheres[i], sh);
                    if (sh.blown.load()) return;
                }
            });
        for (std::thread& th : pool) th.join();
    }
    if (sh.blown.load()) throw ResourceCapError("midsection census exceeded the state cap");

    for (const auto& [v, n] : sh.counts) t.counts[v] = n;
    t.rawColoured = sh.raw.load();
    t.filteredOut = sh.filtered;
    return t;
}

CensusTable count_fixed_boundaries(int vmax, const ColouredComplex& sigmaIn,
                                   const ColouredComplex& sigmaOut, const CensusOptions& opt) {
    const SurfaceClass gin = classify_surface(sigmaIn);
    const SurfaceClass gout = classify_surface(sigmaOut);
    if (gin.genus != gout.genus)
        throw ValidationError("fixed-boundary census: boundary genera differ");

    const int nIn = static_cast<int>(sigmaIn.maximal_simplices().size());
    const int nOut = static_cast<int>(sigmaOut.maximal_simplices().size());

    // Volume budget per slice, by its role in a stack. A slice of volume V
    // with boundary sizes (r, b) always satisfies V >= r + b + 1, boundary
    // sizes are at least 4, and neighbours across an interface of size s each
    // spend at least s + 5 volume; the disjunction below is antitone in
    // (V, r, b), so it prunes partial slices soundly.
    const int smax = std::max(0, (vmax - 10) / 2);
    const int redCap = std::max(nIn, smax);
    const int blueCap = std::max(nOut, smax);
    const Budget feasible = [=](int v, int r, int b) {
        if (r > redCap || b > blueCap) return false;
        const bool alone = r <= nIn && b <= nOut && v <= vmax;
        const bool first = r <= nIn && v + b <= vmax - nOut - 1;
        const bool last = b <= nOut && v + r <= vmax - nIn - 1;
        const bool mid = v + r + b <= vmax - nIn - nOut - 2;
        return alone || first || last || mid;
    };
    const int sliceMax = opt.maxSliceVolume >= 1 ? std::min(opt.maxSliceVolume, vmax) : vmax;
    std::map<CanonicalForm, CausalSlice> found = slice_search(sliceMax, opt, feasible);

    struct Rep {
        CausalSlice s;
        CanonicalForm inForm;
        CanonicalForm outForm;
    };
    std::vector<Rep> reps;
    for (auto& [form, s] : found) {
        if (s.genus != gin.genus) continue;
        CanonicalForm in = canonical_form(s.redBoundary, ColourMode::Ignore);
        CanonicalForm outF = canonical_form(s.blueBoundary, ColourMode::Ignore);
        reps.push_back({std::move(s), std::move(in), std::move(outF)});
    }

    const CanonicalForm formIn = canonical_form(sigmaIn, ColourMode::Ignore);
    const CanonicalForm formOut = canonical_form(sigmaOut, ColourMode::Ignore);

    CensusTable t;
    t.dimension = 3;
    t.genus = gin.genus;
    t.strategy = "fixed-boundary";
    t.vmax = vmax;
    t.counts = zero_counts(vmax);

    long long explored = 0;
    std::set<CanonicalForm> seenStacks;
    std::vector<CausalTriangulation> work;
    auto admit = [&](CausalTriangulation&& c) {
        if (c.volume() > vmax) return;
        if (!seenStacks.insert(canonical_form(c)).second) return;
        if (canonical_form(c.sigma_out(), ColourMode::Ignore) == formOut)
            ++t.counts[static_cast<int>(c.volume())];
        if (c.volume() + 9 <= vmax) work.push_back(std::move(c));
    };
    for (const Rep& r : reps)
        if (r.inForm == formIn) admit(stack_slices({r.s}, {}));

    while (!work.empty()) {
        CausalTriangulation c = std::move(work.back());
        work.pop_back();
        if (++explored > opt.stateCap)
            throw ResourceCapError("fixed-boundary census exceeded the state cap");
        const ColouredComplex& out = c.slices.back().blueBoundary;
        const CanonicalForm outF = canonical_form(out, ColourMode::Ignore);
        for (const Rep& r : reps) {
            if (r.inForm != outF) continue;
            if (c.volume() + r.s.volume() > vmax) continue;
            for (std::map<VertexId, VertexId>& iso :
                 all_isomorphisms(out, r.s.redBoundary, ColourMode::Ignore)) {
                std::vector<CausalSlice> slices = c.slices;
                slices.push_back(r.s);
                std::vector<std::map<VertexId, VertexId>> isos = c.interfaceIsos;
                isos.push_back(std::move(iso));
                admit(stack_slices(std::move(slices), std::move(isos)));
            }
        }
    }
    return t;
}

BetaEstimate estimate_beta(const CensusTable& table, int v0) {
    if (v0 < 0) throw ValidationError("growth estimate: negative volume offset");
    BetaEstimate e;
    e.v0 = v0;
    double runningInf = 0;
    bool first = true;
    for (const auto& [v, n] : table.counts) {
        if (n <= 0) continue;
        const int volume = v + v0;
        const double val = std::log(static_cast<double>(n)) / volume;
        runningInf = first ? -val : std::min(runningInf, -val);
        first = false;
        e.rows.push_back({volume, val, runningInf});
    }
    if (first) throw ValidationError("growth estimate: census table has no nonzero counts");
    return e;
}

}  // namespace ct
