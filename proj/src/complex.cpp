#include "ct/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace ct {

namespace {

std::string simplex_str(const Simplex& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    out += '}';
    return out;
}

}  // namespace

ColouredComplex ColouredComplex::build(int dim,
                                       std::vector<std::pair<VertexId, Colour>> colours,
                                       std::vector<Simplex> maximal) {
    if (dim < 1) throw ValidationError("complex dimension must be at least 1");
    if (maximal.empty()) throw ValidationError("empty complex");

    std::sort(colours.begin(), colours.end());
    for (std::size_t i = 1; i < colours.size(); ++i) {
        if (colours[i].first == colours[i - 1].first)
            throw ValidationError("vertex " + std::to_string(colours[i].first) +
                                  " declared more than once");
    }

    for (auto& s : maximal) {
        std::sort(s.begin(), s.end());
        if (static_cast<int>(s.size()) != dim + 1)
            throw ValidationError("simplex " + simplex_str(s) + " has wrong arity for dimension " +
                                  std::to_string(dim));
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw ValidationError("duplicate vertex in simplex " + simplex_str(s));
    }
    std::sort(maximal.begin(), maximal.end());
    maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());

    std::set<VertexId> used;
    for (const auto& s : maximal) used.insert(s.begin(), s.end());
    std::set<VertexId> declared;
    for (const auto& [v, c] : colours) declared.insert(v);
    for (VertexId v : used) {
        if (!declared.count(v))
            throw ValidationError("vertex " + std::to_string(v) + " used but not declared");
    }
    for (VertexId v : declared) {
        if (!used.count(v))
            throw ValidationError("vertex " + std::to_string(v) +
                                  " not contained in any maximal simplex");
    }
    return unchecked(dim, std::move(colours), std::move(maximal));
}

ColouredComplex ColouredComplex::unchecked(int dim,
                                           std::vector<std::pair<VertexId, Colour>> colours,
                                           std::vector<Simplex> maximal) {
    ColouredComplex k;
    k.dim_ = dim;
    k.verts_.reserve(colours.size());
    k.colours_.reserve(colours.size());
    for (const auto& [v, c] : colours) {
        k.verts_.push_back(v);
        k.colours_.push_back(c);
    }
    k.maximal_ = std::move(maximal);
    return k;
}

bool ColouredComplex::has_vertex(VertexId v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

Colour ColouredComplex::colour(VertexId v) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it == verts_.end() || *it != v)
        throw ValidationError("unknown vertex " + std::to_string(v));
    return colours_[static_cast<std::size_t>(it - verts_.begin())];
}

bool ColouredComplex::has_simplex(const Simplex& s) const {
    return std::binary_search(maximal_.begin(), maximal_.end(), s);
}

std::vector<Simplex> ColouredComplex::simplices(int p) const {
    if (p < 0 || p > dim_) return {};
    std::set<Simplex> out;
    // Every p-face is a (p+1)-subset of some maximal simplex.
    const int k = p + 1;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (const auto& s : maximal_) {
        const int n = static_cast<int>(s.size());
        for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            Simplex face(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i)
                face[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            out.insert(std::move(face));
            int i = k - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return std::vector<Simplex>(out.begin(), out.end());
}

int ColouredComplex::red_count(const Simplex& s) const {
    int r = 0;
    for (VertexId v : s)
        if (colour(v) == Colour::Red) ++r;
    return r;
}

ColouredComplex ColouredComplex::relabelled(const std::function<VertexId(VertexId)>& map) const {
    std::vector<std::pair<VertexId, Colour>> colours;
    colours.reserve(verts_.size());
    std::set<VertexId> seen;
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        VertexId nv = map(verts_[i]);
        if (!seen.insert(nv).second)
            throw ValidationError("relabelling is not injective at " + std::to_string(nv));
        colours.emplace_back(nv, colours_[i]);
    }
    std::vector<Simplex> maximal;
    maximal.reserve(maximal_.size());
    for (const auto& s : maximal_) {
        Simplex t;
        t.reserve(s.size());
        for (VertexId v : s) t.push_back(map(v));
        std::sort(t.begin(), t.end());
        maximal.push_back(std::move(t));
    }
    std::sort(colours.begin(), colours.end());
    std::sort(maximal.begin(), maximal.end());
    return unchecked(dim_, std::move(colours), std::move(maximal));
}

ColouredComplex ColouredComplex::colour_swapped() const {
    std::vector<std::pair<VertexId, Colour>> colours;
    colours.reserve(verts_.size());
    for (std::size_t i = 0; i < verts_.size(); ++i)
        colours.emplace_back(verts_[i], other(colours_[i]));
    return unchecked(dim_, std::move(colours), maximal_);
}

bool ColouredComplex::operator==(const ColouredComplex& o) const {
    return dim_ == o.dim_ && verts_ == o.verts_ && colours_ == o.colours_ && maximal_ == o.maximal_;
}

ColouredComplex boundary(const ColouredComplex& k) {
    if (k.dim() < 1) throw ValidationError("boundary undefined for dimension < 1");
    std::map<Simplex, int> faceCount;
    for (const auto& s : k.maximal_simplices()) {
        // All D-subsets of s.
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            Simplex f;
            f.reserve(s.size() - 1);
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) f.push_back(s[i]);
            ++faceCount[f];
        }
    }
    std::vector<Simplex> bnd;
    std::set<VertexId> bverts;
    for (const auto& [f, n] : faceCount) {
        if (n == 1) {
            bnd.push_back(f);
            bverts.insert(f.begin(), f.end());
        }
    }
    std::vector<std::pair<VertexId, Colour>> colours;
    for (VertexId v : bverts) colours.emplace_back(v, k.colour(v));
    return ColouredComplex::unchecked(k.dim() - 1, std::move(colours), std::move(bnd));
}

std::vector<ColouredComplex> connected_components(const ColouredComplex& k) {
    if (k.empty()) return {};
    // Union-find over vertices through shared maximal simplices.
    std::map<VertexId, VertexId> parent;
    std::function<VertexId(VertexId)> find = [&](VertexId v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (VertexId v : k.vertices()) parent[v] = v;
    for (const auto& s : k.maximal_simplices())
        for (std::size_t i = 1; i < s.size(); ++i) {
            VertexId a = find(s[0]), b = find(s[i]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }

    std::map<VertexId, std::vector<Simplex>> bySimplexRoot;
    for (const auto& s : k.maximal_simplices()) bySimplexRoot[find(s[0])].push_back(s);
    std::map<VertexId, std::vector<std::pair<VertexId, Colour>>> byVertexRoot;
    for (VertexId v : k.vertices()) byVertexRoot[find(v)].emplace_back(v, k.colour(v));

    std::vector<ColouredComplex> out;
    for (auto& [root, simps] : bySimplexRoot)
        out.push_back(ColouredComplex::unchecked(k.dim(), byVertexRoot[root], std::move(simps)));
    return out;
}

long long euler_characteristic(const ColouredComplex& k) {
    long long chi = 0;
    for (int p = 0; p <= k.dim(); ++p) {
        long long c = k.count(p);
        chi += (p % 2 == 0) ? c : -c;
    }
    return chi;
}

}  // namespace ct
