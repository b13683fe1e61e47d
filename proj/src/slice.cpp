#include "ct/slice.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ct/manifold.hpp"
#include "ct/surface.hpp"

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

// D=4 links: connected pseudomanifold with the right Euler characteristic.
void check_4d_links(const ColouredComplex& k) {
    const auto& top = k.maximal_simplices();

    std::map<Simplex, int> tetCount;
    for (const auto& s : top)
        for (std::size_t drop = 0; drop < 5; ++drop) {
            Simplex f;
            for (std::size_t i = 0; i < 5; ++i)
                if (i != drop) f.push_back(s[i]);
            ++tetCount[f];
        }
    for (const auto& [f, n] : tetCount)
        if (n > 2)
            throw ValidationError("tetrahedron " + simplex_str(f) +
                                  " lies in more than two 4-simplices");

    std::set<VertexId> boundaryVerts;
    for (const auto& [f, n] : tetCount)
        if (n == 1) boundaryVerts.insert(f.begin(), f.end());

    for (VertexId v : k.vertices()) {
        std::vector<Simplex> linkTets;
        std::set<VertexId> linkVerts;
        for (const auto& s : top) {
            if (!std::binary_search(s.begin(), s.end(), v)) continue;
            Simplex f;
            for (VertexId w : s)
                if (w != v) f.push_back(w);
            linkVerts.insert(f.begin(), f.end());
            linkTets.push_back(std::move(f));
        }
        std::vector<std::pair<VertexId, Colour>> colours;
        for (VertexId w : linkVerts) colours.emplace_back(w, k.colour(w));
        auto link = ColouredComplex::unchecked(3, std::move(colours), std::move(linkTets));
        if (connected_components(link).size() != 1)
            throw ValidationError("link of vertex " + std::to_string(v) + " is not connected");

        std::map<Simplex, int> triCount;
        for (const auto& s : link.maximal_simplices())
            for (std::size_t drop = 0; drop < 4; ++drop) {
                Simplex f;
                for (std::size_t i = 0; i < 4; ++i)
                    if (i != drop) f.push_back(s[i]);
                ++triCount[f];
            }
        bool interior = boundaryVerts.count(v) == 0;
        for (const auto& [f, n] : triCount) {
            if (n > 2)
                throw ValidationError("link of vertex " + std::to_string(v) +
                                      " is not a pseudomanifold");
            if (interior && n != 2)
                throw ValidationError("link of interior vertex " + std::to_string(v) +
                                      " is not closed");
        }
        long long chi = euler_characteristic(link);
        long long want = interior ? 0 : 1;
        if (chi != want)
            throw ValidationError("link of vertex " + std::to_string(v) +
                                  " has Euler characteristic " + std::to_string(chi) +
                                  ", expected " + std::to_string(want));
    }
}

}  // namespace

SimplexType classify_simplex(const ColouredComplex& k, const Simplex& s) {
    int red = k.red_count(s);
    int total = static_cast<int>(s.size());
    if (red == 0 || red == total)
        throw ValidationError("mono-coloured simplex " + simplex_str(s));
    return SimplexType{red, total - red};
}

std::map<std::pair<int, int>, long long> CausalSlice::type_counts() const {
    std::map<std::pair<int, int>, long long> out;
    for (const auto& s : complex.maximal_simplices()) {
        int red = complex.red_count(s);
        ++out[{red, static_cast<int>(s.size()) - red}];
    }
    return out;
}

CausalSlice validate_slice(const ColouredComplex& k, bool requireSphereBoundaries) {
    const int d = k.dim();
    if (d != 3 && d != 4) throw ValidationError("slices must have dimension 3 or 4");
    if (d == 4 && requireSphereBoundaries)
        throw ValidationError(
            "sphere-boundary certification is not available in dimension 4 "
            "(3-sphere recognition not attempted)");
    if (k.empty()) throw ValidationError("empty complex");

    // Every top simplex carries both colours.
    for (const auto& s : k.maximal_simplices()) classify_simplex(k, s);

    // Manifold conditions.
    if (d == 3) {
        ManifoldReport r = check_manifold_3d(k);
        if (!r.pass) throw ValidationError("manifold check failed: " + r.reason +
                                           (r.witness.empty() ? "" : " at " + simplex_str(r.witness)));
    } else {
        if (connected_components(k).size() != 1)
            throw ValidationError("complex is not connected");
        check_4d_links(k);
    }

    if (!is_orientable(k)) throw ValidationError("complex is not orientable");

    // Boundary: two components, one per colour.
    ColouredComplex bnd = boundary(k);
    if (bnd.empty()) throw ValidationError("complex is closed; a slice must have boundary");
    std::vector<ColouredComplex> comps = connected_components(bnd);
    if (comps.size() != 2)
        throw ValidationError("boundary has " + std::to_string(comps.size()) +
                              " connected components, expected 2");
    auto monochrome = [](const ColouredComplex& c, Colour col) {
        for (VertexId v : c.vertices())
            if (c.colour(v) != col) return false;
        return true;
    };
    int redIdx = -1, blueIdx = -1;
    for (int i = 0; i < 2; ++i) {
        if (monochrome(comps[static_cast<std::size_t>(i)], Colour::Red)) redIdx = i;
        if (monochrome(comps[static_cast<std::size_t>(i)], Colour::Blue)) blueIdx = i;
    }
    if (redIdx < 0 || blueIdx < 0 || redIdx == blueIdx)
        throw ValidationError("boundary components are not one red and one blue");

    // Every mono-coloured simplex of any dimension lies in the boundary
    // component of its colour.
    std::set<Simplex> redFaces, blueFaces;
    for (int p = 0; p <= d - 1; ++p) {
        auto rf = comps[static_cast<std::size_t>(redIdx)].simplices(p);
        redFaces.insert(rf.begin(), rf.end());
        auto bf = comps[static_cast<std::size_t>(blueIdx)].simplices(p);
        blueFaces.insert(bf.begin(), bf.end());
    }
    for (int p = 0; p <= d - 1; ++p) {
        for (const auto& s : k.simplices(p)) {
            int red = k.red_count(s);
            if (red == static_cast<int>(s.size())) {
                if (!redFaces.count(s))
                    throw ValidationError("mono-red simplex " + simplex_str(s) +
                                          " does not lie in the red boundary component");
            } else if (red == 0) {
                if (!blueFaces.count(s))
                    throw ValidationError("mono-blue simplex " + simplex_str(s) +
                                          " does not lie in the blue boundary component");
            }
        }
    }

    CausalSlice out;
    out.complex = k;
    out.redBoundary = comps[static_cast<std::size_t>(redIdx)];
    out.blueBoundary = comps[static_cast<std::size_t>(blueIdx)];

    if (d == 3) {
        SurfaceClass red = classify_surface(out.redBoundary);
        SurfaceClass blue = classify_surface(out.blueBoundary);
        if (red.genus != blue.genus)
            throw ValidationError("boundary genus mismatch: red " + std::to_string(red.genus) +
                                  " vs blue " + std::to_string(blue.genus));
        out.genus = red.genus;
        out.generalized = red.genus > 0;
        if (requireSphereBoundaries && red.genus != 0)
            throw ValidationError("boundary components have genus " + std::to_string(red.genus) +
                                  ", spheres required");
    } else {
        out.genus = 0;
        out.generalized = true;
    }
    return out;
}

CausalSlice reversed(const CausalSlice& s) {
    CausalSlice out;
    out.complex = s.complex.colour_swapped();
    out.redBoundary = s.blueBoundary.colour_swapped();
    out.blueBoundary = s.redBoundary.colour_swapped();
    out.genus = s.genus;
    out.generalized = s.generalized;
    return out;
}

}  // namespace ct
