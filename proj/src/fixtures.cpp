#include "ct/fixtures.hpp"

#include <algorithm>

#include "ct/errors.hpp"

namespace ct {
namespace fixtures {

namespace {

// Fixture surfaces are inputs to colour-assigning builders; vertex colours
// carry no meaning, so everything is declared red.
ColouredComplex all_red(int dim, int nverts, std::vector<Simplex> maximal) {
    std::vector<std::pair<VertexId, Colour>> colours;
    for (int v = 0; v < nverts; ++v) colours.push_back({v, Colour::Red});
    return ColouredComplex::build(dim, std::move(colours), std::move(maximal));
}

}  // namespace

ColouredComplex sigma_t() {
    return all_red(2, 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

ColouredComplex octahedron() {
    // Antipodal pairs (0,5), (1,4), (2,3); faces avoid them.
    return all_red(2, 6,
                   {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 4},
                    {1, 2, 5}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}});
}

ColouredComplex torus7() {
    std::vector<Simplex> tris;
    for (VertexId i = 0; i < 7; ++i) {
        Simplex a = {i, static_cast<VertexId>((i + 1) % 7), static_cast<VertexId>((i + 3) % 7)};
        Simplex b = {i, static_cast<VertexId>((i + 2) % 7), static_cast<VertexId>((i + 3) % 7)};
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        tris.push_back(a);
        tris.push_back(b);
    }
    return all_red(2, 7, std::move(tris));
}

ColouredComplex boundary_delta4() {
    return all_red(3, 5,
                   {{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}, {1, 2, 3, 4}});
}

ColouredComplex pinched_pair() {
    return all_red(3, 6, {{0, 1, 2, 3}, {0, 1, 4, 5}});
}

MidsectionComplex fig4_midsection() {
    // A=0, B=1, p=2, q=3, i=4, i'=5. Red edges: (A,p),(p,B),(i,q),(i',q);
    // blue edges: (A,q),(q,B),(p,i),(p,i').
    MidsectionComplex s;
    s.dim = 2;
    s.cornerCount = 6;
    s.cells = {
        normalize_cell(CellKind::Quadrangle, {0, 2, 4, 3}),  // A p i q
        normalize_cell(CellKind::Quadrangle, {2, 1, 3, 4}),  // p B q i
        normalize_cell(CellKind::Quadrangle, {0, 2, 5, 3}),  // A p i' q
        normalize_cell(CellKind::Quadrangle, {2, 1, 3, 5}),  // p B q i'
    };
    std::sort(s.cells.begin(), s.cells.end());
    validate_midsection(s);
    return s;
}

MidsectionComplex quad_torus_midsection() {
    // Corner (row i, column j) = 3*i + j; rows are red cycles, columns blue.
    auto at = [](int i, int j) { return 3 * ((i + 3) % 3) + (j + 3) % 3; };
    MidsectionComplex s;
    s.dim = 2;
    s.cornerCount = 9;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            s.cells.push_back(normalize_cell(
                CellKind::Quadrangle, {at(i, j), at(i, j + 1), at(i + 1, j + 1), at(i + 1, j)}));
    std::sort(s.cells.begin(), s.cells.end());
    validate_midsection(s);
    return s;
}

ColouredComplex stellar_sphere(std::mt19937& rng, int steps) {
    if (steps < 0) throw ValidationError("negative subdivision count");
    std::vector<Simplex> tris = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    VertexId next = 4;
    for (int s = 0; s < steps; ++s) {
        std::uniform_int_distribution<std::size_t> pick(0, tris.size() - 1);
        const std::size_t t = pick(rng);
        const Simplex f = tris[t];
        tris.erase(tris.begin() + static_cast<std::ptrdiff_t>(t));
        for (int drop = 0; drop < 3; ++drop) {
            Simplex g;
            for (int k = 0; k < 3; ++k)
                if (k != drop) g.push_back(f[static_cast<std::size_t>(k)]);
            g.push_back(next);
            std::sort(g.begin(), g.end());
            tris.push_back(std::move(g));
        }
        ++next;
    }
    return all_red(2, next, std::move(tris));
}

}  // namespace fixtures
}  // namespace ct
