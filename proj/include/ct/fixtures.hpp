#pragma once

#include <random>

#include "ct/complex.hpp"
#include "ct/midsection.hpp"

namespace ct {
namespace fixtures {

// Boundary of a tetrahedron: 4 vertices, 4 triangles (the minimal 2-sphere).
ColouredComplex sigma_t();

// Octahedron boundary: 6 vertices, 8 triangles, every vertex of degree 4.
ColouredComplex octahedron();

// Möbius–Kantor 7-vertex torus: triangles {i,i+1,i+3} and {i,i+2,i+3} mod 7.
ColouredComplex torus7();

// Boundary of the 4-simplex: 5 vertices, 5 tetrahedra (the minimal 3-sphere).
ColouredComplex boundary_delta4();

// Two tetrahedra sharing exactly one edge: fails the edge-link manifold check.
ColouredComplex pinched_pair();

// Sphere of quadrangles on corners {A=0, B=1, p=2, q=3, i=4, i'=5} where A and
// B are joined both by the red path A-p-B and the blue path A-q-B, so no slice
// has this midsection.
MidsectionComplex fig4_midsection();

// Torus grid of 9 quadrangles (3 rows x 3 columns, rows red, columns blue).
// Corner classes are collision-free, but the rebuilt complex is closed and is
// rejected by slice validation.
MidsectionComplex quad_torus_midsection();

// Random 2-sphere: `steps` stellar subdivisions of sigma_t at uniformly chosen
// triangles. Always contains a degree-3 vertex (the newest one).
ColouredComplex stellar_sphere(std::mt19937& rng, int steps);

}  // namespace fixtures
}  // namespace ct
