#pragma once

#include <map>
#include <utility>

#include "ct/complex.hpp"

namespace ct {

// A D-simplex of type (k, D+1-k): k red vertices, the rest blue, 1 <= k <= D.
struct SimplexType {
    int red = 0;
    int blue = 0;
};

// Throws ValidationError for mono-coloured D-simplices.
SimplexType classify_simplex(const ColouredComplex& k, const Simplex& s);

// A certified (generalized) causal slice.
struct CausalSlice {
    ColouredComplex complex;
    ColouredComplex redBoundary;   // Sigma_in
    ColouredComplex blueBoundary;  // Sigma_out
    // Common genus of the two boundary components (D=3). For D=4 boundary
    // topology is not classified and the field is 0.
    int genus = 0;
    // False only when both boundaries are certified 2-spheres (D=3). In D=4
    // sphere recognition is out of scope, so slices are always reported as
    // generalized.
    bool generalized = false;

    long long volume() const {
        return static_cast<long long>(complex.maximal_simplices().size());
    }
    std::map<std::pair<int, int>, long long> type_counts() const;
};

// Certifies the slice conditions:
//  * every D-simplex carries both colours,
//  * combinatorial manifold checks (full link conditions in D=3; in D=4
//    pseudomanifold + link Euler characteristics, see below),
//  * orientability,
//  * the boundary has exactly two connected components, one entirely red and
//    one entirely blue,
//  * every mono-coloured simplex lies in the boundary component of its colour,
//  * D=3: both boundary components are closed orientable surfaces of equal
//    genus; requireSphereBoundaries demands genus 0.
// D=4 limitation: vertex links are checked to be connected pseudomanifolds
// with the Euler characteristic of S^3 (interior, chi=0) or of a 3-ball
// (boundary, chi=1); genuine 3-sphere recognition is not attempted, so
// requireSphereBoundaries is rejected for D=4.
CausalSlice validate_slice(const ColouredComplex& k, bool requireSphereBoundaries = false);

// The same slice read in the opposite time direction (colours swapped).
CausalSlice reversed(const CausalSlice& s);

}  // namespace ct
