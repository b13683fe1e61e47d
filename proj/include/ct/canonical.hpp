#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ct/complex.hpp"

namespace ct {

// Canonical forms are opaque byte strings; equality of forms is equivalence
// under class-preserving graph isomorphism of the underlying encoding.
using CanonicalForm = std::string;

// Node-classed undirected simple graph fed to the canonical labelling engine.
struct CanonGraph {
    int n = 0;
    std::vector<int> klass;
    std::vector<std::vector<int>> adj;

    int add_node(int k) {
        klass.push_back(k);
        adj.emplace_back();
        return n++;
    }
    void add_edge(int a, int b) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
};

struct CanonResult {
    CanonicalForm form;
    std::vector<int> labelling;  // node -> canonical position
};

// Individualization-refinement canonical labelling: equitable refinement plus
// backtracking on the first non-singleton cell, minimizing the leaf encoding.
CanonResult canonical_labelling(const CanonGraph& g);

enum class ColourMode { Respect, Ignore };

struct ComplexCanon {
    CanonicalForm form;
    std::map<VertexId, int> vertexLabel;  // original vertex -> canonical position
};

ComplexCanon canonical_complex(const ColouredComplex& k, ColourMode mode);

CanonicalForm canonical_form(const ColouredComplex& k, ColourMode mode = ColourMode::Respect);

// Composes the two canonical labellings into an explicit isomorphism, or
// nullopt when the forms differ.
std::optional<std::map<VertexId, VertexId>> find_isomorphism(const ColouredComplex& a,
                                                             const ColouredComplex& b,
                                                             ColourMode mode);

// All isomorphisms a -> b by backtracking; meant for small complexes such as
// slice boundaries (used to enumerate gluings).
std::vector<std::map<VertexId, VertexId>> all_isomorphisms(const ColouredComplex& a,
                                                           const ColouredComplex& b,
                                                           ColourMode mode);

}  // namespace ct
