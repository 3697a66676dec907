#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "girthlab/graph.hpp"

namespace girthlab {

/// Result of canonical labeling.
///
/// order[i] is the input vertex placed at canonical position i, so
/// g.relabeled(position) == graph where position is the inverse of order.
/// Two graphs are isomorphic iff their certificates are equal.
struct CanonicalForm {
    std::vector<Vertex> order;
    std::vector<Vertex> position;
    Graph graph;
    std::vector<std::uint64_t> certificate;  // row-major packed adjacency of graph
    std::size_t leaves_visited = 0;
};

/// Equitable-partition refinement with backtracking over the first
/// non-singleton cell; the lexicographically smallest packed adjacency matrix
/// over all leaves is the certificate. Automorphisms discovered at equal
/// leaves prune sibling branches in the same orbit.
///
/// initial_colors, when non-empty, must hold one isomorphism-invariant value
/// per vertex; vertices with smaller values come first in the canonical order.
CanonicalForm canonical_form(const Graph& g, std::span<const std::uint64_t> initial_colors = {});

/// Cheap isomorphism-invariant vertex color: per BFS layer, its size and the
/// number of edges inside it, folded into one integer.
std::vector<std::uint64_t> distance_layer_invariant(const Graph& g);

/// canonical_form with distance_layer_invariant as the initial coloring,
/// reduced to a string key (graph6 of the canonical graph).
std::string canonical_key(const Graph& g);

}  // namespace girthlab
