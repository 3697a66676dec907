#pragma once

#include <string>
#include <string_view>

#include "girthlab/graph.hpp"

namespace girthlab {

enum class NamedGraphKind { Cycle, Complete, CompleteBipartite, Petersen, Dodecahedron, Heawood, Path };

struct NamedGraphId {
    NamedGraphKind kind;
    int a = 0;
    int b = 0;

    static NamedGraphId cycle(int len) { return {NamedGraphKind::Cycle, len}; }
    static NamedGraphId complete(int n) { return {NamedGraphKind::Complete, n}; }
    static NamedGraphId complete_bipartite(int p, int q) { return {NamedGraphKind::CompleteBipartite, p, q}; }
    static NamedGraphId petersen() { return {NamedGraphKind::Petersen}; }
    static NamedGraphId dodecahedron() { return {NamedGraphKind::Dodecahedron}; }
    static NamedGraphId heawood() { return {NamedGraphKind::Heawood}; }
    static NamedGraphId path(int len) { return {NamedGraphKind::Path, len}; }

    /// Accepts "petersen", "dodecahedron", "heawood", "cycle(5)", "path(4)",
    /// "complete(4)", "complete_bipartite(3,3)"; throws DomainError otherwise.
    static NamedGraphId parse(std::string_view text);
    std::string to_string() const;
};

/// Petersen is built as the Kneser graph on 2-subsets of a 5-set, the
/// dodecahedron as the generalized Petersen graph GP(10,2), Heawood as the
/// point/line incidence graph of the Fano plane.
Graph named_graph(const NamedGraphId& id);

}  // namespace girthlab
