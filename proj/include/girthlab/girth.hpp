#pragma once

#include <cstdint>
#include <vector>

#include "girthlab/graph.hpp"

namespace girthlab {

/// Shortest-cycle length, or the explicit acyclic marker for forests.
class Girth {
public:
    static Girth acyclic() { return Girth(0); }
    static Girth of(int length) { return Girth(length); }

    bool is_acyclic() const { return length_ == 0; }
    /// Throws DomainError on an acyclic graph.
    int length() const;

    bool operator==(const Girth&) const = default;

private:
    explicit Girth(int length) : length_(length) {}
    int length_;
};

/// Per-root breadth-first search; the first non-tree edge met from a root
/// closes the shortest cycle through that root.
Girth girth(const Graph& g);

/// Breadth-first shells around a root: N1 = N(u), N2 = N₂(u), and
/// N3plus = everything else except u (including unreachable vertices).
struct ShellDecomposition {
    Vertex root = 0;
    VertexSet n1;
    VertexSet n2;
    VertexSet n3plus;
};

ShellDecomposition shell_decompose(const Graph& g, Vertex u);

/// Same, additionally asserting |N2| = k(k-1) when g is k-regular of girth
/// at least 5 (throws std::logic_error on failure).
ShellDecomposition shell_decompose(const Graph& g, Vertex u, Girth known_girth);

using Signature = std::vector<std::uint64_t>;

/// Girth-cycle counts: per vertex (λ_v), per edge (n(e)), and in total.
struct GirthProfile {
    int girth = 0;
    std::uint64_t total_girth_cycles = 0;
    std::vector<std::uint64_t> per_vertex;

    std::size_t order() const { return per_vertex.size(); }
    /// n(e) for the edge {a,b}; zero for non-edges.
    std::uint64_t edge(Vertex a, Vertex b) const { return edge_counts_[a * order() + b]; }
    void add_edge_count(Vertex a, Vertex b, std::uint64_t c);

    bool operator==(const GirthProfile&) const = default;

private:
    std::vector<std::uint64_t> edge_counts_;  // dense symmetric n×n
    friend GirthProfile make_profile(std::size_t n, int girth);
};

GirthProfile make_profile(std::size_t n, int girth);

enum class CycleEngine {
    Auto,             ///< neighborhood engine when applicable, else path enumeration
    PathEnumeration,  ///< any finite girth
    Girth5Neighborhood,  ///< k-regular girth-5 only: λ_v = |E(N₂(v))|
};

/// Counts cycles of length exactly girth(g). Throws DomainError on acyclic
/// input, or when the neighborhood engine is forced on an ineligible graph.
GirthProfile girth_profile(const Graph& g, CycleEngine engine = CycleEngine::Auto);

/// Sorted incident edge counts of v. Throws DomainError if v is out of range.
Signature signature(const Graph& g, Vertex v, const GirthProfile& profile);

}  // namespace girthlab
