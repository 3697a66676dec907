#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#ifndef GIRTHLAB_MAX_VERTICES
#define GIRTHLAB_MAX_VERTICES 64
#endif

namespace girthlab {

/// Compile-time width of one adjacency row. 64 keeps every row in a single
/// machine word; rebuild with -DGIRTHLAB_MAX_VERTICES=256 for larger inputs.
inline constexpr std::size_t kMaxVertices = GIRTHLAB_MAX_VERTICES;

using Vertex = int;
using VertexBits = std::bitset<kMaxVertices>;

/// Runtime vertex cap: kMaxVertices unless GIRTHLAB_MAX_N lowers it.
std::size_t vertex_cap();

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Precondition or parameter-range violation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Calls f(i) for every set bit i below limit, in increasing order.
template <class F>
inline void for_each_bit(const VertexBits& bits, std::size_t limit, F&& f) {
#if defined(__GLIBCXX__)
    for (std::size_t i = bits._Find_first(); i < limit; i = bits._Find_next(i)) f(static_cast<Vertex>(i));
#else
    for (std::size_t i = 0; i < limit; ++i)
        if (bits.test(i)) f(static_cast<Vertex>(i));
#endif
}

/// A subset of the vertex universe {0, ..., n-1} of one graph.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t n) : n_(n) {}
    VertexSet(std::size_t n, const VertexBits& bits) : n_(n), bits_(bits) { trim(); }

    std::size_t universe() const { return n_; }
    std::size_t size() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }
    bool contains(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < n_ && bits_.test(v); }
    void insert(Vertex v);
    void erase(Vertex v) { bits_.reset(v); }
    const VertexBits& bits() const { return bits_; }

    std::vector<Vertex> members() const;
    template <class F>
    void for_each(F&& f) const { for_each_bit(bits_, n_, std::forward<F>(f)); }

    VertexSet operator&(const VertexSet& o) const { return {n_, bits_ & o.bits_}; }
    VertexSet operator|(const VertexSet& o) const { return {n_, bits_ | o.bits_}; }
    /// Set difference.
    VertexSet operator-(const VertexSet& o) const { return {n_, bits_ & ~o.bits_}; }
    bool operator==(const VertexSet& o) const = default;

private:
    void trim();

    std::size_t n_ = 0;
    VertexBits bits_;
};

struct Edge {
    Vertex a;  // a < b
    Vertex b;
    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

/// Immutable undirected simple graph on vertices 0..n-1. Build with GraphBuilder.
class Graph {
public:
    Graph() = default;

    std::size_t order() const { return rows_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    bool adjacent(Vertex a, Vertex b) const { return rows_[a].test(b); }
    const VertexBits& row(Vertex v) const { return rows_[v]; }
    VertexSet neighbors(Vertex v) const { return {order(), rows_[v]}; }
    std::size_t degree(Vertex v) const { return rows_[v].count(); }
    VertexSet all_vertices() const;

    /// Edges with a < b, sorted lexicographically.
    std::vector<Edge> edges() const;

    /// Number of edges with one end in x and the other in y. Edges inside
    /// x ∩ y are counted once, so count_edges(s, s) is |E(G[s])|.
    std::size_t count_edges(const VertexSet& x, const VertexSet& y) const;

    /// The graph obtained by sending vertex v to perm[v].
    Graph relabeled(const std::vector<Vertex>& perm) const;

    bool operator==(const Graph& o) const { return rows_ == o.rows_; }

private:
    friend class GraphBuilder;
    std::vector<VertexBits> rows_;
    std::size_t edge_count_ = 0;
};

class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n);

    std::size_t order() const { return rows_.size(); }
    /// Adds edge {a,b}; throws DomainError on loops or out-of-range ends.
    /// Adding an existing edge is a no-op.
    GraphBuilder& add_edge(Vertex a, Vertex b);
    bool has_edge(Vertex a, Vertex b) const { return rows_[a].test(b); }

    Graph freeze() &&;
    Graph build() const&;

private:
    std::vector<VertexBits> rows_;
    std::size_t edge_count_ = 0;
};

struct BasicQueries {
    std::vector<std::size_t> degree_sequence;  // ascending
    bool is_regular = false;
    std::size_t k = 0;  // common degree when regular
    bool is_connected = false;
};

BasicQueries basic_queries(const Graph& g);

/// Breadth-first distances from source; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

bool is_connected(const Graph& g);

}  // namespace girthlab
