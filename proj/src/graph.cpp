#include "girthlab/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>

namespace girthlab {

std::size_t vertex_cap() {
    if (const char* env = std::getenv("GIRTHLAB_MAX_N")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return std::min<std::size_t>(v, kMaxVertices);
    }
    return kMaxVertices;
}

void VertexSet::insert(Vertex v) {
    if (v < 0 || static_cast<std::size_t>(v) >= n_)
        throw DomainError("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(n_));
    bits_.set(v);
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

void VertexSet::trim() {
    for (std::size_t i = n_; i < kMaxVertices; ++i) bits_.reset(i);
}

VertexSet Graph::all_vertices() const {
    VertexBits b;
    for (std::size_t i = 0; i < order(); ++i) b.set(i);
    return {order(), b};
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t a = 0; a < order(); ++a)
        for_each_bit(rows_[a], order(), [&](Vertex b) {
            if (static_cast<std::size_t>(b) > a) out.push_back({static_cast<Vertex>(a), b});
        });
    return out;
}

std::size_t Graph::count_edges(const VertexSet& x, const VertexSet& y) const {
    std::size_t ordered = 0;
    x.for_each([&](Vertex a) { ordered += (rows_[a] & y.bits()).count(); });
    const VertexSet both = x & y;
    std::size_t inside_twice = 0;
    both.for_each([&](Vertex a) { inside_twice += (rows_[a] & both.bits()).count(); });
    return ordered - inside_twice / 2;
}

Graph Graph::relabeled(const std::vector<Vertex>& perm) const {
    GraphBuilder b(order());
    for (const Edge& e : edges()) b.add_edge(perm[e.a], perm[e.b]);
    return std::move(b).freeze();
}

GraphBuilder::GraphBuilder(std::size_t n) : rows_(n) {
    if (n > vertex_cap())
        throw DomainError("graph order " + std::to_string(n) + " exceeds vertex cap " + std::to_string(vertex_cap()));
}

GraphBuilder& GraphBuilder::add_edge(Vertex a, Vertex b) {
    const auto n = static_cast<Vertex>(rows_.size());
    if (a < 0 || b < 0 || a >= n || b >= n)
        throw DomainError("edge {" + std::to_string(a) + "," + std::to_string(b) + "} out of range");
    if (a == b) throw DomainError("loop at vertex " + std::to_string(a));
    if (!rows_[a].test(b)) {
        rows_[a].set(b);
        rows_[b].set(a);
        ++edge_count_;
    }
    return *this;
}

Graph GraphBuilder::freeze() && {
    Graph g;
    g.rows_ = std::move(rows_);
    g.edge_count_ = edge_count_;
    rows_.clear();
    edge_count_ = 0;
    return g;
}

Graph GraphBuilder::build() const& {
    GraphBuilder copy = *this;
    return std::move(copy).freeze();
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    const std::size_t n = g.order();
    std::vector<int> dist(n, -1);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const Vertex x = queue.front();
        queue.pop_front();
        for_each_bit(g.row(x), n, [&](Vertex y) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        });
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    const auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

BasicQueries basic_queries(const Graph& g) {
    BasicQueries q;
    q.degree_sequence.reserve(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) q.degree_sequence.push_back(g.degree(static_cast<Vertex>(v)));
    std::sort(q.degree_sequence.begin(), q.degree_sequence.end());
    q.is_regular = q.degree_sequence.empty() || q.degree_sequence.front() == q.degree_sequence.back();
    if (q.is_regular && !q.degree_sequence.empty()) q.k = q.degree_sequence.front();
    q.is_connected = is_connected(g);
    return q;
}

}  // namespace girthlab
