#include "girthlab/girth.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace girthlab {

int Girth::length() const {
    if (is_acyclic()) throw DomainError("graph is acyclic");
    return length_;
}

Girth girth(const Graph& g) {
    const std::size_t n = g.order();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n);
    std::vector<Vertex> parent(n);
    std::vector<Vertex> queue(n);
    for (std::size_t r = 0; r < n; ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        std::size_t head = 0, tail = 0;
        queue[tail++] = static_cast<Vertex>(r);
        dist[r] = 0;
        parent[r] = -1;
        while (head < tail) {
            const Vertex x = queue[head++];
            if (2 * dist[x] + 1 >= best) break;
            for_each_bit(g.row(x), n, [&](Vertex y) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue[tail++] = y;
                } else if (y != parent[x]) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            });
        }
    }
    return best == std::numeric_limits<int>::max() ? Girth::acyclic() : Girth::of(best);
}

ShellDecomposition shell_decompose(const Graph& g, Vertex u) {
    const std::size_t n = g.order();
    if (u < 0 || static_cast<std::size_t>(u) >= n) throw DomainError("root " + std::to_string(u) + " out of range");
    ShellDecomposition s;
    s.root = u;
    s.n1 = g.neighbors(u);
    VertexBits reach;
    s.n1.for_each([&](Vertex w) { reach |= g.row(w); });
    VertexBits n2 = reach & ~s.n1.bits();
    n2.reset(u);
    s.n2 = VertexSet(n, n2);
    VertexSet rest = g.all_vertices() - s.n1 - s.n2;
    rest.erase(u);
    s.n3plus = rest;
    return s;
}

ShellDecomposition shell_decompose(const Graph& g, Vertex u, Girth known_girth) {
    ShellDecomposition s = shell_decompose(g, u);
    if (!known_girth.is_acyclic() && known_girth.length() >= 5) {
        const auto q = basic_queries(g);
        if (q.is_regular && s.n2.size() != q.k * (q.k - 1))
            throw std::logic_error("|N2(" + std::to_string(u) + ")| = " + std::to_string(s.n2.size()) +
                                   " contradicts k(k-1) for a girth >= 5 graph");
    }
    return s;
}

void GirthProfile::add_edge_count(Vertex a, Vertex b, std::uint64_t c) {
    edge_counts_[a * order() + b] += c;
    edge_counts_[b * order() + a] += c;
}

GirthProfile make_profile(std::size_t n, int girth) {
    GirthProfile p;
    p.girth = girth;
    p.per_vertex.assign(n, 0);
    p.edge_counts_.assign(n * n, 0);
    return p;
}

namespace {

// Each cycle is found once: its minimal vertex s is the anchor, and of the two
// directions the one whose second vertex is smaller than its last is kept.
class PathEnumerator {
public:
    PathEnumerator(const Graph& g, int length, GirthProfile& out)
        : g_(g), n_(g.order()), length_(length), out_(out), path_(length) {}

    void run() {
        for (std::size_t s = 0; s < n_; ++s) {
            path_[0] = static_cast<Vertex>(s);
            VertexBits used;
            used.set(s);
            extend(1, used);
        }
    }

private:
    void extend(int depth, VertexBits& used) {
        const Vertex s = path_[0];
        const Vertex last = path_[depth - 1];
        if (depth == length_) {
            if (g_.adjacent(last, s) && path_[1] < last) record();
            return;
        }
        for_each_bit(g_.row(last), n_, [&](Vertex next) {
            if (next <= s || used.test(next)) return;
            used.set(next);
            path_[depth] = next;
            extend(depth + 1, used);
            used.reset(next);
        });
    }

    void record() {
        ++out_.total_girth_cycles;
        for (int i = 0; i < length_; ++i) {
            ++out_.per_vertex[path_[i]];
            out_.add_edge_count(path_[i], path_[(i + 1) % length_], 1);
        }
    }

    const Graph& g_;
    std::size_t n_;
    int length_;
    GirthProfile& out_;
    std::vector<Vertex> path_;
};

bool neighborhood_engine_applies(const Graph& g, int girth_length) {
    if (girth_length != 5) return false;
    const auto q = basic_queries(g);
    return q.is_regular && q.k >= 2;
}

GirthProfile neighborhood_profile(const Graph& g) {
    const std::size_t n = g.order();
    GirthProfile p = make_profile(n, 5);
    std::uint64_t vertex_sum = 0;
    for (std::size_t v = 0; v < n; ++v) {
        const auto shells = shell_decompose(g, static_cast<Vertex>(v), Girth::of(5));
        p.per_vertex[v] = g.count_edges(shells.n2, shells.n2);
        vertex_sum += p.per_vertex[v];
        // A 5-cycle through v and its neighbor w uses one N2-edge leaving w's branch.
        shells.n1.for_each([&](Vertex w) {
            if (static_cast<std::size_t>(w) < v) return;
            VertexSet branch = g.neighbors(w) & shells.n2;
            p.add_edge_count(static_cast<Vertex>(v), w, g.count_edges(branch, shells.n2 - branch));
        });
    }
    p.total_girth_cycles = vertex_sum / 5;
    return p;
}

}  // namespace

GirthProfile girth_profile(const Graph& g, CycleEngine engine) {
    const Girth gi = girth(g);
    const int length = gi.length();
    if (engine == CycleEngine::Auto)
        engine = neighborhood_engine_applies(g, length) ? CycleEngine::Girth5Neighborhood : CycleEngine::PathEnumeration;
    if (engine == CycleEngine::Girth5Neighborhood) {
        if (!neighborhood_engine_applies(g, length))
            throw DomainError("neighborhood engine needs a regular graph of girth 5");
        return neighborhood_profile(g);
    }
    GirthProfile p = make_profile(g.order(), length);
    PathEnumerator(g, length, p).run();
    return p;
}

Signature signature(const Graph& g, Vertex v, const GirthProfile& profile) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.order()) throw DomainError("vertex " + std::to_string(v) + " out of range");
    Signature sig;
    for_each_bit(g.row(v), g.order(), [&](Vertex w) { sig.push_back(profile.edge(v, w)); });
    std::sort(sig.begin(), sig.end());
    return sig;
}

}  // namespace girthlab
