#include "girthlab/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "girthlab/graph6.hpp"

namespace girthlab {
namespace {

constexpr std::size_t kMaxStoredAutomorphisms = 64;

/// Ordered partition of the vertex set: lab lists vertices, cells are
/// contiguous ranges of lab, and cell_start[v] is the first position of the
/// cell holding v.
struct Partition {
    std::vector<Vertex> lab;
    std::vector<int> cell_start;  // by vertex
    std::vector<int> cell_size;   // by start position, valid at starts only
    int cells = 0;

    bool discrete() const { return cells == static_cast<int>(lab.size()); }
};

Partition initial_partition(std::size_t n, std::span<const std::uint64_t> colors) {
    Partition p;
    p.lab.resize(n);
    std::iota(p.lab.begin(), p.lab.end(), 0);
    p.cell_start.assign(n, 0);
    p.cell_size.assign(n, 0);
    if (!colors.empty())
        std::stable_sort(p.lab.begin(), p.lab.end(), [&](Vertex a, Vertex b) { return colors[a] < colors[b]; });
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        while (j < n && !colors.empty() && colors[p.lab[j]] == colors[p.lab[i]]) ++j;
        if (colors.empty()) j = n;
        for (std::size_t t = i; t < j; ++t) p.cell_start[p.lab[t]] = static_cast<int>(i);
        p.cell_size[i] = static_cast<int>(j - i);
        ++p.cells;
        i = j;
    }
    return p;
}

class Canonizer {
public:
    explicit Canonizer(const Graph& g) : g_(g), n_(g.order()), words_((n_ + 63) / 64) {}

    CanonicalForm run(std::span<const std::uint64_t> colors) {
        Partition p = initial_partition(n_, colors);
        std::vector<char> active(n_, 0);
        for (std::size_t s = 0; s < n_; s += std::max(1, p.cell_size[s])) active[s] = 1;
        std::vector<Vertex> prefix;
        search(p, active, prefix);

        CanonicalForm out;
        out.order = best_lab_;
        out.position.assign(n_, 0);
        for (std::size_t i = 0; i < n_; ++i) out.position[best_lab_[i]] = static_cast<Vertex>(i);
        out.graph = g_.relabeled(out.position);
        out.certificate = std::move(best_);
        out.leaves_visited = leaves_;
        return out;
    }

private:
    void refine(Partition& p, std::vector<char>& active) const {
        std::vector<int> count(n_);
        std::vector<Vertex> scratch;
        while (true) {
            const auto it = std::find(active.begin(), active.end(), 1);
            if (it == active.end() || p.discrete()) break;
            const auto w = static_cast<std::size_t>(it - active.begin());
            *it = 0;
            VertexBits splitter;
            for (int t = 0; t < p.cell_size[w]; ++t) splitter.set(p.lab[w + t]);
            for (std::size_t v = 0; v < n_; ++v) count[v] = static_cast<int>((g_.row(static_cast<Vertex>(v)) & splitter).count());

            for (std::size_t s = 0; s < n_;) {
                const int size = p.cell_size[s];
                if (size > 1) split_cell(p, active, s, count, scratch);
                s += size;
            }
        }
    }

    void split_cell(Partition& p, std::vector<char>& active, std::size_t s, const std::vector<int>& count,
                    std::vector<Vertex>& scratch) const {
        const int size = p.cell_size[s];
        auto begin = p.lab.begin() + static_cast<std::ptrdiff_t>(s);
        auto end = begin + size;
        const int first = count[*begin];
        if (std::all_of(begin, end, [&](Vertex v) { return count[v] == first; })) return;
        scratch.assign(begin, end);
        std::stable_sort(scratch.begin(), scratch.end(), [&](Vertex a, Vertex b) { return count[a] < count[b]; });
        std::copy(scratch.begin(), scratch.end(), begin);
        std::size_t i = s;
        const std::size_t stop = s + static_cast<std::size_t>(size);
        --p.cells;
        while (i < stop) {
            std::size_t j = i + 1;
            while (j < stop && count[p.lab[j]] == count[p.lab[i]]) ++j;
            for (std::size_t t = i; t < j; ++t) p.cell_start[p.lab[t]] = static_cast<int>(i);
            p.cell_size[i] = static_cast<int>(j - i);
            active[i] = 1;
            ++p.cells;
            i = j;
        }
    }

    std::vector<std::uint64_t> certificate_of(const Partition& p) const {
        std::vector<int> pos(n_);
        for (std::size_t i = 0; i < n_; ++i) pos[p.lab[i]] = static_cast<int>(i);
        std::vector<std::uint64_t> cert(n_ * words_, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            std::uint64_t* row = cert.data() + i * words_;
            for_each_bit(g_.row(p.lab[i]), n_, [&](Vertex y) {
                const auto b = static_cast<std::size_t>(pos[y]);
                // most significant bit first so lexicographic word order matches bit order
                row[b / 64] |= std::uint64_t{1} << (63 - b % 64);
            });
        }
        return cert;
    }

    void leaf(const Partition& p) {
        ++leaves_;
        auto cert = certificate_of(p);
        if (best_lab_.empty() || cert < best_) {
            best_ = std::move(cert);
            best_lab_ = p.lab;
        } else if (cert == best_ && automorphisms_.size() < kMaxStoredAutomorphisms) {
            std::vector<Vertex> gamma(n_);
            for (std::size_t i = 0; i < n_; ++i) gamma[p.lab[i]] = best_lab_[i];
            automorphisms_.push_back(std::move(gamma));
        }
    }

    static Vertex find(std::vector<Vertex>& parent, Vertex x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    /// Orbit representatives under stored automorphisms fixing prefix pointwise.
    std::vector<Vertex> orbits_fixing(const std::vector<Vertex>& prefix) const {
        std::vector<Vertex> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        for (const auto& gamma : automorphisms_) {
            if (!std::all_of(prefix.begin(), prefix.end(), [&](Vertex v) { return gamma[v] == v; })) continue;
            for (std::size_t v = 0; v < n_; ++v) {
                const Vertex a = find(parent, static_cast<Vertex>(v));
                const Vertex b = find(parent, gamma[v]);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        for (std::size_t v = 0; v < n_; ++v) parent[v] = find(parent, static_cast<Vertex>(v));
        return parent;
    }

    void search(Partition& p, std::vector<char>& active, std::vector<Vertex>& prefix) {
        refine(p, active);
        if (p.discrete()) {
            leaf(p);
            return;
        }
        std::size_t target = 0;
        while (p.cell_size[target] == 1) ++target;
        std::vector<Vertex> members(p.lab.begin() + static_cast<std::ptrdiff_t>(target),
                                    p.lab.begin() + static_cast<std::ptrdiff_t>(target) + p.cell_size[target]);
        std::sort(members.begin(), members.end());

        std::vector<Vertex> explored_roots;
        std::size_t seen_automorphisms = automorphisms_.size();
        std::vector<Vertex> orbit = orbits_fixing(prefix);
        for (const Vertex x : members) {
            if (automorphisms_.size() != seen_automorphisms) {
                orbit = orbits_fixing(prefix);
                seen_automorphisms = automorphisms_.size();
            }
            if (std::any_of(explored_roots.begin(), explored_roots.end(), [&](Vertex e) { return orbit[e] == orbit[x]; }))
                continue;
            explored_roots.push_back(x);

            Partition child = p;
            std::vector<char> child_active(n_, 0);
            individualize(child, target, x);
            child_active[target] = 1;
            prefix.push_back(x);
            search(child, child_active, prefix);
            prefix.pop_back();
        }
    }

    static void individualize(Partition& p, std::size_t s, Vertex x) {
        const int size = p.cell_size[s];
        auto begin = p.lab.begin() + static_cast<std::ptrdiff_t>(s);
        std::rotate(begin, std::find(begin, begin + size, x), std::find(begin, begin + size, x) + 1);
        p.cell_size[s] = 1;
        p.cell_size[s + 1] = size - 1;
        p.cell_start[x] = static_cast<int>(s);
        for (int t = 1; t < size; ++t) p.cell_start[p.lab[s + t]] = static_cast<int>(s + 1);
        ++p.cells;
    }

    const Graph& g_;
    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> best_;
    std::vector<Vertex> best_lab_;
    std::vector<std::vector<Vertex>> automorphisms_;
    std::size_t leaves_ = 0;
};

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g, std::span<const std::uint64_t> initial_colors) {
    if (!initial_colors.empty() && initial_colors.size() != g.order())
        throw DomainError("initial coloring size does not match graph order");
    if (g.order() == 0) {
        CanonicalForm out;
        out.graph = g;
        return out;
    }
    return Canonizer(g).run(initial_colors);
}

std::vector<std::uint64_t> distance_layer_invariant(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::uint64_t> out(n);
    for (std::size_t v = 0; v < n; ++v) {
        VertexBits seen;
        VertexBits layer;
        seen.set(v);
        layer.set(v);
        std::uint64_t h = 0;
        while (layer.any()) {
            VertexBits next;
            std::uint64_t inner = 0;
            for_each_bit(layer, n, [&](Vertex x) {
                next |= g.row(x);
                inner += (g.row(x) & layer).count();
            });
            next &= ~seen;
            seen |= next;
            h = mix(mix(h, layer.count()), inner / 2);
            layer = next;
        }
        out[v] = h;
    }
    return out;
}

std::string canonical_key(const Graph& g) {
    const auto colors = distance_layer_invariant(g);
    return write_graph6(canonical_form(g, colors).graph);
}

}  // namespace girthlab
