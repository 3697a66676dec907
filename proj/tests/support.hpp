#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "girthlab/graph.hpp"
#include "girthlab/graph6.hpp"
#include "girthlab/search.hpp"

namespace support {

/// Random simple k-regular graph on n vertices by the pairing model with
/// restarts; nullopt-free because callers pick feasible (n, k).
inline girthlab::Graph random_regular(int n, int k, std::mt19937_64& rng) {
    while (true) {
        std::vector<int> points;
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < k; ++i) points.push_back(v);
        std::shuffle(points.begin(), points.end(), rng);
        girthlab::GraphBuilder b(static_cast<std::size_t>(n));
        bool ok = true;
        for (std::size_t i = 0; i + 1 < points.size() && ok; i += 2) {
            const int x = points[i], y = points[i + 1];
            if (x == y || b.has_edge(x, y))
                ok = false;
            else
                b.add_edge(x, y);
        }
        if (ok) return std::move(b).freeze();
    }
}

inline girthlab::Graph random_relabel(const girthlab::Graph& g, std::mt19937_64& rng) {
    std::vector<girthlab::Vertex> perm(g.order());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<girthlab::Vertex>(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    return g.relabeled(perm);
}

/// Connected cubic graphs of girth 5 on exactly n vertices, one per class.
inline std::vector<girthlab::Graph> cubic_girth5(int n) {
    girthlab::SearchConfig c;
    c.k = 3;
    c.g = 5;
    c.n_min = n;
    c.n_max = n;
    c.girth_mode = girthlab::GirthMode::Exactly;
    std::vector<girthlab::Graph> out;
    girthlab::generate(c, [&](const girthlab::Graph& g) { out.push_back(g); });
    return out;
}

}  // namespace support
