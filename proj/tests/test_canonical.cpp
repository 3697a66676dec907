#include <doctest.h>

#include <random>

#include "girthlab/canonical.hpp"
#include "girthlab/graph6.hpp"
#include "girthlab/named_graphs.hpp"
#include "oracles/boost_iso.hpp"
#include "support.hpp"

using namespace girthlab;

TEST_CASE("canonical form is a relabeling of the input") {
    const Graph g = named_graph(NamedGraphId::heawood());
    const CanonicalForm cf = canonical_form(g);
    CHECK(cf.graph == g.relabeled(cf.position));
    for (std::size_t i = 0; i < g.order(); ++i) CHECK(cf.position[cf.order[i]] == static_cast<Vertex>(i));
}

TEST_CASE("canonical form ignores the input labeling") {
    std::mt19937_64 rng(11);
    const NamedGraphId ids[] = {NamedGraphId::petersen(), NamedGraphId::dodecahedron(), NamedGraphId::heawood(),
                                NamedGraphId::complete_bipartite(4, 4), NamedGraphId::complete(6),
                                NamedGraphId::cycle(11), NamedGraphId::path(7)};
    for (const auto& id : ids) {
        CAPTURE(id.to_string());
        const Graph g = named_graph(id);
        const std::string key = canonical_key(g);
        const auto cert = canonical_form(g).certificate;
        for (int t = 0; t < 10; ++t) {
            const Graph r = support::random_relabel(g, rng);
            CHECK(canonical_key(r) == key);
            CHECK(canonical_form(r).certificate == cert);
        }
    }
}

TEST_CASE("keys separate exactly the classes boost separates") {
    std::mt19937_64 rng(5);
    std::vector<Graph> pool;
    for (int i = 0; i < 30; ++i) pool.push_back(support::random_regular(10, 3, rng));
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j)
            CHECK((canonical_key(pool[i]) == canonical_key(pool[j])) == oracle::boost_isomorphic(pool[i], pool[j]));
}

TEST_CASE("automorphism pruning keeps the search small on symmetric graphs") {
    const CanonicalForm cf = canonical_form(named_graph(NamedGraphId::petersen()));
    // |Aut| = 120; without pruning every automorphism would cost a leaf
    CHECK(cf.leaves_visited < 120);
}

TEST_CASE("initial colors are respected") {
    const Graph g = named_graph(NamedGraphId::cycle(6));
    std::vector<std::uint64_t> colors(6, 1);
    colors[4] = 0;
    const CanonicalForm cf = canonical_form(g, colors);
    CHECK(cf.order[0] == 4);
    CHECK_THROWS_AS(canonical_form(g, std::vector<std::uint64_t>(3, 0)), DomainError);
}

TEST_CASE("distance layer invariant is constant on vertex-transitive graphs") {
    for (const auto& id : {NamedGraphId::petersen(), NamedGraphId::dodecahedron(), NamedGraphId::heawood()}) {
        const auto inv = distance_layer_invariant(named_graph(id));
        CHECK(std::all_of(inv.begin(), inv.end(), [&](std::uint64_t x) { return x == inv[0]; }));
    }
    const auto path = distance_layer_invariant(named_graph(NamedGraphId::path(5)));
    CHECK(path[0] == path[4]);
    CHECK(path[0] != path[2]);
}
