#include <doctest.h>

#include <cstdlib>

#include "girthlab/graph.hpp"
#include "girthlab/named_graphs.hpp"
#include "oracles/boost_iso.hpp"
#include "oracles/naive.hpp"

using namespace girthlab;

TEST_CASE("builder rejects loops and out-of-range ends") {
    GraphBuilder b(4);
    CHECK_THROWS_AS(b.add_edge(1, 1), DomainError);
    CHECK_THROWS_AS(b.add_edge(0, 4), DomainError);
    CHECK_THROWS_AS(b.add_edge(-1, 2), DomainError);
    b.add_edge(0, 1).add_edge(1, 0);
    const Graph g = b.build();
    CHECK(g.edge_count() == 1);
    CHECK(g.adjacent(1, 0));
}

TEST_CASE("builder enforces the vertex cap") {
    CHECK_THROWS_AS(GraphBuilder(kMaxVertices + 1), DomainError);
    ::setenv("GIRTHLAB_MAX_N", "12", 1);
    CHECK(vertex_cap() == 12);
    CHECK_THROWS_AS(GraphBuilder(13), DomainError);
    ::unsetenv("GIRTHLAB_MAX_N");
    CHECK(vertex_cap() == kMaxVertices);
}

TEST_CASE("basic queries") {
    const Graph p = named_graph(NamedGraphId::petersen());
    const auto q = basic_queries(p);
    CHECK(q.is_regular);
    CHECK(q.k == 3);
    CHECK(q.is_connected);
    CHECK(p.edge_count() == 15);

    GraphBuilder b(5);
    b.add_edge(0, 1).add_edge(1, 2).add_edge(3, 4);
    const Graph two = std::move(b).freeze();
    const auto r = basic_queries(two);
    CHECK_FALSE(r.is_regular);
    CHECK_FALSE(r.is_connected);
    CHECK(r.degree_sequence == std::vector<std::size_t>{1, 1, 1, 1, 2});
    CHECK(bfs_distances(two, 0) == std::vector<int>{0, 1, 2, -1, -1});
}

TEST_CASE("count_edges against a pairwise scan") {
    const Graph d = named_graph(NamedGraphId::dodecahedron());
    const auto m = oracle::matrix_of(d);
    for (unsigned mask = 1; mask < 64; mask += 7) {
        VertexSet x(d.order()), y(d.order());
        for (int v = 0; v < 20; ++v) {
            if ((mask >> (v % 6)) & 1) x.insert(v);
            if ((v * 7 + mask) % 3 == 0) y.insert(v);
        }
        std::size_t expect = 0;
        for (int p = 0; p < 20; ++p)
            for (int q = p + 1; q < 20; ++q)
                if (m[p][q] && ((x.contains(p) && y.contains(q)) || (x.contains(q) && y.contains(p)))) ++expect;
        CHECK(d.count_edges(x, y) == expect);
        CHECK(d.count_edges(x, y) == d.count_edges(y, x));
    }
    CHECK(d.count_edges(d.all_vertices(), d.all_vertices()) == 30);
}

TEST_CASE("vertex set algebra") {
    VertexSet a(6), b(6);
    a.insert(1);
    a.insert(3);
    b.insert(3);
    b.insert(5);
    CHECK((a & b).members() == std::vector<Vertex>{3});
    CHECK((a | b).members() == std::vector<Vertex>{1, 3, 5});
    CHECK((a - b).members() == std::vector<Vertex>{1});
    CHECK_THROWS_AS(a.insert(6), DomainError);
    CHECK_FALSE(a.contains(-1));
}

TEST_CASE("relabeling preserves structure") {
    const Graph h = named_graph(NamedGraphId::heawood());
    std::vector<Vertex> perm(h.order());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<Vertex>((i * 5 + 3) % perm.size());
    const Graph r = h.relabeled(perm);
    CHECK(r.edge_count() == h.edge_count());
    for (const auto& e : h.edges()) CHECK(r.adjacent(perm[e.a], perm[e.b]));
}

TEST_CASE("named graph parsing") {
    CHECK(NamedGraphId::parse("petersen").kind == NamedGraphKind::Petersen);
    const auto kb = NamedGraphId::parse("complete_bipartite(3,3)");
    CHECK(kb.kind == NamedGraphKind::CompleteBipartite);
    CHECK(kb.a == 3);
    CHECK(kb.b == 3);
    CHECK(NamedGraphId::parse("cycle(7)").to_string() == "cycle(7)");
    CHECK_THROWS_AS(NamedGraphId::parse("tutte"), DomainError);
    CHECK_THROWS_AS(NamedGraphId::parse("cycle(5"), DomainError);
    CHECK_THROWS_AS(NamedGraphId::parse("cycle(x)"), DomainError);
    CHECK_THROWS_AS(NamedGraphId::parse("complete_bipartite(3)"), DomainError);
    CHECK_THROWS_AS(named_graph(NamedGraphId::cycle(2)), DomainError);
}

TEST_CASE("named graphs have the expected shape") {
    struct Row {
        NamedGraphId id;
        std::size_t n, m;
    };
    for (const Row& r : {Row{NamedGraphId::petersen(), 10, 15}, Row{NamedGraphId::dodecahedron(), 20, 30},
                         Row{NamedGraphId::heawood(), 14, 21}, Row{NamedGraphId::complete(4), 4, 6},
                         Row{NamedGraphId::complete_bipartite(3, 3), 6, 9}, Row{NamedGraphId::cycle(5), 5, 5},
                         Row{NamedGraphId::path(4), 4, 3}}) {
        const Graph g = named_graph(r.id);
        CHECK(g.order() == r.n);
        CHECK(g.edge_count() == r.m);
    }
    // the Kneser construction of Petersen against a textbook drawing
    GraphBuilder b(10);
    for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    CHECK(oracle::boost_isomorphic(named_graph(NamedGraphId::petersen()), std::move(b).freeze()));
}
