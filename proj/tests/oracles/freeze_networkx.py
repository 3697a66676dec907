"""Regenerates networkx_frozen.hpp: girth-cycle data for small named graphs,
counted with networkx's bounded simple-cycle enumeration (independent of the
library under test)."""
import networkx as nx

GRAPHS = {
    "petersen": nx.petersen_graph(),
    "k4": nx.complete_graph(4),
    "dodecahedron": nx.dodecahedral_graph(),
    "heawood": nx.heawood_graph(),
    "k33": nx.complete_bipartite_graph(3, 3),
    "c5": nx.cycle_graph(5),
}


def profile(g):
    girth = nx.girth(g)
    cycles = [c for c in nx.simple_cycles(g, length_bound=girth) if len(c) == girth]
    per_vertex = {v: 0 for v in g}
    per_edge = {frozenset(e): 0 for e in g.edges()}
    for c in cycles:
        for i, v in enumerate(c):
            per_vertex[v] += 1
            per_edge[frozenset((v, c[(i + 1) % len(c)]))] += 1
    return girth, len(cycles), sorted(set(per_vertex.values())), sorted(set(per_edge.values()))


def main():
    print("#pragma once\n")
    print("// Generated by freeze_networkx.py (networkx %s). Do not edit.\n" % nx.__version__)
    print("#include <cstdint>\n#include <string_view>\n")
    print("namespace frozen {\n")
    print("struct NamedProfile {\n    std::string_view name;\n    std::string_view graph6;\n    int girth;\n"
          "    std::uint64_t cycles;\n    std::uint64_t lambda;  // common per-vertex count\n"
          "    std::uint64_t edge_count;  // common per-edge count\n};\n")
    print("inline constexpr NamedProfile kNamed[] = {")
    for name, g in GRAPHS.items():
        girth, total, pv, pe = profile(g)
        assert len(pv) == 1 and len(pe) == 1, name
        g6 = nx.to_graph6_bytes(g, header=False).decode().strip()
        g6 = g6.replace("\\", "\\\\")
        print('    {"%s", "%s", %d, %d, %d, %d},' % (name, g6, girth, total, pv[0], pe[0]))
    print("};\n")
    s6 = nx.to_sparse6_bytes(nx.petersen_graph(), header=False).decode().strip().replace("\\", "\\\\")
    print('inline constexpr std::string_view kPetersenSparse6 = "%s";\n' % s6)
    d = nx.dodecahedral_graph()
    layers = [0] * (nx.eccentricity(d, 0) + 1)
    for v, dist in nx.single_source_shortest_path_length(d, 0).items():
        layers[dist] += 1
    print("inline constexpr int kDodecahedronLayers[] = {%s};\n" % ", ".join(map(str, layers)))
    print("}  // namespace frozen")


if __name__ == "__main__":
    main()
