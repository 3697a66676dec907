#include "girthlab/named_graphs.hpp"

#include <charconv>
#include <utility>
#include <vector>

namespace girthlab {
namespace {

int parse_int(std::string_view s, std::string_view whole) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw DomainError("bad parameter in named graph '" + std::string(whole) + "'");
    return value;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError("invalid named graph parameters: " + what);
}

}  // namespace

NamedGraphId NamedGraphId::parse(std::string_view text) {
    std::string_view name = text;
    std::vector<int> args;
    if (const auto open = text.find('('); open != std::string_view::npos) {
        if (text.back() != ')') throw DomainError("unterminated parameter list in '" + std::string(text) + "'");
        name = text.substr(0, open);
        std::string_view inner = text.substr(open + 1, text.size() - open - 2);
        while (!inner.empty()) {
            const auto comma = inner.find(',');
            args.push_back(parse_int(inner.substr(0, comma), text));
            inner = comma == std::string_view::npos ? std::string_view{} : inner.substr(comma + 1);
        }
    }
    auto want = [&](std::size_t count) {
        if (args.size() != count) throw DomainError("'" + std::string(name) + "' takes " + std::to_string(count) + " parameter(s)");
    };
    if (name == "petersen") return want(0), petersen();
    if (name == "dodecahedron") return want(0), dodecahedron();
    if (name == "heawood") return want(0), heawood();
    if (name == "cycle") return want(1), cycle(args[0]);
    if (name == "path") return want(1), path(args[0]);
    if (name == "complete") return want(1), complete(args[0]);
    if (name == "complete_bipartite") return want(2), complete_bipartite(args[0], args[1]);
    throw DomainError("unknown named graph '" + std::string(text) + "'");
}

std::string NamedGraphId::to_string() const {
    switch (kind) {
        case NamedGraphKind::Cycle: return "cycle(" + std::to_string(a) + ")";
        case NamedGraphKind::Complete: return "complete(" + std::to_string(a) + ")";
        case NamedGraphKind::CompleteBipartite:
            return "complete_bipartite(" + std::to_string(a) + "," + std::to_string(b) + ")";
        case NamedGraphKind::Petersen: return "petersen";
        case NamedGraphKind::Dodecahedron: return "dodecahedron";
        case NamedGraphKind::Heawood: return "heawood";
        case NamedGraphKind::Path: return "path(" + std::to_string(a) + ")";
    }
    return "?";
}

Graph named_graph(const NamedGraphId& id) {
    switch (id.kind) {
        case NamedGraphKind::Cycle: {
            require(id.a >= 3, "cycle length must be at least 3");
            GraphBuilder b(id.a);
            for (int i = 0; i < id.a; ++i) b.add_edge(i, (i + 1) % id.a);
            return std::move(b).freeze();
        }
        case NamedGraphKind::Path: {
            require(id.a >= 1, "path needs at least one vertex");
            GraphBuilder b(id.a);
            for (int i = 0; i + 1 < id.a; ++i) b.add_edge(i, i + 1);
            return std::move(b).freeze();
        }
        case NamedGraphKind::Complete: {
            require(id.a >= 1, "complete graph needs at least one vertex");
            GraphBuilder b(id.a);
            for (int i = 0; i < id.a; ++i)
                for (int j = i + 1; j < id.a; ++j) b.add_edge(i, j);
            return std::move(b).freeze();
        }
        case NamedGraphKind::CompleteBipartite: {
            require(id.a >= 1 && id.b >= 1, "both sides must be nonempty");
            GraphBuilder b(id.a + id.b);
            for (int i = 0; i < id.a; ++i)
                for (int j = 0; j < id.b; ++j) b.add_edge(i, id.a + j);
            return std::move(b).freeze();
        }
        case NamedGraphKind::Petersen: {
            std::vector<std::pair<int, int>> subsets;
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j) subsets.emplace_back(i, j);
            GraphBuilder b(subsets.size());
            for (std::size_t x = 0; x < subsets.size(); ++x)
                for (std::size_t y = x + 1; y < subsets.size(); ++y) {
                    const auto [p, q] = subsets[x];
                    const auto [r, s] = subsets[y];
                    if (p != r && p != s && q != r && q != s) b.add_edge(static_cast<Vertex>(x), static_cast<Vertex>(y));
                }
            return std::move(b).freeze();
        }
        case NamedGraphKind::Dodecahedron: {
            // outer 10-cycle 0..9, spokes i ~ 10+i, inner i ~ i+2 (mod 10)
            GraphBuilder b(20);
            for (int i = 0; i < 10; ++i) {
                b.add_edge(i, (i + 1) % 10);
                b.add_edge(i, 10 + i);
                b.add_edge(10 + i, 10 + (i + 2) % 10);
            }
            return std::move(b).freeze();
        }
        case NamedGraphKind::Heawood: {
            // points 0..6, lines 7..13; line i = {i, i+1, i+3} mod 7
            GraphBuilder b(14);
            for (int i = 0; i < 7; ++i)
                for (int off : {0, 1, 3}) b.add_edge((i + off) % 7, 7 + i);
            return std::move(b).freeze();
        }
    }
    throw DomainError("unknown named graph kind");
}

}  // namespace girthlab
