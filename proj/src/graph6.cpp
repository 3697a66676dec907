#include "girthlab/graph6.hpp"

#include <algorithm>
#include <vector>

namespace girthlab {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::string_view kSparse6Header = ">>sparse6<<";

std::string_view strip_eol(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

int sextet(std::string_view s, std::size_t pos) {
    if (pos >= s.size()) throw ParseError("unexpected end of input", pos);
    const int c = static_cast<unsigned char>(s[pos]);
    if (c < kBias || c > 126) throw ParseError("byte outside printable range 63..126", pos);
    return c - kBias;
}

/// Reads N(n) starting at pos; advances pos past it.
std::size_t read_order(std::string_view s, std::size_t& pos) {
    if (pos >= s.size()) throw ParseError("missing length prefix", pos);
    const std::size_t start = pos;
    const int first = sextet(s, pos);
    if (first != 63) {
        ++pos;
        return static_cast<std::size_t>(first);
    }
    if (pos + 1 >= s.size()) throw ParseError("truncated length prefix", start);
    std::size_t n = 0;
    int width = 3;
    pos += 1;
    if (sextet(s, pos) == 63) {
        width = 6;
        pos += 1;
    }
    for (int i = 0; i < width; ++i) {
        if (pos >= s.size()) throw ParseError("truncated length prefix", start);
        n = (n << 6) | static_cast<std::size_t>(sextet(s, pos));
        ++pos;
    }
    if (width == 3 && n < 63) throw ParseError("non-minimal length prefix", start);
    return n;
}

void write_order(std::string& out, std::size_t n) {
    if (n < 63) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
    }
}

void check_cap(std::size_t n, std::size_t offset) {
    if (n > vertex_cap())
        throw ParseError("graph order " + std::to_string(n) + " exceeds maximum " + std::to_string(vertex_cap()), offset);
}

std::string_view skip_header(std::string_view s, std::string_view header, std::size_t& pos) {
    if (s.substr(0, header.size()) == header) pos = header.size();
    return s;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    std::string_view s = strip_eol(line);
    std::size_t pos = 0;
    skip_header(s, kGraph6Header, pos);
    const std::size_t prefix_at = pos;
    const std::size_t n = read_order(s, pos);
    check_cap(n, prefix_at);

    const std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (s.size() - pos < nbytes) throw ParseError("payload too short for " + std::to_string(n) + " vertices", s.size());
    if (s.size() - pos > nbytes) throw ParseError("trailing bytes after payload", pos + nbytes);

    GraphBuilder b(n);
    std::size_t bit = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++bit) {
            const int word = sextet(s, pos + bit / 6);
            if (word & (1 << (5 - bit % 6))) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    if (nbytes > 0) {
        const std::size_t last = pos + nbytes - 1;
        const int word = sextet(s, last);
        const std::size_t used = nbits - 6 * (nbytes - 1);
        if (word & ((1 << (6 - used)) - 1)) throw ParseError("nonzero padding bits", last);
    }
    return std::move(b).freeze();
}

std::string write_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    write_order(out, n);
    int acc = 0;
    int filled = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

namespace {

int sparse6_width(std::size_t n) {
    int k = 1;
    while ((std::size_t{1} << k) < n) ++k;
    return k;
}

}  // namespace

Graph parse_sparse6(std::string_view line) {
    std::string_view s = strip_eol(line);
    std::size_t pos = 0;
    skip_header(s, kSparse6Header, pos);
    if (pos >= s.size() || s[pos] != ':') throw ParseError("sparse6 line must start with ':'", pos);
    ++pos;
    const std::size_t prefix_at = pos;
    const std::size_t n = read_order(s, pos);
    check_cap(n, prefix_at);
    const int k = sparse6_width(n);

    // Bit reader over the remaining sextets.
    const std::size_t data_begin = pos;
    const std::size_t total_bits = (s.size() - data_begin) * 6;
    std::size_t cursor = 0;
    auto read_bits = [&](int count, std::size_t& value) -> bool {
        if (cursor + static_cast<std::size_t>(count) > total_bits) return false;
        value = 0;
        for (int i = 0; i < count; ++i, ++cursor) {
            const int word = sextet(s, data_begin + cursor / 6);
            value = (value << 1) | static_cast<std::size_t>((word >> (5 - cursor % 6)) & 1);
        }
        return true;
    };

    GraphBuilder b(n);
    std::size_t v = 0;
    while (true) {
        const std::size_t at = data_begin + cursor / 6;
        std::size_t bflag = 0;
        std::size_t x = 0;
        if (!read_bits(1, bflag)) break;
        if (!read_bits(k, x)) break;
        if (bflag) ++v;
        if (x >= n || v >= n) break;
        if (x > v) {
            v = x;
        } else {
            if (x == v) throw ParseError("loop in sparse6 input", at);
            if (b.has_edge(static_cast<Vertex>(x), static_cast<Vertex>(v)))
                throw ParseError("parallel edge in sparse6 input", at);
            b.add_edge(static_cast<Vertex>(x), static_cast<Vertex>(v));
        }
    }
    return std::move(b).freeze();
}

std::string write_sparse6(const Graph& g) {
    const std::size_t n = g.order();
    const int k = sparse6_width(n);
    std::vector<int> bits;
    auto put = [&](std::size_t x) {
        for (int i = k - 1; i >= 0; --i) bits.push_back(static_cast<int>((x >> i) & 1));
    };
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const Edge& e : g.edges()) edges.emplace_back(e.b, e.a);
    std::sort(edges.begin(), edges.end());

    std::size_t current = 0;
    for (const auto& [hi, lo] : edges) {
        const auto v = static_cast<std::size_t>(hi);
        if (v == current) {
            bits.push_back(0);
            put(static_cast<std::size_t>(lo));
        } else if (v == current + 1) {
            current = v;
            bits.push_back(1);
            put(static_cast<std::size_t>(lo));
        } else {
            current = v;
            bits.push_back(1);
            put(v);
            bits.push_back(0);
            put(static_cast<std::size_t>(lo));
        }
    }
    const std::size_t pad = (6 - bits.size() % 6) % 6;
    if (k < 6 && n == (std::size_t{1} << k) && pad >= static_cast<std::size_t>(k) && current < n - 1) {
        bits.push_back(0);
        const std::size_t rest = (6 - bits.size() % 6) % 6;
        bits.insert(bits.end(), rest, 1);
    } else {
        bits.insert(bits.end(), pad, 1);
    }

    std::string out = ":";
    write_order(out, n);
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int word = 0;
        for (std::size_t j = 0; j < 6; ++j) word = (word << 1) | bits[i + j];
        out.push_back(static_cast<char>(word + kBias));
    }
    return out;
}

Graph parse_graph_line(std::string_view line) {
    if (line.substr(0, kSparse6Header.size()) == kSparse6Header || (!line.empty() && line.front() == ':'))
        return parse_sparse6(line);
    return parse_graph6(line);
}

}  // namespace girthlab
