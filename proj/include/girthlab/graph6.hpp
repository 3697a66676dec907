#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "girthlab/graph.hpp"

namespace girthlab {

/// Malformed graph6/sparse6 input. offset is the 0-based byte position of the
/// offending character within the line (header included).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Decodes one graph6 line. A leading ">>graph6<<" header and a trailing
/// newline are accepted.
Graph parse_graph6(std::string_view line);

/// Canonical graph6 encoding (no header, zero padding bits).
std::string write_graph6(const Graph& g);

/// Decodes one sparse6 line (leading ':' required, ">>sparse6<<" header
/// accepted). Loops and parallel edges are rejected: Graph is simple.
Graph parse_sparse6(std::string_view line);

/// sparse6 encoding with the standard padding rule.
std::string write_sparse6(const Graph& g);

/// Dispatches on the leading ':' (sparse6) versus graph6.
Graph parse_graph_line(std::string_view line);

}  // namespace girthlab
