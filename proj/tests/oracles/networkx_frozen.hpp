#pragma once

// Generated by freeze_networkx.py (networkx 3.4.2). Do not edit.

#include <cstdint>
#include <string_view>

namespace frozen {

struct NamedProfile {
    std::string_view name;
    std::string_view graph6;
    int girth;
    std::uint64_t cycles;
    std::uint64_t lambda;  // common per-vertex count
    std::uint64_t edge_count;  // common per-edge count
};

inline constexpr NamedProfile kNamed[] = {
    {"petersen", "IheA@GUAo", 5, 12, 6, 4},
    {"k4", "C~", 3, 4, 3, 2},
    {"dodecahedron", "ShCHGD@?K?_@?@?C_GGG@??cG?G?GK_?C", 5, 12, 3, 2},
    {"heawood", "MhEGHC@AI?_PC@_G_", 6, 28, 12, 8},
    {"k33", "EFz_", 4, 9, 6, 4},
    {"c5", "Dhc", 5, 1, 1, 1},
};

inline constexpr std::string_view kPetersenSparse6 = ":I`ES@obGkqegW~";

inline constexpr int kDodecahedronLayers[] = {1, 3, 6, 6, 3, 1};

}  // namespace frozen
