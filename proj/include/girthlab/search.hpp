#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "girthlab/graph.hpp"

namespace girthlab {

enum class GirthMode { Exactly, AtLeast };

std::string to_string(GirthMode m);
GirthMode parse_girth_mode(const std::string& text);

struct SearchConfig {
    int k = 3;
    int g = 5;
    /// Smallest order tried; defaults to the size of the depth-⌊(g-1)/2⌋
    /// breadth-first tree, below which no graph qualifies.
    std::optional<int> n_min;
    int n_max = 10;
    GirthMode girth_mode = GirthMode::AtLeast;
    /// Keep only vgr graphs of girth exactly g with this λ.
    std::optional<std::int64_t> lambda_filter;
    /// Cut branches whose partial cycle counts already rule out λ_filter.
    /// Enumerated counts then cover only the surviving classes.
    bool lambda_prune = false;
    /// Off: accept every completed labeled graph and deduplicate afterwards.
    bool canonical_filter = true;
    std::size_t workers = 1;
    /// Number of fill edges after which the tree is cut into subtrees.
    int split_depth = 4;
    /// Permutes the order in which subtrees are handed to workers.
    std::uint64_t seed = 0;
    /// Stop after this many expanded nodes and leave a frontier (0: unlimited).
    std::uint64_t node_budget = 0;
};

/// Per-order tallies.
struct OrderCount {
    int n = 0;
    std::uint64_t enumerated = 0;
    std::uint64_t hits = 0;
    bool operator==(const OrderCount&) const = default;
};

/// Unexplored partial graph; everything else about the node follows from it.
struct FrontierNode {
    std::string graph6;
    int depth = 0;  ///< fill edges added beyond the breadth-first tree
};

struct SearchOutcome {
    SearchConfig config;
    std::vector<OrderCount> per_order;
    std::vector<std::string> hits;  ///< canonical graph6, sorted by (order, string)
    std::uint64_t nodes_expanded = 0;
    std::chrono::duration<double> wall_time{};
    bool suspended = false;
    std::vector<FrontierNode> frontier;
    int next_order = 0;  ///< first order not yet started when suspended

    std::uint64_t total_enumerated() const;
    std::uint64_t total_hits() const;
};

/// Called once per isomorphism class with its canonical form, from the
/// calling thread, in (order, graph6) order.
using VisitFn = std::function<void(const Graph&)>;

/// Isomorph-free generation of connected k-regular graphs of girth ≥ g (or
/// exactly g) with n_min ≤ n ≤ n_max. Throws DomainError on bad parameters.
SearchOutcome generate(const SearchConfig& config, const VisitFn& visit = {});

/// Continues a suspended run. Earlier counts and hits are carried over.
SearchOutcome resume(const SearchOutcome& suspended, const VisitFn& visit = {});

/// Writes a suspended outcome as a line-oriented checkpoint and reads it back.
void write_checkpoint(const SearchOutcome& outcome, const std::string& path);
SearchOutcome read_checkpoint(const std::string& path);

/// generate with g=5, girth exactly 5 and λ = (k(k-1)² − epsilon2)/2, which
/// no graph can have when 0 < epsilon2 ≤ k-1. Every class is enumerated.
SearchOutcome confirm_nonexistence(int k, std::int64_t epsilon2, int n_max, std::size_t workers = 1);

/// Every vgr(n,k,g,λ) class with n ≤ n_max; λ pruning on.
SearchOutcome find_vgr(int k, int g, std::int64_t lambda, int n_max, std::size_t workers = 1);

/// Default order cap for a search: GIRTHLAB_MAX_N when set, else 20 for k=3
/// and 16 otherwise.
int search_order_cap(int k);

}  // namespace girthlab
