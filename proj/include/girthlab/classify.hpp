#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "girthlab/girth.hpp"
#include "girthlab/graph.hpp"

namespace girthlab {

/// Raised when computed quantities contradict a proven statement; on real
/// input this means an engine bug (or a forged profile).
class InconsistencyError : public Error {
public:
    using Error::Error;
};

/// M(k,g): 1 + k Σ_{i<(g-1)/2} (k-1)^i for odd g, 2 Σ_{i<g/2} (k-1)^i for even g.
std::uint64_t moore_bound(std::int64_t k, std::int64_t g);

/// k(k-1)^⌊g/2⌋ / 2, the largest possible λ of a vgr graph.
std::uint64_t vertex_cycle_bound(std::int64_t k, std::int64_t g);

/// (k-1)^⌊g/2⌋, the largest possible girth-cycle count on one edge.
std::uint64_t edge_cycle_bound(std::int64_t k, std::int64_t g);

struct ClassificationReport {
    std::size_t n = 0;
    std::optional<std::size_t> k;  ///< nullopt: not regular
    int girth = 0;

    bool is_vgr = false;
    std::optional<std::uint64_t> lambda_vertex;
    bool is_gr = false;
    std::optional<Signature> common_signature;
    bool is_egr = false;
    std::optional<std::uint64_t> lambda_edge;

    std::uint64_t max_vertex_count = 0;  ///< max_v λ_v
    std::uint64_t max_edge_count = 0;    ///< max_e n(e)
    std::optional<std::uint64_t> vertex_bound;
    std::optional<std::uint64_t> edge_bound;
    /// 2ε = 2·vertex_bound − 2λ, set only for vgr graphs.
    std::optional<std::int64_t> two_epsilon;
    std::optional<std::int64_t> moore_deficit;  ///< n − M(k,g)

    /// ε printed as a rational ("3" or "5/2"); empty when not vgr.
    std::string epsilon_text() const;
};

/// Requires a connected graph with a cycle (DomainError otherwise).
ClassificationReport classify(const Graph& g);

/// Classification from a supplied profile. Throws InconsistencyError when the
/// profile claims a vgr graph of odd girth with 0 < ε ≤ (k-1)/2, which no
/// graph can have.
ClassificationReport classify_with_profile(const Graph& g, const GirthProfile& profile);

struct BoundCheck {
    std::string name;  ///< "vertex_bound", "edge_bound" or "moore_order"
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    std::int64_t slack = 0;  ///< rhs − lhs for ≤ checks, lhs − rhs for the Moore ≥ check
    bool holds = false;
};

/// max λ_v ≤ k(k-1)^⌊g/2⌋/2, max n(e) ≤ (k-1)^⌊g/2⌋, n ≥ M(k,g). Empty for
/// non-regular graphs. A failing record signals an engine bug.
std::vector<BoundCheck> check_bounds(const Graph& g, const ClassificationReport& report);

enum class VerdictStatus { ExcludedByTheorem, KnownToExist, Unknown };
enum class VerdictRule { EvenGirthSignature, OddGirthGe7, Girth3, Girth5, MooreCase, None };

struct NonexistenceVerdict {
    VerdictStatus status = VerdictStatus::Unknown;
    VerdictRule rule = VerdictRule::None;
    std::string detail;
};

std::string to_string(VerdictStatus s);
std::string to_string(VerdictRule r);

/// Is a vgr(n,k,g,λ) graph excluded for every n? Requires k ≥ 3, g ≥ 3 and
/// 0 ≤ λ ≤ k(k-1)^⌊g/2⌋/2 (DomainError otherwise).
NonexistenceVerdict known_nonexistence(std::int64_t k, std::int64_t g, std::int64_t lambda);

/// Refutes a claimed signature of a k-regular girth-regular graph of even
/// girth whose largest entry is (k-1)^{g/2} − ε with 0 < ε < k-1.
NonexistenceVerdict refute_signature(std::int64_t k, std::int64_t g, const Signature& claimed);

}  // namespace girthlab
