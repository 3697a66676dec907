#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "girthlab/graph.hpp"

namespace girthlab {

/// v has the wrong number of neighbors in N₂(u) for the requested case.
class CaseMismatch : public DomainError {
public:
    using DomainError::DomainError;
};

/// Case B needs N(v') ∩ N(v'') ⊂ N(u) ∪ N₂(u) at u; it fails there.
class PropertyViolated : public DomainError {
public:
    using DomainError::DomainError;
};

enum class Relation { LessEq, Equal, GreaterEq };

std::string to_string(Relation r);

/// One evaluated counting relation of the girth-5 argument. index is the
/// 1-based i of per-index families (L_i, G' branches), 0 otherwise.
struct InequalityRecord {
    std::string name;
    int index = 0;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    Relation relation = Relation::Equal;
    bool holds = false;
};

InequalityRecord make_record(std::string name, std::int64_t lhs, Relation rel, std::int64_t rhs, int index = 0);

/// Edges leaving N₂(u) away from N(u), against k(k-1)² − 2λ.
struct OuterEdgeAudit {
    Vertex root = 0;
    std::int64_t two_eps_expected = 0;
    std::int64_t outer_edges_found = 0;
    std::int64_t n2_size = 0;
    std::int64_t n2_internal_edges = 0;
    /// (k-1)|N₂(u)| = 2|E(N₂(u))| + outer edges.
    bool derivation_holds = false;
    bool pass = false;
};

struct PropertyViolation {
    Vertex first;   ///< v' ∈ N₂(u)
    Vertex second;  ///< v'' ∈ N₂(u), first < second
    Vertex outside; ///< common neighbor outside N(u) ∪ N₂(u)
    bool operator==(const PropertyViolation&) const = default;
    auto operator<=>(const PropertyViolation&) const = default;
};

struct MainPropertyAudit {
    Vertex root = 0;
    std::vector<PropertyViolation> violations;  ///< sorted
    bool holds() const { return violations.empty(); }
};

/// Exterior vertex v with at least two neighbors in N₂(u).
struct CaseAPartition {
    Vertex u = 0;
    Vertex v = 0;
    std::int64_t two_epsilon = 0;
    bool in_theorem_range = false;  ///< 0 < 2ε ≤ k-1
    std::vector<Vertex> branch_roots;  ///< u_1..u_k, ascending
    std::vector<VertexSet> branches;   ///< V₂(i) = N(u_i) \ {u}
    VertexSet va, vb, vc;
    std::vector<std::int64_t> d;  ///< d_i
    std::vector<std::int64_t> a;  ///< a_i ∈ {0,1}
    std::int64_t y = 0;           ///< girth-5 cycles through v
    std::int64_t e_aa = 0, e_ab = 0, e_ac = 0, e_bb = 0, e_bc = 0, e_cc = 0;
    /// Single vertex of N(v) \ N₂(u) when |V_A| = 2ε = k-1.
    std::optional<Vertex> x;
    std::optional<bool> vc_is_n_x_minus_v;
    /// Σ d_i over the branches hit by v, reported when |V_A| = 2.
    std::optional<std::int64_t> d_sum_over_va;
    std::vector<InequalityRecord> records;

    bool all_hold() const;
};

/// Vertex v at distance 3 from u with a single neighbor v' in N₂(u).
struct CaseBPartition {
    Vertex u = 0;
    Vertex v = 0;
    Vertex v_prime = 0;
    Vertex u1 = 0;
    std::int64_t two_epsilon = 0;
    bool in_theorem_range = false;
    std::vector<Vertex> branch_roots;  ///< u1 first, then ascending
    std::vector<Vertex> v_others;      ///< N(v) \ {v'}, ascending: v_1..v_{k-1}
    VertexSet va, vb, vb_prime, vb_dprime, vc, vc_prime, vc_dprime;
    /// V \ (V_A ∪ V_B ∪ V_C ∪ N[v]); the edges to N[v] are the ones the
    /// degree counts around L_i and V_C'' leave out.
    VertexSet vout;
    std::vector<VertexSet> l;  ///< L_i = N(v_i) ∩ V_C''
    /// f_B'': w ∈ V_B'' mapped to its unique neighbor in N(v) \ {v'}; -1 if none or several.
    std::vector<std::pair<Vertex, Vertex>> f_bpp;
    bool f_bpp_bijective = false;
    bool l_partition_vc_dprime = false;  ///< L_i pairwise disjoint with union V_C''
    bool li_lower_bound = false;         ///< every |L_i| ≥ k-2
    bool li_tight_count_matches = false; ///< #{i : |L_i| = k-2} = |V_B''|
    std::int64_t y = 0;
    std::vector<InequalityRecord> records;

    bool structural_claims_hold() const {
        return f_bpp_bijective && l_partition_vc_dprime && li_lower_bound && li_tight_count_matches;
    }
    bool all_hold() const;
};

/// Multiplicity matrix of the auxiliary multigraph on N(u).
struct GPrimeAudit {
    Vertex root = 0;
    std::vector<Vertex> branch_roots;  ///< ascending
    int u1_index = 1;                  ///< 1-based
    std::vector<std::vector<std::int64_t>> multiplicity;
    std::int64_t edge_total = 0;
    InequalityRecord edge_count;  ///< 2|E(G')| = k(k-1)² − 2ε
    InequalityRecord entry_bound; ///< max multiplicity ≤ k-1
    InequalityRecord degree;      ///< 2 deg(u_1) ≥ 2(k-1)² − 2ε
    bool all_hold() const { return edge_count.holds && entry_bound.holds && degree.holds; }
};

/// Every operation below needs a k-regular graph with k ≥ 3 and girth 5
/// (DomainError otherwise). λ is the claimed common vertex cycle count.
OuterEdgeAudit audit_outer_edges(const Graph& g, Vertex u, std::int64_t lambda);
MainPropertyAudit audit_main_property(const Graph& g, Vertex u);
CaseAPartition audit_case_A(const Graph& g, Vertex u, Vertex v, std::int64_t lambda);
CaseBPartition audit_case_B(const Graph& g, Vertex u, Vertex v, std::int64_t lambda);
/// u1_index is 1-based into the ascending neighbors of u.
GPrimeAudit audit_gprime_degree(const Graph& g, Vertex u, int u1_index, std::int64_t lambda);

struct AuditScope {
    bool all_pairs = true;
    std::uint64_t seed = 0;
    std::size_t count = 0;

    static AuditScope all() { return {}; }
    static AuditScope sampled(std::uint64_t seed, std::size_t count) { return {false, seed, count}; }
};

struct AuditSummary {
    bool all_pass = true;
    std::size_t records_checked = 0;
    std::size_t records_failed = 0;
    std::size_t case_a_pairs = 0;  ///< eligible pairs before sampling
    std::size_t case_b_pairs = 0;
    std::size_t case_b_skipped = 0;  ///< single-neighbor pairs at roots where the property fails
    std::string first_failure;
};

struct AuditReport {
    std::string graph_id;
    std::size_t k = 0;
    std::int64_t lambda = 0;
    std::int64_t true_lambda = 0;
    std::vector<OuterEdgeAudit> outer;
    std::vector<MainPropertyAudit> main_property;
    std::vector<GPrimeAudit> gprime;
    std::vector<CaseAPartition> case_a;
    std::vector<CaseBPartition> case_b;
    AuditSummary summary;
};

struct AuditOptions {
    AuditScope scope = AuditScope::all();
    /// Replaces the measured λ (forging).
    std::optional<std::int64_t> lambda_override;
    std::size_t workers = 1;
    std::string graph_id;
};

/// Requires a connected k-regular (k ≥ 3) vgr graph of girth 5; the
/// DomainError for a non-vgr input names two vertices with different counts.
AuditReport audit_graph(const Graph& g, const AuditOptions& options = {});

}  // namespace girthlab
