#include "girthlab/audit.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <thread>

#include "girthlab/classify.hpp"
#include "girthlab/girth.hpp"

namespace girthlab {
namespace {

using i64 = std::int64_t;

i64 sz(const VertexSet& s) { return static_cast<i64>(s.size()); }

/// Verifies k-regular (k ≥ 3) of girth 5 and returns k.
i64 require_girth5_regular(const Graph& g) {
    const auto q = basic_queries(g);
    if (!q.is_regular || q.k < 3) throw DomainError("audit needs a k-regular graph with k >= 3");
    const Girth gi = girth(g);
    if (gi.is_acyclic() || gi.length() != 5)
        throw DomainError("audit needs girth 5, got " + (gi.is_acyclic() ? std::string("acyclic") : std::to_string(gi.length())));
    return static_cast<i64>(q.k);
}

void require_vertex(const Graph& g, Vertex x, const char* what) {
    if (x < 0 || static_cast<std::size_t>(x) >= g.order())
        throw DomainError(std::string(what) + " = " + std::to_string(x) + " out of range");
}

i64 two_epsilon_of(i64 k, i64 lambda) { return k * (k - 1) * (k - 1) - 2 * lambda; }

VertexSet without(VertexSet s, Vertex x) {
    s.erase(x);
    return s;
}

void require_exterior(const ShellDecomposition& su, Vertex v) {
    if (v == su.root || su.n1.contains(v) || su.n2.contains(v))
        throw DomainError("v = " + std::to_string(v) + " must lie outside {u} ∪ N(u) ∪ N2(u)");
}

MainPropertyAudit main_property_impl(const Graph& g, const ShellDecomposition& su) {
    MainPropertyAudit out;
    out.root = su.root;
    su.n3plus.for_each([&](Vertex x) {
        const auto hits = (g.neighbors(x) & su.n2).members();
        for (std::size_t i = 0; i < hits.size(); ++i)
            for (std::size_t j = i + 1; j < hits.size(); ++j) out.violations.push_back({hits[i], hits[j], x});
    });
    std::sort(out.violations.begin(), out.violations.end());
    return out;
}

OuterEdgeAudit outer_impl(const Graph& g, i64 k, Vertex u, i64 lambda) {
    const auto su = shell_decompose(g, u);
    OuterEdgeAudit a;
    a.root = u;
    a.two_eps_expected = two_epsilon_of(k, lambda);
    a.outer_edges_found = static_cast<i64>(g.count_edges(su.n2, su.n3plus));
    a.n2_size = sz(su.n2);
    a.n2_internal_edges = static_cast<i64>(g.count_edges(su.n2, su.n2));
    a.derivation_holds = (k - 1) * a.n2_size == 2 * a.n2_internal_edges + a.outer_edges_found;
    a.pass = a.derivation_holds && a.outer_edges_found == a.two_eps_expected;
    return a;
}

CaseAPartition case_a_impl(const Graph& g, i64 k, Vertex u, Vertex v, i64 lambda) {
    require_vertex(g, u, "u");
    require_vertex(g, v, "v");
    const auto su = shell_decompose(g, u);
    require_exterior(su, v);
    const VertexSet nv = g.neighbors(v);
    const i64 hits = sz(nv & su.n2);
    if (hits <= 1)
        throw CaseMismatch("v = " + std::to_string(v) + " has " + std::to_string(hits) +
                           " neighbor(s) in N2(u); case A needs at least two");

    const auto sv = shell_decompose(g, v);
    CaseAPartition p;
    p.u = u;
    p.v = v;
    p.two_epsilon = two_epsilon_of(k, lambda);
    p.in_theorem_range = p.two_epsilon > 0 && p.two_epsilon <= k - 1;
    p.va = sv.n2 & su.n1;
    p.vb = sv.n2 & su.n2;
    p.vc = sv.n2 - su.n1 - su.n2;
    p.branch_roots = su.n1.members();

    const VertexSet nv_out = nv - su.n2;
    for (const Vertex ui : p.branch_roots) {
        const VertexSet branch = without(g.neighbors(ui), u);
        p.branches.push_back(branch);
        p.d.push_back(static_cast<i64>(g.count_edges(branch, nv_out)));
        p.a.push_back((nv & branch).empty() ? 0 : 1);
    }
    p.y = static_cast<i64>(g.count_edges(sv.n2, sv.n2));
    p.e_aa = static_cast<i64>(g.count_edges(p.va, p.va));
    p.e_ab = static_cast<i64>(g.count_edges(p.va, p.vb));
    p.e_ac = static_cast<i64>(g.count_edges(p.va, p.vc));
    p.e_bb = static_cast<i64>(g.count_edges(p.vb, p.vb));
    p.e_bc = static_cast<i64>(g.count_edges(p.vb, p.vc));
    p.e_cc = static_cast<i64>(g.count_edges(p.vc, p.vc));

    const i64 va = sz(p.va), vb = sz(p.vb), vc = sz(p.vc);
    const i64 e2 = p.two_epsilon;
    i64 sum_a = 0, sum_d = 0, sum_da = 0;
    for (std::size_t i = 0; i < p.d.size(); ++i) {
        sum_a += p.a[i];
        sum_d += p.d[i];
        sum_da += p.d[i] * p.a[i];
    }
    const i64 top = k * (k - 1) * (k - 1);

    auto& r = p.records;
    r.push_back(make_record("Y_partition", p.y, Relation::Equal, p.e_aa + p.e_ab + p.e_ac + p.e_bb + p.e_bc + p.e_cc));
    r.push_back(make_record("Y_vgr", 2 * p.y, Relation::Equal, top - e2));
    r.push_back(make_record("VA_count", va, Relation::Equal, sum_a));
    r.push_back(make_record("VC_induced", (k - 1) * vc, Relation::GreaterEq, 2 * p.e_cc + p.e_bc));
    r.push_back(make_record("VB_induced", (k - 1) * vb, Relation::GreaterEq, p.e_ab + 2 * p.e_bb + p.e_bc));
    r.push_back(make_record("VAg", sum_d + sum_a, Relation::LessEq, e2));
    r.push_back(make_record("TwoEpsVA", sum_da, Relation::LessEq, e2 - va));
    r.push_back(make_record("EAB", p.e_ab, Relation::LessEq, sum_da + va * (va - 1)));
    r.push_back(make_record("Y_bound_caseA", 2 * p.y, Relation::LessEq, top + e2 + std::max(2 - 2 * k, e2 * e2 - e2 * (k + 1))));
    if (p.in_theorem_range) r.push_back(make_record("Y_strict_caseA", 2 * p.y, Relation::LessEq, top - e2 - 1));

    if (va == e2 && hits == k - 1) {
        const auto outside = (nv - su.n2).members();
        if (outside.size() == 1) {
            p.x = outside.front();
            p.vc_is_n_x_minus_v = p.vc == without(g.neighbors(*p.x), v);
        }
    }
    if (va == 2) p.d_sum_over_va = sum_da;
    return p;
}

CaseBPartition case_b_impl(const Graph& g, i64 k, Vertex u, Vertex v, i64 lambda, const MainPropertyAudit* known) {
    require_vertex(g, u, "u");
    require_vertex(g, v, "v");
    const auto su = shell_decompose(g, u);
    require_exterior(su, v);
    const VertexSet nv = g.neighbors(v);
    const VertexSet hit = nv & su.n2;
    if (hit.size() != 1)
        throw CaseMismatch("v = " + std::to_string(v) + " has " + std::to_string(hit.size()) +
                           " neighbor(s) in N2(u); case B needs exactly one");
    const MainPropertyAudit main = known ? *known : main_property_impl(g, su);
    if (!main.holds())
        throw PropertyViolated("main property fails at u = " + std::to_string(u) + " (e.g. v'=" +
                               std::to_string(main.violations.front().first) + ", v''=" +
                               std::to_string(main.violations.front().second) + ", v=" +
                               std::to_string(main.violations.front().outside) + ")");

    CaseBPartition p;
    p.u = u;
    p.v = v;
    p.v_prime = hit.members().front();
    const auto u1s = (g.neighbors(p.v_prime) & su.n1).members();
    if (u1s.size() != 1) throw DomainError("v' has " + std::to_string(u1s.size()) + " neighbors in N(u)");
    p.u1 = u1s.front();
    p.branch_roots.push_back(p.u1);
    for (const Vertex w : su.n1.members())
        if (w != p.u1) p.branch_roots.push_back(w);
    p.v_others = without(nv, p.v_prime).members();
    p.two_epsilon = two_epsilon_of(k, lambda);
    p.in_theorem_range = p.two_epsilon > 0 && p.two_epsilon <= k - 1;

    const auto sv = shell_decompose(g, v);
    const VertexSet nvp = g.neighbors(p.v_prime);
    p.va = sv.n2 & su.n1;
    p.vb = sv.n2 & su.n2;
    p.vc = sv.n2 - su.n1 - su.n2;
    p.vb_prime = p.vb & nvp;
    p.vb_dprime = p.vb - nvp;
    p.vc_prime = p.vc & nvp;
    p.vc_dprime = p.vc - nvp;
    VertexSet closed_nv = nv;
    closed_nv.insert(v);
    p.vout = g.all_vertices() - p.va - p.vb - p.vc - closed_nv;
    for (const Vertex vi : p.v_others) p.l.push_back(g.neighbors(vi) & p.vc_dprime);

    // f_B'': each w ∈ V_B'' has exactly one neighbor among v_1..v_{k-1}, and
    // every edge from v_1..v_{k-1} into N2(u) ends in V_B''.
    const VertexSet others = without(nv, p.v_prime);
    bool bijective = true;
    p.vb_dprime.for_each([&](Vertex w) {
        const auto m = (g.neighbors(w) & others).members();
        p.f_bpp.emplace_back(w, m.size() == 1 ? m.front() : -1);
        bijective = bijective && m.size() == 1;
    });
    for (const Vertex vs : p.v_others) {
        const VertexSet landing = g.neighbors(vs) & su.n2;
        bijective = bijective && (landing - p.vb_dprime).empty();
    }
    bijective = bijective && static_cast<i64>(g.count_edges(others, su.n2)) == sz(p.vb_dprime);
    p.f_bpp_bijective = bijective;

    VertexSet union_l(g.order());
    bool disjoint = true;
    for (const auto& li : p.l) {
        disjoint = disjoint && (union_l & li).empty();
        union_l = union_l | li;
    }
    p.l_partition_vc_dprime = disjoint && union_l == p.vc_dprime;
    p.li_lower_bound = std::all_of(p.l.begin(), p.l.end(), [&](const VertexSet& li) { return sz(li) >= k - 2; });
    const auto tight = std::count_if(p.l.begin(), p.l.end(), [&](const VertexSet& li) { return sz(li) == k - 2; });
    p.li_tight_count_matches = static_cast<i64>(tight) == sz(p.vb_dprime);

    p.y = static_cast<i64>(g.count_edges(sv.n2, sv.n2));
    const i64 e_ab = static_cast<i64>(g.count_edges(p.va, p.vb));
    const i64 e_bb = static_cast<i64>(g.count_edges(p.vb, p.vb));
    const i64 e_bc = static_cast<i64>(g.count_edges(p.vb, p.vc));
    const i64 e_cc = static_cast<i64>(g.count_edges(p.vc, p.vc));
    const i64 e_aa = static_cast<i64>(g.count_edges(p.va, p.va));
    const i64 e_ac = static_cast<i64>(g.count_edges(p.va, p.vc));
    const i64 e_cdp_b = static_cast<i64>(g.count_edges(p.vc_dprime, p.vb));
    const i64 e_cdp_out = static_cast<i64>(g.count_edges(p.vc_dprime, p.vout));
    const i64 vb = sz(p.vb), vc = sz(p.vc), vcp = sz(p.vc_prime), vbdp = sz(p.vb_dprime);
    const i64 vbdp_u1 = sz(p.vb_dprime & g.neighbors(p.u1));
    const i64 e2 = p.two_epsilon;
    const i64 top = k * (k - 1) * (k - 1);

    auto& r = p.records;
    r.push_back(make_record("Y_partition", p.y, Relation::Equal, e_aa + e_ab + e_ac + e_bb + e_bc + e_cc));
    r.push_back(make_record("Y_vgr", 2 * p.y, Relation::Equal, top - e2));
    r.push_back(make_record("VB_induced", (k - 1) * vb, Relation::GreaterEq, e_ab + 2 * e_bb + e_bc));
    r.push_back(make_record("VC_induced", (k - 1) * vc, Relation::GreaterEq, 2 * e_cc + e_bc));
    r.push_back(make_record("VC_induced_new", (k - 1) * vc, Relation::GreaterEq,
                            2 * e_cc + e_bc + (k - 1) * (k - 1 - vcp) - vbdp - e_cdp_b));
    r.push_back(make_record("outer_bound1", vbdp + vcp + 1 + e_cdp_b, Relation::LessEq, e2));
    r.push_back(make_record("outer_bound2", 2 * (vbdp_u1 + vcp + 1), Relation::LessEq, e2));
    r.push_back(make_record("EAB_new", e_ab, Relation::Equal, vbdp_u1));
    r.push_back(make_record("fBpp_count", vbdp, Relation::Equal, static_cast<i64>(g.count_edges(others, su.n2))));
    r.push_back(make_record("fBpp_count_u1", vbdp_u1, Relation::Equal,
                            static_cast<i64>(g.count_edges(others, su.n2 & g.neighbors(p.u1)))));

    i64 sum_li_minus_vcp = 0;
    for (std::size_t i = 0; i < p.l.size(); ++i) {
        const VertexSet& li = p.l[i];
        const int idx = static_cast<int>(i) + 1;
        const i64 l = sz(li);
        sum_li_minus_vcp += l - vcp;
        r.push_back(make_record("LCprime", static_cast<i64>(g.count_edges(li, p.vc_prime)), Relation::LessEq, vcp, idx));
        r.push_back(make_record("LCdoubleprime", static_cast<i64>(g.count_edges(li, p.vc_dprime)), Relation::LessEq,
                                l * (k - 2), idx));
        r.push_back(make_record("Li_expansion", (k - 1) * l, Relation::Equal,
                                2 * static_cast<i64>(g.count_edges(li, li)) +
                                    static_cast<i64>(g.count_edges(li, p.vc_dprime - li)) +
                                    static_cast<i64>(g.count_edges(li, p.vc_prime)) +
                                    static_cast<i64>(g.count_edges(li, p.vb)) +
                                    static_cast<i64>(g.count_edges(li, p.vout)),
                                idx));
        r.push_back(make_record("Li_lower", l, Relation::GreaterEq, k - 2, idx));
    }
    r.push_back(make_record("Vout_bound", e_cdp_out + e_cdp_b, Relation::GreaterEq, sum_li_minus_vcp));
    r.push_back(make_record("Y_bound_caseB", 4 * p.y, Relation::LessEq,
                            2 * top - 2 * (k - 1) * (k - vcp) + 3 * e2 - 4 * vcp - 4));
    if (p.in_theorem_range) r.push_back(make_record("Y_strict_caseB", 2 * p.y, Relation::LessEq, top - e2 - 1));
    return p;
}

GPrimeAudit gprime_impl(const Graph& g, i64 k, Vertex u, int u1_index, i64 lambda) {
    require_vertex(g, u, "u");
    if (u1_index < 1 || u1_index > k)
        throw DomainError("u1 index " + std::to_string(u1_index) + " outside 1.." + std::to_string(k));
    const auto su = shell_decompose(g, u);
    GPrimeAudit a;
    a.root = u;
    a.branch_roots = su.n1.members();
    a.u1_index = u1_index;
    const auto kk = static_cast<std::size_t>(k);
    std::vector<VertexSet> branch;
    for (const Vertex ui : a.branch_roots) branch.push_back(g.neighbors(ui) & su.n2);
    a.multiplicity.assign(kk, std::vector<i64>(kk, 0));
    i64 max_entry = 0;
    for (std::size_t i = 0; i < kk; ++i)
        for (std::size_t j = 0; j < kk; ++j) {
            if (i == j) continue;
            a.multiplicity[i][j] = static_cast<i64>(g.count_edges(branch[i], branch[j]));
            max_entry = std::max(max_entry, a.multiplicity[i][j]);
            if (i < j) a.edge_total += a.multiplicity[i][j];
        }
    const i64 e2 = two_epsilon_of(k, lambda);
    i64 deg = 0;
    for (std::size_t j = 0; j < kk; ++j) deg += a.multiplicity[static_cast<std::size_t>(u1_index - 1)][j];
    a.edge_count = make_record("Gprime_edges", 2 * a.edge_total, Relation::Equal, k * (k - 1) * (k - 1) - e2);
    a.entry_bound = make_record("Gprime_entry", max_entry, Relation::LessEq, k - 1);
    a.degree = make_record("Gprime_degree", 2 * deg, Relation::GreaterEq, 2 * (k - 1) * (k - 1) - e2, u1_index);
    return a;
}

std::string describe(const InequalityRecord& r) {
    std::string s = r.name;
    if (r.index > 0) s += "[" + std::to_string(r.index) + "]";
    return s + ": " + std::to_string(r.lhs) + " " + to_string(r.relation) + " " + std::to_string(r.rhs);
}

void run_parallel(std::size_t tasks, std::size_t workers, const std::function<void(std::size_t)>& body) {
    workers = std::max<std::size_t>(1, std::min(workers, tasks));
    if (workers == 1) {
        for (std::size_t i = 0; i < tasks; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < tasks; i = next++) body(i);
        });
    for (auto& t : pool) t.join();
}

}  // namespace

std::string to_string(Relation r) {
    switch (r) {
        case Relation::LessEq: return "<=";
        case Relation::Equal: return "=";
        case Relation::GreaterEq: return ">=";
    }
    return "?";
}

InequalityRecord make_record(std::string name, std::int64_t lhs, Relation rel, std::int64_t rhs, int index) {
    InequalityRecord r{std::move(name), index, lhs, rhs, rel, false};
    switch (rel) {
        case Relation::LessEq: r.holds = lhs <= rhs; break;
        case Relation::Equal: r.holds = lhs == rhs; break;
        case Relation::GreaterEq: r.holds = lhs >= rhs; break;
    }
    return r;
}

bool CaseAPartition::all_hold() const {
    return std::all_of(records.begin(), records.end(), [](const InequalityRecord& r) { return r.holds; });
}

bool CaseBPartition::all_hold() const {
    return structural_claims_hold() &&
           std::all_of(records.begin(), records.end(), [](const InequalityRecord& r) { return r.holds; });
}

OuterEdgeAudit audit_outer_edges(const Graph& g, Vertex u, std::int64_t lambda) {
    const i64 k = require_girth5_regular(g);
    require_vertex(g, u, "u");
    return outer_impl(g, k, u, lambda);
}

MainPropertyAudit audit_main_property(const Graph& g, Vertex u) {
    require_girth5_regular(g);
    require_vertex(g, u, "u");
    return main_property_impl(g, shell_decompose(g, u));
}

CaseAPartition audit_case_A(const Graph& g, Vertex u, Vertex v, std::int64_t lambda) {
    return case_a_impl(g, require_girth5_regular(g), u, v, lambda);
}

CaseBPartition audit_case_B(const Graph& g, Vertex u, Vertex v, std::int64_t lambda) {
    return case_b_impl(g, require_girth5_regular(g), u, v, lambda, nullptr);
}

GPrimeAudit audit_gprime_degree(const Graph& g, Vertex u, int u1_index, std::int64_t lambda) {
    return gprime_impl(g, require_girth5_regular(g), u, u1_index, lambda);
}

AuditReport audit_graph(const Graph& g, const AuditOptions& options) {
    if (!is_connected(g)) throw DomainError("audit needs a connected graph");
    const i64 k = require_girth5_regular(g);
    const GirthProfile profile = girth_profile(g);
    for (std::size_t w = 1; w < g.order(); ++w)
        if (profile.per_vertex[w] != profile.per_vertex[0])
            throw DomainError("graph is not vertex-girth-regular: vertex 0 lies on " + std::to_string(profile.per_vertex[0]) +
                              " 5-cycles, vertex " + std::to_string(w) + " on " + std::to_string(profile.per_vertex[w]));

    AuditReport rep;
    rep.graph_id = options.graph_id;
    rep.k = static_cast<std::size_t>(k);
    rep.true_lambda = static_cast<i64>(profile.per_vertex.empty() ? 0 : profile.per_vertex[0]);
    rep.lambda = options.lambda_override.value_or(rep.true_lambda);
    const std::size_t n = g.order();

    struct Pair {
        Vertex u, v;
        bool case_a;
    };
    std::vector<Pair> eligible;
    for (std::size_t u = 0; u < n; ++u) {
        const auto su = shell_decompose(g, static_cast<Vertex>(u));
        rep.main_property.push_back(main_property_impl(g, su));
        const bool property_holds = rep.main_property.back().holds();
        su.n3plus.for_each([&](Vertex v) {
            const auto hits = (g.neighbors(v) & su.n2).size();
            if (hits >= 2) {
                eligible.push_back({static_cast<Vertex>(u), v, true});
                ++rep.summary.case_a_pairs;
            } else if (hits == 1) {
                if (property_holds) {
                    eligible.push_back({static_cast<Vertex>(u), v, false});
                    ++rep.summary.case_b_pairs;
                } else {
                    ++rep.summary.case_b_skipped;
                }
            }
        });
    }
    if (!options.scope.all_pairs) {
        std::mt19937_64 rng(options.scope.seed);
        std::shuffle(eligible.begin(), eligible.end(), rng);
        eligible.resize(std::min(eligible.size(), options.scope.count));
        std::sort(eligible.begin(), eligible.end(),
                  [](const Pair& a, const Pair& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    }

    rep.outer.resize(n);
    rep.gprime.resize(n * static_cast<std::size_t>(k));
    std::vector<std::optional<CaseAPartition>> a_results(eligible.size());
    std::vector<std::optional<CaseBPartition>> b_results(eligible.size());
    const i64 lambda = rep.lambda;
    run_parallel(n + eligible.size(), options.workers, [&](std::size_t task) {
        if (task < n) {
            const auto u = static_cast<Vertex>(task);
            rep.outer[task] = outer_impl(g, k, u, lambda);
            for (int i = 1; i <= k; ++i) rep.gprime[task * static_cast<std::size_t>(k) + (i - 1)] = gprime_impl(g, k, u, i, lambda);
            return;
        }
        const Pair& p = eligible[task - n];
        if (p.case_a)
            a_results[task - n] = case_a_impl(g, k, p.u, p.v, lambda);
        else
            b_results[task - n] = case_b_impl(g, k, p.u, p.v, lambda, &rep.main_property[p.u]);
    });
    for (auto& a : a_results)
        if (a) rep.case_a.push_back(std::move(*a));
    for (auto& b : b_results)
        if (b) rep.case_b.push_back(std::move(*b));

    AuditSummary& s = rep.summary;
    auto fail = [&](const std::string& what) {
        ++s.records_failed;
        if (s.all_pass) s.first_failure = what;
        s.all_pass = false;
    };
    for (const auto& o : rep.outer) {
        s.records_checked += 2;
        if (!o.derivation_holds) fail("outer-edge derivation at u=" + std::to_string(o.root));
        if (o.outer_edges_found != o.two_eps_expected)
            fail("outer_edges at u=" + std::to_string(o.root) + ": found " + std::to_string(o.outer_edges_found) +
                 ", expected 2eps=" + std::to_string(o.two_eps_expected));
    }
    for (const auto& gp : rep.gprime)
        for (const auto* r : {&gp.edge_count, &gp.entry_bound, &gp.degree}) {
            ++s.records_checked;
            if (!r->holds) fail(describe(*r) + " at u=" + std::to_string(gp.root));
        }
    for (const auto& a : rep.case_a)
        for (const auto& r : a.records) {
            ++s.records_checked;
            if (!r.holds) fail(describe(r) + " (case A, u=" + std::to_string(a.u) + ", v=" + std::to_string(a.v) + ")");
        }
    for (const auto& b : rep.case_b) {
        ++s.records_checked;
        if (!b.structural_claims_hold())
            fail("case B structural claim (u=" + std::to_string(b.u) + ", v=" + std::to_string(b.v) + ")");
        for (const auto& r : b.records) {
            ++s.records_checked;
            if (!r.holds) fail(describe(r) + " (case B, u=" + std::to_string(b.u) + ", v=" + std::to_string(b.v) + ")");
        }
    }
    return rep;
}

}  // namespace girthlab
