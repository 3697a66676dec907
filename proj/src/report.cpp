#include "girthlab/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

namespace girthlab {
namespace {

Json set_json(const VertexSet& s) { return s.members(); }

template <class T>
Json opt(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

Json records_json(const std::vector<InequalityRecord>& rs, bool only_failing) {
    Json out = Json::array();
    for (const auto& r : rs)
        if (!only_failing || !r.holds) out.push_back(to_json(r));
    return out;
}

}  // namespace

Json to_json(const ClassificationReport& r, const GirthProfile& profile) {
    Json j;
    j["n"] = r.n;
    j["k"] = opt(r.k);
    j["girth"] = r.girth;
    j["total_girth_cycles"] = profile.total_girth_cycles;
    j["vgr"] = r.is_vgr;
    j["lambda"] = opt(r.lambda_vertex);
    j["gr"] = r.is_gr;
    j["signature"] = r.common_signature ? Json(*r.common_signature) : Json(nullptr);
    j["egr"] = r.is_egr;
    j["lambda_edge"] = opt(r.lambda_edge);
    j["max_vertex_count"] = r.max_vertex_count;
    j["max_edge_count"] = r.max_edge_count;
    j["vertex_bound"] = opt(r.vertex_bound);
    j["edge_bound"] = opt(r.edge_bound);
    j["two_epsilon"] = opt(r.two_epsilon);
    j["epsilon"] = r.two_epsilon ? Json(r.epsilon_text()) : Json(nullptr);
    j["moore_deficit"] = opt(r.moore_deficit);
    j["lambda_per_vertex"] = profile.per_vertex;
    return j;
}

Json to_json(const std::vector<BoundCheck>& checks) {
    Json out = Json::array();
    for (const auto& c : checks) {
        Json j;
        j["name"] = c.name;
        j["lhs"] = c.lhs;
        j["rhs"] = c.rhs;
        j["slack"] = c.slack;
        j["holds"] = c.holds;
        out.push_back(std::move(j));
    }
    return out;
}

Json to_json(const InequalityRecord& r) {
    Json j;
    j["name"] = r.name;
    if (r.index > 0) j["index"] = r.index;
    j["lhs"] = r.lhs;
    j["relation"] = to_string(r.relation);
    j["rhs"] = r.rhs;
    j["holds"] = r.holds;
    return j;
}

Json to_json(const AuditReport& r, bool details) {
    Json j;
    j["k"] = r.k;
    j["lambda"] = r.lambda;
    j["measured_lambda"] = r.true_lambda;
    j["lambda_forged"] = r.lambda != r.true_lambda;

    Json outer = Json::array();
    for (const auto& o : r.outer) {
        Json e;
        e["root"] = o.root;
        e["two_epsilon"] = o.two_eps_expected;
        e["outer_edges"] = o.outer_edges_found;
        e["n2_size"] = o.n2_size;
        e["n2_internal_edges"] = o.n2_internal_edges;
        e["derivation_holds"] = o.derivation_holds;
        e["pass"] = o.pass;
        outer.push_back(std::move(e));
    }
    j["outer_edges"] = std::move(outer);

    Json main = Json::array();
    for (const auto& m : r.main_property) {
        Json e;
        e["root"] = m.root;
        e["holds"] = m.holds();
        Json vs = Json::array();
        for (const auto& v : m.violations) vs.push_back({v.first, v.second, v.outside});
        e["violations"] = std::move(vs);
        main.push_back(std::move(e));
    }
    j["main_property"] = std::move(main);

    Json gp = Json::array();
    for (const auto& g : r.gprime) {
        Json e;
        e["root"] = g.root;
        e["u1_index"] = g.u1_index;
        e["edge_total"] = g.edge_total;
        e["holds"] = g.all_hold();
        if (details || !g.all_hold()) {
            e["multiplicity"] = g.multiplicity;
            e["records"] = records_json({g.edge_count, g.entry_bound, g.degree}, !details);
        }
        gp.push_back(std::move(e));
    }
    j["gprime"] = std::move(gp);

    Json ca = Json::array();
    for (const auto& a : r.case_a) {
        Json e;
        e["u"] = a.u;
        e["v"] = a.v;
        e["holds"] = a.all_hold();
        if (details) {
            e["branch_roots"] = a.branch_roots;
            e["VA"] = set_json(a.va);
            e["VB"] = set_json(a.vb);
            e["VC"] = set_json(a.vc);
            e["d"] = a.d;
            e["a"] = a.a;
            e["Y"] = a.y;
            e["x"] = opt(a.x);
            e["VC_is_N_x_minus_v"] = opt(a.vc_is_n_x_minus_v);
            e["d_sum_over_VA"] = opt(a.d_sum_over_va);
        }
        e["records"] = records_json(a.records, !details);
        ca.push_back(std::move(e));
    }
    j["case_a"] = std::move(ca);

    Json cb = Json::array();
    for (const auto& b : r.case_b) {
        Json e;
        e["u"] = b.u;
        e["v"] = b.v;
        e["holds"] = b.all_hold();
        e["structural_claims_hold"] = b.structural_claims_hold();
        if (details) {
            e["v_prime"] = b.v_prime;
            e["u1"] = b.u1;
            e["v_others"] = b.v_others;
            e["VA"] = set_json(b.va);
            e["VB"] = set_json(b.vb);
            e["VB_prime"] = set_json(b.vb_prime);
            e["VB_dprime"] = set_json(b.vb_dprime);
            e["VC"] = set_json(b.vc);
            e["VC_prime"] = set_json(b.vc_prime);
            e["VC_dprime"] = set_json(b.vc_dprime);
            e["VOut"] = set_json(b.vout);
            Json ls = Json::array();
            for (const auto& l : b.l) ls.push_back(set_json(l));
            e["L"] = std::move(ls);
            Json f = Json::array();
            for (const auto& [w, t] : b.f_bpp) f.push_back({w, t});
            e["f_Bpp"] = std::move(f);
            e["f_Bpp_bijective"] = b.f_bpp_bijective;
            e["L_partitions_VC_dprime"] = b.l_partition_vc_dprime;
            e["L_lower_bound"] = b.li_lower_bound;
            e["L_tight_count_matches"] = b.li_tight_count_matches;
            e["Y"] = b.y;
        }
        e["records"] = records_json(b.records, !details);
        cb.push_back(std::move(e));
    }
    j["case_b"] = std::move(cb);

    const auto& s = r.summary;
    Json sj;
    sj["all_pass"] = s.all_pass;
    sj["records_checked"] = s.records_checked;
    sj["records_failed"] = s.records_failed;
    sj["case_a_pairs"] = s.case_a_pairs;
    sj["case_b_pairs"] = s.case_b_pairs;
    sj["case_b_skipped"] = s.case_b_skipped;
    sj["case_a_audited"] = r.case_a.size();
    sj["case_b_audited"] = r.case_b.size();
    sj["first_failure"] = s.first_failure.empty() ? Json(nullptr) : Json(s.first_failure);
    j["summary"] = std::move(sj);
    return j;
}

Json to_json(const SearchOutcome& o, bool with_time) {
    const SearchConfig& c = o.config;
    Json j;
    Json cfg;
    cfg["k"] = c.k;
    cfg["g"] = c.g;
    cfg["min_n"] = opt(c.n_min);
    cfg["max_n"] = c.n_max;
    cfg["girth_mode"] = to_string(c.girth_mode);
    cfg["lambda"] = opt(c.lambda_filter);
    cfg["lambda_prune"] = c.lambda_prune;
    cfg["canonical_filter"] = c.canonical_filter;
    cfg["workers"] = c.workers;
    cfg["split_depth"] = c.split_depth;
    cfg["seed"] = c.seed;
    cfg["node_budget"] = c.node_budget;
    j["config"] = std::move(cfg);
    Json per = Json::array();
    for (const auto& p : o.per_order) per.push_back({{"n", p.n}, {"enumerated", p.enumerated}, {"hits", p.hits}});
    j["per_order"] = std::move(per);
    j["enumerated"] = o.total_enumerated();
    j["hit_count"] = o.total_hits();
    j["hits"] = o.hits;
    j["nodes_expanded"] = o.nodes_expanded;
    j["suspended"] = o.suspended;
    if (o.suspended) {
        j["frontier_size"] = o.frontier.size();
        j["next_order"] = o.next_order;
    }
    if (with_time) j["wall_time_seconds"] = o.wall_time.count();
    return j;
}

Json to_json(const NonexistenceVerdict& v) {
    Json j;
    j["status"] = to_string(v.status);
    j["rule"] = to_string(v.rule);
    j["detail"] = v.detail;
    return j;
}

Json report_header(const std::vector<std::string>& command, bool timestamps) {
    Json j;
    j["tool"] = "girthlab";
    j["tool_version"] = kToolVersion;
    j["command"] = command;
    if (timestamps) {
        const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        j["generated_at"] = buf;
    }
    return j;
}

std::string profile_csv_header() { return "source,vertex,lambda,signature\n"; }

std::string profile_csv_rows(const std::string& source, const Graph& g, const GirthProfile& profile) {
    std::string field = source;
    if (field.find_first_of(",\"") != std::string::npos) {
        std::string quoted = "\"";
        for (const char c : field) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
        field = quoted + "\"";
    }
    std::ostringstream out;
    for (std::size_t v = 0; v < g.order(); ++v) {
        out << field << ',' << v << ',' << profile.per_vertex[v] << ',';
        const Signature sig = signature(g, static_cast<Vertex>(v), profile);
        for (std::size_t i = 0; i < sig.size(); ++i) out << (i ? " " : "") << sig[i];
        out << '\n';
    }
    return out.str();
}

}  // namespace girthlab
