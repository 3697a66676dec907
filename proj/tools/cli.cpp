#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "girthlab/audit.hpp"
#include "girthlab/classify.hpp"
#include "girthlab/girth.hpp"
#include "girthlab/graph6.hpp"
#include "girthlab/named_graphs.hpp"
#include "girthlab/report.hpp"
#include "girthlab/search.hpp"

namespace girthlab::cli {
namespace {

struct InputGraph {
    std::string source;
    Graph graph;
};

/// Bad input that ends the command with exit 2.
struct InputFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<InputGraph> load_inputs(const std::vector<std::string>& specs) {
    std::vector<InputGraph> out;
    for (const auto& spec : specs) {
        if (spec.rfind("named:", 0) == 0) {
            std::optional<Graph> g;
            try {
                g = named_graph(NamedGraphId::parse(spec.substr(6)));
            } catch (const Error& e) {
                throw InputFailure(spec + ": " + e.what());
            }
            out.push_back({spec, std::move(*g)});
            continue;
        }
        std::ifstream file;
        std::istream* in = &std::cin;
        if (spec != "-") {
            file.open(spec);
            if (!file) throw InputFailure(spec + ": cannot open file");
            in = &file;
        }
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(*in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            std::optional<Graph> g;
            try {
                g = parse_graph_line(line);
            } catch (const Error& e) {
                throw InputFailure(spec + ": line " + std::to_string(lineno) + ": " + e.what());
            }
            out.push_back({spec + ":" + std::to_string(lineno), std::move(*g)});
        }
    }
    return out;
}

std::vector<std::string> echo(const std::vector<std::string>& args) { return args; }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

CycleEngine parse_engine(const std::string& s) {
    if (s == "auto") return CycleEngine::Auto;
    if (s == "path") return CycleEngine::PathEnumeration;
    if (s == "girth5") return CycleEngine::Girth5Neighborhood;
    throw DomainError("engine must be auto, path or girth5");
}

AuditScope parse_scope(const std::string& s) {
    if (s == "all") return AuditScope::all();
    if (s.rfind("sample:", 0) == 0) {
        const std::string rest = s.substr(7);
        const auto comma = rest.find(',');
        try {
            std::size_t used = 0;
            const unsigned long long count = std::stoull(rest.substr(0, comma), &used);
            if (used != rest.substr(0, comma).size()) throw std::invalid_argument("count");
            std::uint64_t seed = 0;
            if (comma != std::string::npos) {
                const std::string tail = rest.substr(comma + 1);
                seed = std::stoull(tail, &used);
                if (used != tail.size()) throw std::invalid_argument("seed");
            }
            return AuditScope::sampled(seed, count);
        } catch (const std::logic_error&) {
        }
    }
    throw DomainError("scope must be 'all' or 'sample:<count>,<seed>', got '" + s + "'");
}

struct Options {
    std::vector<std::string> inputs;
    bool csv = false;
    bool timestamps = false;
    bool details = false;
    std::string engine = "auto";
    std::string scope = "all";
    std::optional<std::int64_t> lambda;
    std::optional<std::int64_t> epsilon2;
    std::size_t workers = 1;
    int k = 3;
    int g = 5;
    std::optional<int> min_n;
    int max_n = 10;
    std::string girth_mode;
    std::string checkpoint;
    std::string resume;
    std::uint64_t budget = 0;
    int split_depth = 4;
    std::uint64_t seed = 0;
    bool no_canonical_filter = false;
    bool no_prune = false;
    std::string signature;
    bool json = false;
    std::string to = "sparse6";
};

int cmd_analyze(const Options& o, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const CycleEngine engine = parse_engine(o.engine);
    const auto inputs = load_inputs(o.inputs);
    Json report = report_header(echo(args), o.timestamps);
    Json entries = Json::array();
    std::string csv = profile_csv_header();
    std::size_t errors = 0, violations = 0, inconsistent = 0, vgr = 0;
    for (const auto& in : inputs) {
        Json e;
        e["source"] = in.source;
        e["graph6"] = write_graph6(in.graph);
        try {
            if (!is_connected(in.graph)) throw DomainError("graph is not connected");
            const GirthProfile profile = girth_profile(in.graph, engine);
            const ClassificationReport cr = classify_with_profile(in.graph, profile);
            const auto checks = check_bounds(in.graph, cr);
            e["classification"] = to_json(cr, profile);
            e["bound_checks"] = to_json(checks);
            for (const auto& c : checks)
                if (!c.holds) {
                    ++violations;
                    err << in.source << ": bound check " << c.name << " fails (" << c.lhs << " vs " << c.rhs << ")\n";
                }
            vgr += cr.is_vgr ? 1 : 0;
            csv += profile_csv_rows(in.source, in.graph, profile);
        } catch (const InconsistencyError& x) {
            ++inconsistent;
            e["error"] = x.what();
            err << in.source << ": internal inconsistency: " << x.what() << '\n';
        } catch (const DomainError& x) {
            ++errors;
            e["error"] = x.what();
            err << in.source << ": " << x.what() << '\n';
        }
        entries.push_back(std::move(e));
    }
    report["entries"] = std::move(entries);
    report["summary"] = {{"graphs", inputs.size()},
                         {"errors", errors},
                         {"inconsistencies", inconsistent},
                         {"bound_violations", violations},
                         {"vgr", vgr}};
    if (o.csv)
        out << csv;
    else
        emit(out, report);
    if (inconsistent || violations) return kInconsistent;
    return errors ? kInputError : kOk;
}

int cmd_audit(const Options& o, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    AuditOptions opts;
    opts.scope = parse_scope(o.scope);
    opts.lambda_override = o.lambda;
    opts.workers = o.workers;
    const auto inputs = load_inputs(o.inputs);
    Json report = report_header(echo(args), o.timestamps);
    Json entries = Json::array();
    std::size_t audited = 0, failing = 0;
    for (const auto& in : inputs) {
        Json e;
        e["source"] = in.source;
        e["graph6"] = write_graph6(in.graph);
        try {
            opts.graph_id = in.source;
            const AuditReport rep = audit_graph(in.graph, opts);
            e["eligible"] = true;
            e["audit"] = to_json(rep, o.details);
            ++audited;
            if (!rep.summary.all_pass) {
                ++failing;
                err << in.source << ": " << rep.summary.records_failed << " record(s) fail; first: " << rep.summary.first_failure
                    << '\n';
            }
        } catch (const DomainError& x) {
            e["eligible"] = false;
            e["reason"] = x.what();
            err << in.source << ": not audited: " << x.what() << '\n';
        }
        entries.push_back(std::move(e));
    }
    report["scope"] = o.scope;
    report["entries"] = std::move(entries);
    report["summary"] = {{"graphs", inputs.size()},
                         {"audited", audited},
                         {"ineligible", inputs.size() - audited},
                         {"failing", failing},
                         {"all_pass", failing == 0}};
    emit(out, report);
    if (failing) return kFinding;
    return audited == 0 ? kInputError : kOk;
}

int cmd_search(const Options& o, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    SearchOutcome outcome;
    std::string mode = "generate";
    if (!o.resume.empty()) {
        SearchOutcome saved = read_checkpoint(o.resume);
        saved.config.workers = o.workers;
        if (o.budget) saved.config.node_budget = o.budget;
        outcome = resume(saved);
        if (outcome.config.lambda_filter) mode = outcome.config.lambda_prune ? "find_vgr" : "confirm_nonexistence";
    } else {
        SearchConfig c;
        c.k = o.k;
        c.g = o.g;
        c.n_min = o.min_n;
        c.n_max = o.max_n;
        c.workers = o.workers;
        c.node_budget = o.budget;
        c.split_depth = o.split_depth;
        c.seed = o.seed;
        c.canonical_filter = !o.no_canonical_filter;
        if (o.epsilon2) {
            if (o.g != 5) throw DomainError("--epsilon2 applies to girth 5 only");
            if (o.k < 3) throw DomainError("k must be at least 3");
            if (*o.epsilon2 <= 0 || *o.epsilon2 > o.k - 1)
                throw DomainError("2*epsilon must lie in 1.." + std::to_string(o.k - 1));
            const std::int64_t twice = static_cast<std::int64_t>(o.k) * (o.k - 1) * (o.k - 1) - *o.epsilon2;
            if (twice % 2 != 0) throw DomainError("lambda = (k(k-1)^2 - 2eps)/2 is not an integer");
            c.lambda_filter = twice / 2;
            c.girth_mode = GirthMode::Exactly;
            mode = "confirm_nonexistence";
        } else if (o.lambda) {
            c.lambda_filter = *o.lambda;
            c.girth_mode = GirthMode::Exactly;
            c.lambda_prune = !o.no_prune;
            mode = "find_vgr";
        }
        if (!o.girth_mode.empty()) {
            c.girth_mode = parse_girth_mode(o.girth_mode);
            if (c.lambda_filter && c.girth_mode != GirthMode::Exactly)
                throw DomainError("a lambda filter needs girth mode 'exactly'");
        }
        if (c.node_budget && o.checkpoint.empty()) throw DomainError("--budget needs --checkpoint");
        outcome = generate(c);
    }

    Json report = report_header(echo(args), o.timestamps);
    report["mode"] = mode;
    report["search"] = to_json(outcome, o.timestamps);
    if (mode == "find_vgr") {
        Json reports = Json::array();
        for (const auto& h : outcome.hits) {
            const Graph g = parse_graph6(h);
            const GirthProfile p = girth_profile(g);
            reports.push_back({{"graph6", h}, {"classification", to_json(classify_with_profile(g, p), p)}});
        }
        report["hit_reports"] = std::move(reports);
    }
    if (outcome.suspended) {
        const std::string path = o.checkpoint.empty() ? o.resume : o.checkpoint;
        if (path.empty()) throw DomainError("search suspended without a checkpoint path");
        write_checkpoint(outcome, path);
        report["checkpoint"] = path;
        emit(out, report);
        err << "suspended after " << outcome.nodes_expanded << " nodes; resume with --resume " << path << '\n';
        return kSuspended;
    }
    emit(out, report);
    if (mode == "confirm_nonexistence" && !outcome.hits.empty()) {
        for (const auto& h : outcome.hits) err << "THEOREM CONTRADICTION: vgr witness " << h << '\n';
        return kFinding;
    }
    return kOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
    NonexistenceVerdict v;
    if (!o.signature.empty()) {
        Signature sig;
        std::stringstream ss(o.signature);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t used = 0;
                sig.push_back(std::stoull(item, &used));
                if (used != item.size()) throw std::invalid_argument(item);
            } catch (const std::logic_error&) {
                throw DomainError("signature entries must be nonnegative integers, got '" + item + "'");
            }
        }
        v = refute_signature(o.k, o.g, sig);
    } else {
        if (!o.lambda) throw DomainError("oracle needs --lambda or --signature");
        v = known_nonexistence(o.k, o.g, *o.lambda);
    }
    if (o.json)
        emit(out, to_json(v));
    else
        out << to_string(v.status) << '(' << to_string(v.rule) << "): " << v.detail << '\n';
    return kOk;
}

int cmd_convert(const Options& o, std::ostream& out) {
    if (o.to != "graph6" && o.to != "sparse6") throw DomainError("--to must be graph6 or sparse6");
    for (const auto& in : load_inputs(o.inputs)) out << (o.to == "graph6" ? write_graph6(in.graph) : write_sparse6(in.graph)) << '\n';
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"girth-cycle analysis of regular graphs", "girthlab"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);
    Options o;

    auto* analyze = app.add_subcommand("analyze", "classify graphs and check the cycle-count bounds");
    analyze->add_option("inputs", o.inputs, "graph6/sparse6 files, '-' for stdin, or named:<id>")->required();
    analyze->add_option("--engine", o.engine, "cycle counter: auto, path or girth5");
    analyze->add_flag("--csv", o.csv, "per-vertex CSV table instead of JSON");
    analyze->add_flag("--timestamps", o.timestamps, "add a generation time to the report");

    auto* audit = app.add_subcommand("audit", "recheck the girth-5 counting argument on vgr graphs");
    audit->add_option("inputs", o.inputs, "graph6/sparse6 files, '-' for stdin, or named:<id>")->required();
    audit->add_option("--scope", o.scope, "all or sample:<count>,<seed>");
    audit->add_option("--lambda", o.lambda, "use this lambda instead of the measured one");
    audit->add_option("--workers", o.workers, "threads")->check(CLI::PositiveNumber);
    audit->add_flag("--details", o.details, "list every record and vertex set");
    audit->add_flag("--timestamps", o.timestamps, "add a generation time to the report");

    auto* search = app.add_subcommand("search", "enumerate connected k-regular graphs of given girth");
    search->add_option("--k", o.k, "degree");
    search->add_option("--g", o.g, "girth");
    search->add_option("--min-n", o.min_n, "smallest order");
    search->add_option("--max-n", o.max_n, "largest order");
    auto* lam = search->add_option("--lambda", o.lambda, "keep vgr graphs with this lambda");
    search->add_option("--epsilon2", o.epsilon2, "confirm no vgr graph with 2*epsilon in the excluded range")->excludes(lam);
    search->add_option("--girth-mode", o.girth_mode, "exactly or at-least");
    search->add_option("--workers", o.workers, "threads")->check(CLI::PositiveNumber);
    search->add_option("--checkpoint", o.checkpoint, "frontier file written on suspension");
    search->add_option("--resume", o.resume, "continue from a frontier file");
    search->add_option("--budget", o.budget, "node budget before suspending");
    search->add_option("--split-depth", o.split_depth, "fill depth at which work is split");
    search->add_option("--seed", o.seed, "permutes the subtree schedule");
    search->add_flag("--no-canonical-filter", o.no_canonical_filter, "deduplicate completed graphs afterwards");
    search->add_flag("--no-prune", o.no_prune, "do not prune by partial cycle counts");
    search->add_flag("--timestamps", o.timestamps, "add generation and wall time to the report");

    auto* oracle = app.add_subcommand("oracle", "is a vgr(n,k,g,lambda) graph excluded for all n?");
    oracle->add_option("--k", o.k, "degree")->required();
    oracle->add_option("--g", o.g, "girth")->required();
    auto* olam = oracle->add_option("--lambda", o.lambda, "vertex cycle count");
    oracle->add_option("--signature", o.signature, "comma-separated signature (even girth)")->excludes(olam);
    oracle->add_flag("--json", o.json, "print the verdict as JSON");

    auto* convert = app.add_subcommand("convert", "rewrite graphs as graph6 or sparse6");
    convert->add_option("inputs", o.inputs, "graph6/sparse6 files, '-' for stdin, or named:<id>")->required();
    convert->add_option("--to", o.to, "graph6 or sparse6");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "girthlab: " << e.what() << '\n';
        return kInputError;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(o, args, out, err);
        if (audit->parsed()) return cmd_audit(o, args, out, err);
        if (search->parsed()) return cmd_search(o, args, out, err);
        if (oracle->parsed()) return cmd_oracle(o, out);
        if (convert->parsed()) return cmd_convert(o, out);
    } catch (const InputFailure& e) {
        err << "girthlab: " << e.what() << '\n';
        return kInputError;
    } catch (const InconsistencyError& e) {
        err << "girthlab: internal inconsistency: " << e.what() << '\n';
        return kInconsistent;
    } catch (const DomainError& e) {
        err << "girthlab: " << e.what() << '\n';
        return kInputError;
    } catch (const std::logic_error& e) {
        err << "girthlab: internal error: " << e.what() << '\n';
        return kInconsistent;
    } catch (const std::exception& e) {
        err << "girthlab: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace girthlab::cli
