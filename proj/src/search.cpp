#include "girthlab/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "girthlab/canonical.hpp"
#include "girthlab/classify.hpp"
#include "girthlab/girth.hpp"
#include "girthlab/graph6.hpp"

namespace girthlab {
namespace {

using Clock = std::chrono::steady_clock;

/// Mutable labeled partial graph. Vertices 0..touched-1 are in use and form
/// one connected piece; the rest are untouched.
struct State {
    int n = 0;
    int touched = 0;
    int depth = 0;
    std::array<VertexBits, kMaxVertices> rows{};
    std::array<int, kMaxVertices> deg{};
    std::array<std::int64_t, kMaxVertices> cycles{};  // g-cycles through each vertex so far

    void add(int a, int b) {
        rows[a].set(b);
        rows[b].set(a);
        ++deg[a];
        ++deg[b];
    }
    void remove(int a, int b) {
        rows[a].reset(b);
        rows[b].reset(a);
        --deg[a];
        --deg[b];
    }
    Graph graph() const {
        GraphBuilder b(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            for_each_bit(rows[v], static_cast<std::size_t>(n), [&](Vertex w) {
                if (w > v) b.add_edge(v, w);
            });
        return std::move(b).freeze();
    }
};

int tree_depth(int g) { return (g - 1) / 2; }

int tree_size(int k, int g) {
    int size = 1, layer = 1;
    for (int t = 0; t < tree_depth(g); ++t) {
        layer *= t == 0 ? k : k - 1;
        size += layer;
    }
    return size;
}

/// Breadth-first tree of depth ⌊(g-1)/2⌋ around 0, labeled in BFS order.
State tree_state(int n, int k, int g) {
    State s;
    s.n = n;
    std::vector<int> layer{0};
    int next = 1;
    for (int t = 0; t < tree_depth(g); ++t) {
        std::vector<int> below;
        for (const int p : layer) {
            const int children = t == 0 ? k : k - 1;
            for (int c = 0; c < children; ++c) {
                s.add(p, next);
                below.push_back(next++);
            }
        }
        layer = std::move(below);
    }
    s.touched = next;
    return s;
}

/// Calls f(path) for every simple path with exactly len edges from a to b.
template <class F>
void for_each_path(const State& s, int a, int b, int len, F&& f) {
    std::vector<int> path{a};
    VertexBits used;
    used.set(a);
    auto rec = [&](auto&& self, int x, int left) -> void {
        if (left == 1) {
            if (s.rows[x].test(b)) {
                path.push_back(b);
                f(path);
                path.pop_back();
            }
            return;
        }
        for_each_bit(s.rows[x], static_cast<std::size_t>(s.n), [&](Vertex y) {
            if (used.test(y) || y == b) return;
            used.set(y);
            path.push_back(y);
            self(self, y, left - 1);
            path.pop_back();
            used.reset(y);
        });
    };
    rec(rec, a, len);
}

/// Recounts g-cycles through every vertex of a partial graph. Each cycle is
/// walked from its smallest vertex in the direction of the smaller neighbor.
void recount_cycles(State& s, int g) {
    s.cycles.fill(0);
    std::vector<int> path;
    VertexBits used;
    for (int start = 0; start < s.n; ++start) {
        path.assign(1, start);
        used.reset();
        used.set(start);
        auto rec = [&](auto&& self, int x) -> void {
            if (static_cast<int>(path.size()) == g) {
                if (s.rows[x].test(start) && path[1] < x)
                    for (const int v : path) ++s.cycles[v];
                return;
            }
            for_each_bit(s.rows[x], static_cast<std::size_t>(s.n), [&](Vertex y) {
                if (y <= start || used.test(y)) return;
                used.set(y);
                path.push_back(y);
                self(self, y);
                path.pop_back();
                used.reset(y);
            });
        };
        rec(rec, start);
    }
}

VertexBits ball(const State& s, int center, int radius) {
    VertexBits seen, layer;
    seen.set(center);
    layer.set(center);
    for (int t = 0; t < radius && layer.any(); ++t) {
        VertexBits next;
        for_each_bit(layer, static_cast<std::size_t>(s.n), [&](Vertex x) { next |= s.rows[x]; });
        layer = next & ~seen;
        seen |= next;
    }
    return seen;
}

/// The labeled graph the fill procedure produces from the canonical form:
/// root at canonical vertex 0, ties broken by canonical label.
Graph canonical_construction(const Graph& c, int g) {
    const int n = static_cast<int>(c.order());
    std::vector<int> label(n, -1), vertex_of(n, -1);
    State s;
    s.n = n;
    int next = 0;
    auto assign = [&](int x) {
        label[x] = next;
        vertex_of[next] = x;
        ++next;
    };
    assign(0);
    std::vector<int> layer{0};
    std::vector<int> parent(n, -1);
    for (int t = 0; t < tree_depth(g); ++t) {
        std::vector<int> below;
        for (const int p : layer)
            for_each_bit(c.row(p), c.order(), [&](Vertex y) {
                if (y == parent[p]) return;
                parent[y] = p;
                assign(y);
                s.add(label[p], label[y]);
                below.push_back(y);
            });
        layer = std::move(below);
    }
    for (int a = 0; a < n; ++a) {
        if (a >= next) break;  // disconnected; cannot match a search leaf
        const int x = vertex_of[a];
        std::vector<int> known, fresh;
        for_each_bit(c.row(x), c.order(), [&](Vertex y) {
            if (label[y] < 0)
                fresh.push_back(y);
            else if (!s.rows[a].test(label[y]))
                known.push_back(label[y]);
        });
        std::sort(known.begin(), known.end());
        for (const int b : known) s.add(a, b);
        for (const int y : fresh) {
            assign(y);
            s.add(a, label[y]);
        }
    }
    return s.graph();
}

struct Bucket {
    std::uint64_t enumerated = 0;
    std::vector<std::string> hits;
    std::vector<std::pair<std::string, Graph>> visited;
    std::vector<FrontierNode> leftover;
};

struct Shared {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
};

class Expander {
public:
    Expander(const SearchConfig& cfg, int n, Shared& shared, bool collect_visits)
        : cfg_(cfg), n_(n), k_(cfg.k), g_(cfg.g), shared_(shared), collect_(collect_visits) {}

    /// Expands s; nodes reaching split depth go to tasks when non-null.
    void run(State& s, Bucket& out, std::vector<State>* tasks, bool use_budget) {
        out_ = &out;
        tasks_ = tasks;
        use_budget_ = use_budget;
        expand(s);
    }

    std::set<std::string> seen;  // only without the canonical filter

private:
    bool pruned_by_lambda() const { return cfg_.lambda_prune && cfg_.lambda_filter && cfg_.girth_mode == GirthMode::Exactly; }

    void expand(State& s) {
        const auto count = ++shared_.nodes;
        if (use_budget_ && cfg_.node_budget && count > cfg_.node_budget) shared_.stop = true;
        if (tasks_ && s.depth == cfg_.split_depth) {
            tasks_->push_back(s);
            return;
        }
        int a = 0;
        while (a < n_ && s.deg[a] == k_) ++a;
        if (a == n_) {
            leaf(s);
            return;
        }
        if (s.deg[a] == 0) return;  // the used vertices are saturated: disconnected

        int min_b = a;
        for_each_bit(s.rows[a], static_cast<std::size_t>(n_), [&](Vertex y) { min_b = std::max(min_b, y); });
        ++min_b;
        const VertexBits near = ball(s, a, g_ - 2);
        std::vector<int> cand;
        for (int b = min_b; b < s.touched; ++b)
            if (s.deg[b] < k_ && !near.test(b)) cand.push_back(b);
        if (static_cast<int>(cand.size()) + (n_ - s.touched) < k_ - s.deg[a]) return;
        if (s.touched < n_) cand.push_back(s.touched);

        for (const int b : cand) {
            if (shared_.stop && use_budget_) {
                State child = s;
                child.add(a, b);
                if (b == s.touched) ++child.touched;
                ++child.depth;
                out_->leftover.push_back({write_graph6(child.graph()), child.depth});
                continue;
            }
            const auto saved_cycles = s.cycles;
            bool ok = true;
            if (pruned_by_lambda()) ok = count_new_cycles(s, a, b);
            const int old_touched = s.touched;
            s.add(a, b);
            if (b == s.touched) ++s.touched;
            ++s.depth;
            if (ok && pruned_by_lambda()) ok = saturated_counts_match(s, a, b);
            if (ok) expand(s);
            --s.depth;
            s.touched = old_touched;
            s.remove(a, b);
            s.cycles = saved_cycles;
        }
    }

    /// Adds the g-cycles closed by the edge {a,b}; false when some vertex
    /// now lies on more than λ of them.
    bool count_new_cycles(State& s, int a, int b) const {
        bool ok = true;
        for_each_path(s, a, b, g_ - 1, [&](const std::vector<int>& path) {
            for (const int x : path)
                if (++s.cycles[x] > *cfg_.lambda_filter) ok = false;
        });
        return ok;
    }

    /// A vertex whose ball of radius ⌊g/2⌋ is saturated has its final count.
    bool saturated_counts_match(const State& s, int a, int b) const {
        const int r = g_ / 2;
        VertexBits full;
        for (int v = 0; v < s.touched; ++v)
            if (s.deg[v] == k_) full.set(v);
        VertexBits check;
        if (s.deg[a] == k_) check |= ball(s, a, r);
        if (s.deg[b] == k_) check |= ball(s, b, r);
        bool ok = true;
        for_each_bit(check & full, static_cast<std::size_t>(n_), [&](Vertex v) {
            if (!ok || s.cycles[v] == *cfg_.lambda_filter) return;
            const VertexBits around = ball(s, v, r);
            if ((around & ~full).none()) ok = false;
        });
        return ok;
    }

    bool prefilter(const std::vector<std::uint64_t>& inv) const {
        if (*std::min_element(inv.begin(), inv.end()) != inv[0]) return false;
        // labels 1..k, then each consecutive group of k-1 children, must carry
        // nondecreasing invariants
        for (int v = 2; v <= k_; ++v)
            if (inv[v - 1] > inv[v]) return false;
        int start = k_ + 1;
        const int limit = tree_size(k_, g_);
        while (start < limit) {
            for (int v = start + 1; v < start + k_ - 1; ++v)
                if (inv[v - 1] > inv[v]) return false;
            start += k_ - 1;
        }
        return true;
    }

    void leaf(const State& s) {
        const Graph h = s.graph();
        if (cfg_.girth_mode == GirthMode::Exactly) {
            const Girth gi = girth(h);
            if (gi.is_acyclic() || gi.length() != g_) return;
        }
        const auto inv = distance_layer_invariant(h);
        std::string key;
        Graph rep;
        if (cfg_.canonical_filter) {
            if (!prefilter(inv)) return;
            CanonicalForm cf = canonical_form(h, inv);
            if (!(canonical_construction(cf.graph, g_) == h)) return;
            key = write_graph6(cf.graph);
            rep = std::move(cf.graph);
        } else {
            CanonicalForm cf = canonical_form(h, inv);
            key = write_graph6(cf.graph);
            if (!seen.insert(key).second) return;
            rep = std::move(cf.graph);
        }
        ++out_->enumerated;
        if (is_hit(rep)) out_->hits.push_back(key);
        if (collect_) out_->visited.emplace_back(key, std::move(rep));
    }

    bool is_hit(const Graph& h) const {
        if (!cfg_.lambda_filter) return true;
        const Girth gi = girth(h);
        if (gi.is_acyclic() || gi.length() != g_) return false;
        const GirthProfile p = girth_profile(h);
        return std::all_of(p.per_vertex.begin(), p.per_vertex.end(),
                           [&](std::uint64_t x) { return static_cast<std::int64_t>(x) == *cfg_.lambda_filter; });
    }

    const SearchConfig& cfg_;
    int n_, k_, g_;
    Shared& shared_;
    bool collect_;
    Bucket* out_ = nullptr;
    std::vector<State>* tasks_ = nullptr;
    bool use_budget_ = true;
};

void validate(const SearchConfig& c) {
    if (c.k < 2) throw DomainError("k must be at least 2");
    if (c.g < 3) throw DomainError("g must be at least 3");
    if (c.n_max < 1) throw DomainError("max order must be positive");
    const int cap = search_order_cap(c.k);
    if (c.n_max > cap)
        throw DomainError("max order " + std::to_string(c.n_max) + " exceeds the search cap " + std::to_string(cap) +
                          " (raise it with GIRTHLAB_MAX_N)");
    if (c.n_min && *c.n_min > c.n_max) throw DomainError("min order exceeds max order");
    if (c.n_min && *c.n_min == c.n_max && (c.n_max * c.k) % 2 != 0)
        throw DomainError("no " + std::to_string(c.k) + "-regular graph on " + std::to_string(c.n_max) +
                          " vertices: n*k is odd");
    if (c.lambda_filter) {
        if (*c.lambda_filter < 0) throw DomainError("lambda must be nonnegative");
        const auto bound = static_cast<std::int64_t>(vertex_cycle_bound(c.k, c.g));
        if (*c.lambda_filter > bound)
            throw DomainError("lambda " + std::to_string(*c.lambda_filter) + " exceeds the per-vertex maximum " +
                              std::to_string(bound));
    }
    if (c.split_depth < 0) throw DomainError("split depth must be nonnegative");
}

void add_count(SearchOutcome& out, int n, std::uint64_t enumerated, std::uint64_t hits) {
    auto it = std::find_if(out.per_order.begin(), out.per_order.end(), [&](const OrderCount& c) { return c.n == n; });
    if (it == out.per_order.end()) {
        out.per_order.push_back({n, 0, 0});
        std::sort(out.per_order.begin(), out.per_order.end(), [](const OrderCount& x, const OrderCount& y) { return x.n < y.n; });
        it = std::find_if(out.per_order.begin(), out.per_order.end(), [&](const OrderCount& c) { return c.n == n; });
    }
    it->enumerated += enumerated;
    it->hits += hits;
}

/// Runs the given task states for one order with the worker pool and merges
/// the buckets in task order.
void run_tasks(const SearchConfig& cfg, int n, std::vector<State>& tasks, Shared& shared, SearchOutcome& out,
               std::vector<std::pair<std::string, Graph>>& visited, bool collect, std::set<std::string>& seen) {
    std::vector<Bucket> buckets(tasks.size());
    std::vector<std::size_t> schedule(tasks.size());
    std::iota(schedule.begin(), schedule.end(), 0);
    if (cfg.seed != 0) {
        std::mt19937_64 rng(cfg.seed);
        std::shuffle(schedule.begin(), schedule.end(), rng);
    }
    const bool dedup_after = !cfg.canonical_filter;
    std::vector<std::set<std::string>> seen_per_task(dedup_after ? tasks.size() : 0);
    auto work = [&](std::size_t slot) {
        const std::size_t i = schedule[slot];
        if (shared.stop) {
            buckets[i].leftover.push_back({write_graph6(tasks[i].graph()), tasks[i].depth});
            return;
        }
        Expander ex(cfg, n, shared, collect || dedup_after);
        ex.run(tasks[i], buckets[i], nullptr, true);
    };
    const std::size_t workers = std::max<std::size_t>(1, std::min(cfg.workers, tasks.size()));
    if (workers == 1) {
        for (std::size_t slot = 0; slot < tasks.size(); ++slot) work(slot);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t slot = next++; slot < tasks.size(); slot = next++) work(slot);
            });
        for (auto& t : pool) t.join();
    }
    std::uint64_t enumerated = 0, hits = 0;
    for (auto& b : buckets) {
        if (dedup_after) {
            // without the canonical filter each bucket saw its own copies
            for (auto& [key, g] : b.visited) {
                if (!seen.insert(key).second) continue;
                ++enumerated;
                if (std::find(b.hits.begin(), b.hits.end(), key) != b.hits.end()) {
                    ++hits;
                    out.hits.push_back(key);
                }
                if (collect) visited.emplace_back(key, g);
            }
        } else {
            enumerated += b.enumerated;
            hits += b.hits.size();
            out.hits.insert(out.hits.end(), b.hits.begin(), b.hits.end());
            if (collect)
                for (auto& v : b.visited) visited.push_back(std::move(v));
        }
        out.frontier.insert(out.frontier.end(), b.leftover.begin(), b.leftover.end());
    }
    add_count(out, n, enumerated, hits);
}

State state_from_frontier(const FrontierNode& node, const SearchConfig& cfg) {
    const Graph p = parse_graph6(node.graph6);
    State s;
    s.n = static_cast<int>(p.order());
    for (int v = 0; v < s.n; ++v) {
        s.rows[v] = p.row(v);
        s.deg[v] = static_cast<int>(p.degree(v));
        if (s.deg[v] > cfg.k) throw DomainError("frontier graph exceeds degree k");
        if (s.deg[v] > 0) s.touched = v + 1;
    }
    s.depth = node.depth;
    if (cfg.lambda_prune && cfg.lambda_filter) recount_cycles(s, cfg.g);
    return s;
}

void sort_hits(std::vector<std::string>& hits) {
    std::sort(hits.begin(), hits.end(), [](const std::string& a, const std::string& b) {
        const Graph ga = parse_graph6(a), gb = parse_graph6(b);
        return std::make_pair(ga.order(), a) < std::make_pair(gb.order(), b);
    });
}

/// Orders n from `from` to n_max, appending into out.
void run_orders(const SearchConfig& cfg, int from, SearchOutcome& out, Shared& shared, const VisitFn& visit) {
    const int tree = tree_size(cfg.k, cfg.g);
    for (int n = from; n <= cfg.n_max; ++n) {
        if ((n * cfg.k) % 2 != 0) continue;
        if (shared.stop) {
            out.next_order = n;
            return;
        }
        std::vector<std::pair<std::string, Graph>> visited;
        std::set<std::string> seen;
        if (n < tree || n < cfg.k + 1) {
            add_count(out, n, 0, 0);
            continue;
        }
        State root = tree_state(n, cfg.k, cfg.g);
        std::vector<State> tasks;
        Bucket head;
        Expander ex(cfg, n, shared, static_cast<bool>(visit) || !cfg.canonical_filter);
        ex.run(root, head, &tasks, false);
        run_tasks(cfg, n, tasks, shared, out, visited, static_cast<bool>(visit), seen);
        if (!cfg.canonical_filter) {
            for (auto& [key, g] : head.visited)
                if (seen.insert(key).second) {
                    add_count(out, n, 1, 0);
                    if (std::find(head.hits.begin(), head.hits.end(), key) != head.hits.end()) {
                        add_count(out, n, 0, 1);
                        out.hits.push_back(key);
                    }
                    if (visit) visited.emplace_back(key, g);
                }
        } else {
            add_count(out, n, head.enumerated, head.hits.size());
            out.hits.insert(out.hits.end(), head.hits.begin(), head.hits.end());
            for (auto& v : head.visited) visited.push_back(std::move(v));
        }
        if (visit) {
            std::sort(visited.begin(), visited.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            for (const auto& [key, g] : visited) visit(g);
        }
        if (shared.stop) {
            out.next_order = n + 1;
            // remaining orders are picked up by resume
            for (int m = n + 1; m <= cfg.n_max; ++m)
                if ((m * cfg.k) % 2 == 0) {
                    out.suspended = true;
                    break;
                }
            out.suspended = out.suspended || !out.frontier.empty();
            return;
        }
    }
    out.next_order = cfg.n_max + 1;
}

}  // namespace

std::string to_string(GirthMode m) { return m == GirthMode::Exactly ? "exactly" : "at-least"; }

GirthMode parse_girth_mode(const std::string& text) {
    if (text == "exactly" || text == "Exactly") return GirthMode::Exactly;
    if (text == "at-least" || text == "atleast" || text == "AtLeast") return GirthMode::AtLeast;
    throw DomainError("girth mode must be 'exactly' or 'at-least', got '" + text + "'");
}

std::uint64_t SearchOutcome::total_enumerated() const {
    std::uint64_t t = 0;
    for (const auto& c : per_order) t += c.enumerated;
    return t;
}

std::uint64_t SearchOutcome::total_hits() const {
    std::uint64_t t = 0;
    for (const auto& c : per_order) t += c.hits;
    return t;
}

int search_order_cap(int k) {
    if (std::getenv("GIRTHLAB_MAX_N")) return static_cast<int>(vertex_cap());
    return std::min(static_cast<int>(kMaxVertices), k == 3 ? 20 : 16);
}

SearchOutcome generate(const SearchConfig& config, const VisitFn& visit) {
    validate(config);
    const auto start = Clock::now();
    SearchOutcome out;
    out.config = config;
    Shared shared;
    const int from = config.n_min.value_or(std::max(tree_size(config.k, config.g), config.k + 1));
    run_orders(config, from, out, shared, visit);
    sort_hits(out.hits);
    out.nodes_expanded = shared.nodes;
    out.wall_time = Clock::now() - start;
    return out;
}

SearchOutcome resume(const SearchOutcome& suspended, const VisitFn& visit) {
    const SearchConfig& cfg = suspended.config;
    validate(cfg);
    const auto start = Clock::now();
    SearchOutcome out = suspended;
    out.frontier.clear();
    out.suspended = false;
    Shared shared;
    shared.nodes = suspended.nodes_expanded;
    // the budget applies per call
    SearchConfig run_cfg = cfg;
    if (run_cfg.node_budget) run_cfg.node_budget += suspended.nodes_expanded;

    int order = -1;
    std::vector<State> tasks;
    for (const auto& node : suspended.frontier) {
        tasks.push_back(state_from_frontier(node, cfg));
        if (order >= 0 && tasks.back().n != order) throw DomainError("frontier mixes graph orders");
        order = tasks.back().n;
    }
    if (!tasks.empty()) {
        std::vector<std::pair<std::string, Graph>> visited;
        std::set<std::string> seen;
        if (!cfg.canonical_filter) {
            throw DomainError("runs without the canonical filter cannot be resumed");
        }
        run_tasks(run_cfg, order, tasks, shared, out, visited, static_cast<bool>(visit), seen);
        if (visit) {
            std::sort(visited.begin(), visited.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            for (const auto& [key, g] : visited) visit(g);
        }
        if (shared.stop && !out.frontier.empty()) {
            out.suspended = true;
            out.next_order = order + 1;
        }
    }
    if (!out.suspended) run_orders(run_cfg, std::max(suspended.next_order, order + 1), out, shared, visit);
    out.config = cfg;
    sort_hits(out.hits);
    out.nodes_expanded = shared.nodes;
    out.wall_time = suspended.wall_time + (Clock::now() - start);
    return out;
}

void write_checkpoint(const SearchOutcome& o, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw Error("cannot write checkpoint " + path);
    const SearchConfig& c = o.config;
    f << "# girthlab-frontier 1\n";
    f << "# config k=" << c.k << " g=" << c.g << " n_min=" << c.n_min.value_or(0) << " n_max=" << c.n_max
      << " girth_mode=" << to_string(c.girth_mode) << " lambda=" << (c.lambda_filter ? std::to_string(*c.lambda_filter) : "none")
      << " lambda_prune=" << c.lambda_prune << " canonical_filter=" << c.canonical_filter << " split_depth=" << c.split_depth
      << " seed=" << c.seed << " budget=" << c.node_budget << "\n";
    f << "# next_order " << o.next_order << "\n";
    f << "# nodes " << o.nodes_expanded << "\n";
    f << "# seconds " << o.wall_time.count() << "\n";
    for (const auto& pc : o.per_order) f << "# count n=" << pc.n << " enumerated=" << pc.enumerated << " hits=" << pc.hits << "\n";
    for (const auto& h : o.hits) f << "# hit " << h << "\n";
    for (const auto& node : o.frontier) f << node.graph6 << ' ' << node.depth << "\n";
    if (!f) throw Error("failed writing checkpoint " + path);
}

SearchOutcome read_checkpoint(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DomainError("cannot read checkpoint " + path);
    SearchOutcome o;
    o.suspended = true;
    std::string line;
    int lineno = 0;
    bool header = false;
    auto bad = [&](const std::string& why) { return DomainError("checkpoint line " + std::to_string(lineno) + ": " + why); };
    while (std::getline(f, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream in(line);
        if (line[0] != '#') {
            FrontierNode node;
            if (!(in >> node.graph6 >> node.depth)) throw bad("expected '<graph6> <depth>'");
            parse_graph6(node.graph6);
            o.frontier.push_back(node);
            continue;
        }
        std::string hash, tag;
        in >> hash >> tag;
        if (tag == "girthlab-frontier") {
            header = true;
        } else if (tag == "config") {
            std::string kv;
            while (in >> kv) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos) throw bad("malformed config entry '" + kv + "'");
                const std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
                SearchConfig& c = o.config;
                try {
                    if (key == "k") c.k = std::stoi(val);
                    else if (key == "g") c.g = std::stoi(val);
                    else if (key == "n_min") { if (std::stoi(val) > 0) c.n_min = std::stoi(val); }
                    else if (key == "n_max") c.n_max = std::stoi(val);
                    else if (key == "girth_mode") c.girth_mode = parse_girth_mode(val);
                    else if (key == "lambda") { if (val != "none") c.lambda_filter = std::stoll(val); }
                    else if (key == "lambda_prune") c.lambda_prune = val == "1";
                    else if (key == "canonical_filter") c.canonical_filter = val == "1";
                    else if (key == "split_depth") c.split_depth = std::stoi(val);
                    else if (key == "seed") c.seed = std::stoull(val);
                    else if (key == "budget") c.node_budget = std::stoull(val);
                    else throw bad("unknown config key '" + key + "'");
                } catch (const std::logic_error&) {
                    throw bad("bad value for " + key);
                }
            }
        } else if (tag == "next_order") {
            in >> o.next_order;
        } else if (tag == "nodes") {
            in >> o.nodes_expanded;
        } else if (tag == "seconds") {
            double s = 0;
            in >> s;
            o.wall_time = std::chrono::duration<double>(s);
        } else if (tag == "count") {
            OrderCount c;
            std::string a, b, d;
            in >> a >> b >> d;
            try {
                c.n = std::stoi(a.substr(2));
                c.enumerated = std::stoull(b.substr(11));
                c.hits = std::stoull(d.substr(5));
            } catch (const std::logic_error&) {
                throw bad("malformed count line");
            }
            o.per_order.push_back(c);
        } else if (tag == "hit") {
            std::string h;
            in >> h;
            o.hits.push_back(h);
        } else {
            throw bad("unknown header '" + tag + "'");
        }
    }
    if (!header) throw DomainError("not a girthlab checkpoint: " + path);
    return o;
}

SearchOutcome confirm_nonexistence(int k, std::int64_t epsilon2, int n_max, std::size_t workers) {
    if (k < 3) throw DomainError("k must be at least 3");
    if (epsilon2 <= 0 || epsilon2 > k - 1)
        throw DomainError("2*epsilon must lie in 1.." + std::to_string(k - 1) + ", got " + std::to_string(epsilon2));
    const std::int64_t twice = static_cast<std::int64_t>(k) * (k - 1) * (k - 1) - epsilon2;
    if (twice % 2 != 0) throw DomainError("lambda = (k(k-1)^2 - 2eps)/2 is not an integer");
    SearchConfig c;
    c.k = k;
    c.g = 5;
    c.n_max = n_max;
    c.girth_mode = GirthMode::Exactly;
    c.lambda_filter = twice / 2;
    c.workers = workers;
    return generate(c);
}

SearchOutcome find_vgr(int k, int g, std::int64_t lambda, int n_max, std::size_t workers) {
    SearchConfig c;
    c.k = k;
    c.g = g;
    c.n_max = n_max;
    c.girth_mode = GirthMode::Exactly;
    c.lambda_filter = lambda;
    c.lambda_prune = true;
    c.workers = workers;
    return generate(c);
}

}  // namespace girthlab
