#include "girthlab/classify.hpp"

#include <algorithm>
#include <limits>

namespace girthlab {
namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) throw DomainError("integer overflow in bound computation");
    return a * b;
}

std::uint64_t checked_pow(std::uint64_t base, std::int64_t exp) {
    std::uint64_t r = 1;
    for (std::int64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

void require_kg(std::int64_t k, std::int64_t g, std::int64_t min_k) {
    if (k < min_k) throw DomainError("k must be at least " + std::to_string(min_k));
    if (g < 3) throw DomainError("g must be at least 3");
}

bool is_prime_power(std::int64_t q) {
    if (q < 2) return false;
    for (std::int64_t p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
            while (q % p == 0) q /= p;
            return q == 1;
        }
    }
    return true;
}

}  // namespace

std::uint64_t moore_bound(std::int64_t k, std::int64_t g) {
    require_kg(k, g, 2);
    const auto d = static_cast<std::uint64_t>(k - 1);
    std::uint64_t sum = 0;
    if (g % 2 == 1) {
        for (std::int64_t i = 0; i <= (g - 3) / 2; ++i) sum += checked_pow(d, i);
        return 1 + checked_mul(static_cast<std::uint64_t>(k), sum);
    }
    for (std::int64_t i = 0; i <= g / 2 - 1; ++i) sum += checked_pow(d, i);
    return checked_mul(2, sum);
}

std::uint64_t vertex_cycle_bound(std::int64_t k, std::int64_t g) {
    require_kg(k, g, 2);
    // k(k-1) is even, so the halving is exact for g ≥ 2
    return checked_mul(static_cast<std::uint64_t>(k), checked_pow(static_cast<std::uint64_t>(k - 1), g / 2)) / 2;
}

std::uint64_t edge_cycle_bound(std::int64_t k, std::int64_t g) {
    require_kg(k, g, 2);
    return checked_pow(static_cast<std::uint64_t>(k - 1), g / 2);
}

std::string ClassificationReport::epsilon_text() const {
    if (!two_epsilon) return {};
    const std::int64_t e2 = *two_epsilon;
    return e2 % 2 == 0 ? std::to_string(e2 / 2) : std::to_string(e2) + "/2";
}

ClassificationReport classify(const Graph& g) {
    if (!is_connected(g)) throw DomainError("classification needs a connected graph");
    const Girth gi = girth(g);
    if (gi.is_acyclic()) throw DomainError("classification needs a graph with a cycle");
    return classify_with_profile(g, girth_profile(g));
}

ClassificationReport classify_with_profile(const Graph& g, const GirthProfile& profile) {
    ClassificationReport r;
    r.n = g.order();
    r.girth = profile.girth;
    if (profile.order() != g.order()) throw DomainError("profile does not match graph order");

    const auto q = basic_queries(g);
    if (q.is_regular) r.k = q.k;

    const auto edges = g.edges();
    r.max_vertex_count = profile.per_vertex.empty() ? 0 : *std::max_element(profile.per_vertex.begin(), profile.per_vertex.end());
    for (const Edge& e : edges) r.max_edge_count = std::max(r.max_edge_count, profile.edge(e.a, e.b));

    if (r.k && *r.k >= 2) {
        const auto k = static_cast<std::int64_t>(*r.k);
        r.vertex_bound = vertex_cycle_bound(k, r.girth);
        r.edge_bound = edge_cycle_bound(k, r.girth);
        r.moore_deficit = static_cast<std::int64_t>(r.n) - static_cast<std::int64_t>(moore_bound(k, r.girth));

        const auto& pv = profile.per_vertex;
        r.is_vgr = std::all_of(pv.begin(), pv.end(), [&](std::uint64_t x) { return x == pv.front(); });
        if (r.is_vgr) {
            r.lambda_vertex = pv.front();
            r.two_epsilon = 2 * static_cast<std::int64_t>(*r.vertex_bound) - 2 * static_cast<std::int64_t>(pv.front());
        }

        const Signature first = signature(g, 0, profile);
        r.is_gr = true;
        for (std::size_t v = 1; v < r.n && r.is_gr; ++v) r.is_gr = signature(g, static_cast<Vertex>(v), profile) == first;
        if (r.is_gr) r.common_signature = first;

        r.is_egr = std::all_of(edges.begin(), edges.end(),
                               [&](const Edge& e) { return profile.edge(e.a, e.b) == profile.edge(edges[0].a, edges[0].b); });
        if (r.is_egr && !edges.empty()) r.lambda_edge = profile.edge(edges[0].a, edges[0].b);

        if (r.is_vgr && r.girth % 2 == 1 && k >= 3 && *r.two_epsilon > 0 && *r.two_epsilon <= k - 1)
            throw InconsistencyError("profile claims vgr(" + std::to_string(r.n) + "," + std::to_string(k) + "," +
                                     std::to_string(r.girth) + "," + std::to_string(*r.lambda_vertex) +
                                     ") with epsilon " + r.epsilon_text() + ", which cannot exist");
    }
    return r;
}

std::vector<BoundCheck> check_bounds(const Graph& g, const ClassificationReport& report) {
    std::vector<BoundCheck> out;
    if (!report.k || !report.vertex_bound) return out;
    auto upper = [&](std::string name, std::uint64_t lhs, std::uint64_t rhs) {
        BoundCheck c{std::move(name), static_cast<std::int64_t>(lhs), static_cast<std::int64_t>(rhs)};
        c.slack = c.rhs - c.lhs;
        c.holds = c.slack >= 0;
        out.push_back(std::move(c));
    };
    upper("vertex_bound", report.max_vertex_count, *report.vertex_bound);
    upper("edge_bound", report.max_edge_count, *report.edge_bound);
    BoundCheck moore{"moore_order", static_cast<std::int64_t>(g.order()),
                     static_cast<std::int64_t>(moore_bound(static_cast<std::int64_t>(*report.k), report.girth))};
    moore.slack = moore.lhs - moore.rhs;
    moore.holds = moore.slack >= 0;
    out.push_back(std::move(moore));
    return out;
}

std::string to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::ExcludedByTheorem: return "ExcludedByTheorem";
        case VerdictStatus::KnownToExist: return "KnownToExist";
        case VerdictStatus::Unknown: return "Unknown";
    }
    return "?";
}

std::string to_string(VerdictRule r) {
    switch (r) {
        case VerdictRule::EvenGirthSignature: return "EvenGirthSignature";
        case VerdictRule::OddGirthGe7: return "OddGirthGe7";
        case VerdictRule::Girth3: return "Girth3";
        case VerdictRule::Girth5: return "Girth5";
        case VerdictRule::MooreCase: return "MooreCase";
        case VerdictRule::None: return "None";
    }
    return "?";
}

NonexistenceVerdict known_nonexistence(std::int64_t k, std::int64_t g, std::int64_t lambda) {
    require_kg(k, g, 3);
    if (lambda < 0) throw DomainError("lambda must be nonnegative");
    const auto bound = static_cast<std::int64_t>(vertex_cycle_bound(k, g));
    if (lambda > bound)
        throw DomainError("lambda " + std::to_string(lambda) + " exceeds the per-vertex maximum " + std::to_string(bound));
    const std::int64_t epsilon = bound - lambda;
    const std::string triple = "(k,g,lambda)=(" + std::to_string(k) + "," + std::to_string(g) + "," + std::to_string(lambda) + ")";

    if (epsilon == 0) {
        // λ at the maximum forces every edge to its maximum too, i.e. a Moore graph.
        if (g == 3) return {VerdictStatus::KnownToExist, VerdictRule::MooreCase, "complete graph K_" + std::to_string(k + 1)};
        if (g == 4) return {VerdictStatus::KnownToExist, VerdictRule::MooreCase, "complete bipartite graph K_{k,k}"};
        if (g == 6 || g == 8 || g == 12) {
            if (is_prime_power(k - 1))
                return {VerdictStatus::KnownToExist, VerdictRule::MooreCase,
                        "generalized polygon of prime-power order " + std::to_string(k - 1)};
            return {VerdictStatus::Unknown, VerdictRule::None,
                    "Moore graph would be a generalized polygon of non-prime-power order " + std::to_string(k - 1)};
        }
        if (g == 5 && (k == 3 || k == 7)) return {VerdictStatus::KnownToExist, VerdictRule::MooreCase,
                                                  k == 3 ? "Petersen graph" : "Hoffman-Singleton graph"};
        if (g == 5 && k == 57) return {VerdictStatus::Unknown, VerdictRule::None, "existence of the (57,5) Moore graph is open"};
        return {VerdictStatus::ExcludedByTheorem, VerdictRule::MooreCase, "no Moore graph exists for " + triple};
    }

    if (g % 2 == 1 && 2 * epsilon <= k - 1) {
        const VerdictRule rule = g == 3 ? VerdictRule::Girth3 : g == 5 ? VerdictRule::Girth5 : VerdictRule::OddGirthGe7;
        return {VerdictStatus::ExcludedByTheorem, rule,
                triple + " has epsilon " + std::to_string(epsilon) + " in (0, (k-1)/2]"};
    }
    return {VerdictStatus::Unknown, VerdictRule::None, triple + " has epsilon " + std::to_string(epsilon) + " outside every theorem range"};
}

NonexistenceVerdict refute_signature(std::int64_t k, std::int64_t g, const Signature& claimed) {
    require_kg(k, g, 3);
    if (claimed.size() != static_cast<std::size_t>(k)) throw DomainError("signature length must equal k");
    if (!std::is_sorted(claimed.begin(), claimed.end())) throw DomainError("signature must be nondecreasing");
    if (g % 2 == 1) return {VerdictStatus::Unknown, VerdictRule::None, "signature gap applies to even girth only"};
    const auto top = static_cast<std::int64_t>(edge_cycle_bound(k, g));
    const std::int64_t epsilon = top - static_cast<std::int64_t>(claimed.back());
    if (epsilon > 0 && epsilon < k - 1)
        return {VerdictStatus::ExcludedByTheorem, VerdictRule::EvenGirthSignature,
                "largest signature entry is (k-1)^(g/2) - " + std::to_string(epsilon) + " with 0 < epsilon < k-1"};
    return {VerdictStatus::Unknown, VerdictRule::None, "largest signature entry outside the excluded gap"};
}

}  // namespace girthlab
