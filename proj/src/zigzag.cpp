#include "hurwitz/zigzag.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hurwitz/errors.hpp"
#include "hurwitz/symgroup.hpp"

namespace hurwitz {

std::string to_string(CoverKind kind) {
    switch (kind) {
        case CoverKind::Zigzag:
            return "zigzag";
        case CoverKind::EffectiveNonZigzag:
            return "effective";
        default:
            return "other";
    }
}

namespace {

bool is_vertex(const TropicalCover& c, int x) { return x >= 0 && x < c.branch_points(); }

std::vector<bool> sym_edges(const TropicalCover& c) {
    std::vector<bool> in_sym(c.edge_count(), false);
    for (const auto& p : c.symmetry().sym()) {
        in_sym[p.first] = true;
        in_sym[p.second] = true;
    }
    return in_sym;
}

// The two edges at v other than e.
std::pair<int, int> others(const TropicalCover& c, int v, int e) {
    std::vector<int> rest;
    for (int f : c.incident(v)) {
        if (f != e) rest.push_back(f);
    }
    return {rest[0], rest[1]};
}

bool parallel(const TropicalCover& c, int a, int b) {
    return c.edge(a).from == c.edge(b).from && c.edge(a).to == c.edge(b).to;
}

// Follows a tail away from `from` along the even edge e: a line of odd
// symmetric cycles ending in a leaf or an odd symmetric fork.
bool trace_tail(const TropicalCover& c, int e, int from, std::vector<int>& edges,
                std::vector<int>& vertices) {
    const int w = c.edge(e).weight;
    if (w % 2 != 0) return false;
    edges.push_back(e);
    const int x = c.other_end(e, from);
    if (!is_vertex(c, x)) return true;
    vertices.push_back(x);
    const auto [p, q] = others(c, x, e);
    const int half = w / 2;
    if (half % 2 == 0 || c.edge(p).weight != half || c.edge(q).weight != half) return false;
    if (!parallel(c, p, q)) return false;
    edges.push_back(p);
    edges.push_back(q);
    if (c.is_end(p)) return true;  // odd fork
    const int y = c.other_end(p, x);
    vertices.push_back(y);
    int next = -1;
    for (int f : c.incident(y)) {
        if (f != p && f != q) next = f;
    }
    return trace_tail(c, next, y, edges, vertices);
}

struct Usage {
    std::vector<int> edge_owner;
    bool claim(const std::vector<int>& edges) {
        for (int e : edges) {
            if (edge_owner[e]) return false;
            edge_owner[e] = 1;
        }
        return true;
    }
    bool complete() const {
        return std::all_of(edge_owner.begin(), edge_owner.end(), [](int o) { return o; });
    }
};

CoverClass other(std::string reason) {
    CoverClass out;
    out.reason = std::move(reason);
    return out;
}

// S a single inner vertex: every branch at v is a tail.  An odd symmetric
// pair at v is read as a tail whose first even edge has length zero.
CoverClass classify_vertex(const TropicalCover& c, int v) {
    Usage usage{std::vector<int>(c.edge_count(), 0)};
    const auto in_sym = sym_edges(c);
    const auto inc = c.incident(v);
    std::vector<int> singles;
    std::vector<int> pair;
    for (int e : inc) (in_sym[e] && c.edge(e).weight % 2 == 1 ? pair : singles).push_back(e);
    for (int e : singles) {
        std::vector<int> edges, vertices;
        if (!trace_tail(c, e, v, edges, vertices) || !usage.claim(edges)) {
            return other("branch at the single vertex is not a tail");
        }
    }
    if (pair.size() == 2) {
        if (!usage.claim(pair)) return other("overlapping tails");
        if (c.is_inner(pair[0])) {
            const int y = c.other_end(pair[0], v);
            int next = -1;
            for (int f : c.incident(y)) {
                if (f != pair[0] && f != pair[1]) next = f;
            }
            std::vector<int> edges, vertices;
            if (!trace_tail(c, next, y, edges, vertices) || !usage.claim(edges)) {
                return other("branch at the single vertex is not a tail");
            }
        }
    } else if (!pair.empty()) {
        return other("single vertex meets an unpaired odd edge");
    }
    if (!usage.complete()) return other("edges outside the tails");
    CoverClass out;
    out.kind = CoverKind::Zigzag;
    out.vertex = v;
    out.shape_ok = true;
    return out;
}

struct StringVertex {
    int string = -1;
    bool bent = false;
    int third = -1;  // the edge at v not on the string
};

std::optional<Connector> trace_connector(const TropicalCover& c, int a,
                                         const std::vector<StringVertex>& at) {
    Connector out;
    out.first_string = at[a].string;
    out.vertices.push_back(a);
    int from = a;
    int e = at[a].third;
    bool has_cycle = false;
    while (true) {
        const int w = c.edge(e).weight;
        if (w % 2 != 0) return std::nullopt;
        out.edges.push_back(e);
        const int x = c.other_end(e, from);
        if (!is_vertex(c, x)) return std::nullopt;
        out.vertices.push_back(x);
        if (at[x].string >= 0) {
            if (at[x].string == at[a].string || at[x].third != e) return std::nullopt;
            out.second_string = at[x].string;
            if (at[a].bent != at[x].bent) return std::nullopt;
            if (at[a].bent && has_cycle) return std::nullopt;
            out.type = at[a].bent ? Connector::Type::Bent : Connector::Type::Unbent;
            return out;
        }
        const auto [p, q] = others(c, x, e);
        const int half = w / 2;
        if (half % 2 != 0 || c.edge(p).weight != half || c.edge(q).weight != half ||
            !parallel(c, p, q) || c.is_end(p)) {
            return std::nullopt;
        }
        has_cycle = true;
        out.edges.push_back(p);
        out.edges.push_back(q);
        const int y = c.other_end(p, x);
        out.vertices.push_back(y);
        int next = -1;
        for (int f : c.incident(y)) {
            if (f != p && f != q) next = f;
        }
        from = y;
        e = next;
    }
}

}  // namespace

std::vector<std::vector<int>> odd_strings(const TropicalCover& c) {
    const auto in_sym = sym_edges(c);
    const int n = c.edge_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto odd = [&](int e) { return c.edge(e).weight % 2 == 1 && !in_sym[e]; };
    for (int v = 0; v < c.branch_points(); ++v) {
        std::vector<int> odd_here;
        for (int e : c.incident(v)) {
            if (odd(e)) odd_here.push_back(e);
        }
        if (odd_here.size() == 2) parent[find(odd_here[0])] = find(odd_here[1]);
    }
    std::map<int, std::vector<int>> groups;
    for (int e = 0; e < n; ++e) {
        if (odd(e)) groups[find(e)].push_back(e);
    }
    std::vector<std::vector<int>> out;
    for (auto& [root, edges] : groups) out.push_back(std::move(edges));
    return out;
}

CoverClass classify_cover(const TropicalCover& c) {
    const auto strings = odd_strings(c);
    const int r = c.branch_points();
    if (strings.empty()) {
        for (int v = 0; v < r; ++v) {
            auto result = classify_vertex(c, v);
            if (result.kind == CoverKind::Zigzag) return result;
        }
        return other("no odd string and no single-vertex centre");
    }

    std::vector<StringVertex> at(r);
    for (std::size_t s = 0; s < strings.size(); ++s) {
        for (int e : strings[s]) {
            for (int x : {c.edge(e).from, c.edge(e).to}) {
                if (is_vertex(c, x)) at[x].string = static_cast<int>(s);
            }
        }
    }
    for (int v = 0; v < r; ++v) {
        if (at[v].string < 0) continue;
        int left = 0;
        for (int e : c.incoming(v)) {
            if (c.edge(e).weight % 2 == 1) ++left;
        }
        for (int e : c.incident(v)) {
            if (c.edge(e).weight % 2 == 0) at[v].third = e;
        }
        at[v].bent = left != 1;
    }

    Usage usage{std::vector<int>(c.edge_count(), 0)};
    for (const auto& s : strings) usage.claim(s);
    std::vector<Connector> connectors;
    std::set<int> connector_edges;
    for (int v = 0; v < r; ++v) {
        if (at[v].string < 0) continue;
        const int e = at[v].third;
        if (connector_edges.count(e)) continue;
        std::vector<int> edges, vertices;
        if (trace_tail(c, e, v, edges, vertices)) {
            if (!usage.claim(edges)) return other("overlapping tails");
            continue;
        }
        auto conn = trace_connector(c, v, at);
        if (!conn) return other("string vertex " + std::to_string(v + 1) +
                                " starts neither a tail nor a connector");
        if (!usage.claim(conn->edges)) return other("overlapping connectors");
        connector_edges.insert(conn->edges.begin(), conn->edges.end());
        connectors.push_back(*conn);
    }
    if (!usage.complete()) return other("edges outside strings, connectors and tails");

    const int n = static_cast<int>(strings.size());
    if (n == 1) {
        CoverClass out;
        out.kind = CoverKind::Zigzag;
        out.strings = strings;
        out.shape_ok = true;
        return out;
    }
    if (static_cast<int>(connectors.size()) != n - 1) {
        return other("connectors do not chain the strings");
    }
    std::vector<std::vector<int>> adj(n);
    for (int k = 0; k < n - 1; ++k) {
        adj[connectors[k].first_string].push_back(k);
        adj[connectors[k].second_string].push_back(k);
    }
    int start = -1;
    for (int s = 0; s < n; ++s) {
        if (adj[s].size() > 2) return other("a string meets more than two connectors");
        if (adj[s].size() == 1 && start < 0) start = s;
    }
    if (start < 0) return other("connectors do not chain the strings");
    std::vector<int> order{start};
    std::vector<Connector> chain;
    std::vector<bool> used(n - 1, false);
    while (static_cast<int>(order.size()) < n) {
        const int cur = order.back();
        int next_k = -1;
        for (int k : adj[cur]) {
            if (!used[k]) next_k = k;
        }
        if (next_k < 0) return other("connectors do not chain the strings");
        used[next_k] = true;
        Connector conn = connectors[next_k];
        if (conn.first_string != cur) std::swap(conn.first_string, conn.second_string);
        order.push_back(conn.second_string);
        chain.push_back(conn);
    }

    CoverClass out;
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) {
        position[order[i]] = i;
        out.strings.push_back(strings[order[i]]);
    }
    for (auto& conn : chain) {
        conn.first_string = position[conn.first_string];
        conn.second_string = position[conn.second_string];
    }
    out.connectors = chain;
    out.shape_ok = true;
    const int limit = (r + 1) / 2;
    for (const auto& conn : chain) {
        for (int v : conn.vertices) {
            if (v >= limit) {
                out.reason = "connector vertex x" + std::to_string(v + 1) + " beyond x" +
                             std::to_string(limit);
                return out;
            }
        }
    }
    out.kind = CoverKind::EffectiveNonZigzag;
    return out;
}

namespace {

struct Counts {
    std::uint64_t zigzag = 0;
    std::uint64_t effective = 0;
};

Counts count_kinds(int genus, const Partition& lambda, const Partition& mu,
                   const TropicalOptions& options) {
    Counts out;
    for (const auto& cover : enumerate_covers(genus, lambda, mu, options)) {
        const auto kind = classify_cover(cover).kind;
        if (kind == CoverKind::Zigzag) ++out.zigzag;
        if (kind == CoverKind::EffectiveNonZigzag) ++out.effective;
    }
    return out;
}

}  // namespace

std::uint64_t zigzag_number(int genus, const Partition& lambda, const Partition& mu,
                            const TropicalOptions& options) {
    return count_kinds(genus, lambda, mu, options).zigzag;
}

std::uint64_t effective_nonzigzag_number(int genus, const Partition& lambda,
                                         const Partition& mu, const TropicalOptions& options) {
    return 2 * count_kinds(genus, lambda, mu, options).effective;
}

std::uint64_t effective_number(int genus, const Partition& lambda, const Partition& mu,
                               const TropicalOptions& options) {
    const auto counts = count_kinds(genus, lambda, mu, options);
    return counts.zigzag + 2 * counts.effective;
}

Colouring unique_matching_colouring(const TropicalCover& cover, const Splitting& split) {
    if (classify_cover(cover).kind != CoverKind::EffectiveNonZigzag) {
        throw PreconditionError("cover is not effective non-zigzag");
    }
    const int r = cover.branch_points();
    if (split.branch_points() != r) {
        throw PreconditionError("splitting size differs from r");
    }
    for (int i = 0; i < (r + 1) / 2; ++i) {
        if (!split.positive[i]) {
            throw PreconditionError("splitting must contain x_1..x_ceil(r/2)");
        }
    }
    std::vector<Colouring> matches;
    for (auto& rho : enumerate_colourings(cover)) {
        if (induced_splitting(cover, rho) == split) matches.push_back(std::move(rho));
    }
    if (matches.size() != 1) {
        throw InvariantError(std::to_string(matches.size()) + " colourings induce " +
                             split.to_string() + " on " + cover.canonical_form());
    }
    return matches.front();
}

bool in_excluded_family(const Partition& lambda, const Partition& mu) {
    const int d = lambda.size();
    if (d % 2 != 0 || d != mu.size()) return false;
    auto in = [&](const Partition& p) {
        return p == Partition{d} || p == Partition{d / 2, d / 2};
    };
    return in(lambda) && in(mu);
}

BoundReport verify_bounds(int genus, const Partition& lambda, const Partition& mu,
                          const TropicalOptions& options) {
    const int r = branch_count(genus, lambda, mu);
    if (in_excluded_family(lambda, mu)) {
        throw HypothesisError("{" + lambda.to_string() + ", " + mu.to_string() +
                              "} lies in {(2k),(k,k)}");
    }
    if (r <= 0) {
        throw HypothesisError("the bound needs r > 0");
    }
    BoundReport report;
    report.genus = genus;
    report.lambda = lambda;
    report.mu = mu;
    const auto counts = count_kinds(genus, lambda, mu, options);
    report.Z = counts.zigzag;
    report.Zprime = 2 * counts.effective;
    report.E = report.Z + report.Zprime;
    SearchOptions search;
    search.node_budget = options.node_budget;
    report.H_complex = complex_hurwitz(genus, lambda, mu, search);
    for (int s = 0; s <= r; ++s) {
        report.H_real.push_back(real_hurwitz(genus, lambda, mu, s, search));
    }

    auto record = [&](const std::string& what, const HurwitzValue& a, const HurwitzValue& b) {
        const bool ok = a <= b;
        report.comparisons.push_back(what + ": " + to_string(a) + " <= " + to_string(b) +
                                     (ok ? " ok" : " FAILED"));
        return ok;
    };
    const HurwitzValue z(report.Z), e(report.E);
    bool chain = record("Z <= E", z, e);
    for (int s = 0; s <= r; ++s) {
        chain = record("E <= H_real(" + std::to_string(s) + ")", e, report.H_real[s]) && chain;
        chain = record("H_real(" + std::to_string(s) + ") <= H_complex", report.H_real[s],
                       report.H_complex) &&
                chain;
    }
    report.chain_ok = chain;

    bool parity_ok = is_integer(report.H_complex);
    const int p = static_cast<int>(report.Z % 2);
    parity_ok = parity_ok && static_cast<int>(report.E % 2) == p;
    if (parity_ok) parity_ok = parity(report.H_complex) == p;
    for (const auto& h : report.H_real) {
        parity_ok = parity_ok && is_integer(h) && parity(h) == p;
    }
    report.comparisons.push_back(std::string("parity Z = E = H_real(s) = H_complex mod 2: ") +
                                 (parity_ok ? "ok" : "FAILED"));
    report.parity_ok = parity_ok;
    return report;
}

}  // namespace hurwitz
