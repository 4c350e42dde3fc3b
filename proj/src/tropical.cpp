#include "hurwitz/tropical.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "hurwitz/errors.hpp"

namespace hurwitz {

std::vector<SymPair> SymRegistry::sym() const {
    std::vector<SymPair> out = cycles;
    out.insert(out.end(), odd_forks.begin(), odd_forks.end());
    return out;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

TropicalCover::TropicalCover(int genus, int branch_points, std::vector<TropicalEdge> edges)
    : genus_(genus), r_(branch_points), edges_(std::move(edges)) {
    if (r_ < 1) {
        throw InvariantError("a tropical cover needs at least one inner vertex");
    }
    std::sort(edges_.begin(), edges_.end());
    incoming_.assign(r_, {});
    outgoing_.assign(r_, {});
    for (int e = 0; e < edge_count(); ++e) {
        const auto& ed = edges_[e];
        if (ed.weight < 1 || ed.from >= ed.to || ed.from < kMinusInfinity || ed.to > r_ ||
            (ed.from == kMinusInfinity && ed.to == r_)) {
            throw InvariantError("malformed edge " + std::to_string(ed.from) + ">" +
                                 std::to_string(ed.to));
        }
        if (ed.from >= 0) outgoing_[ed.from].push_back(e);
        if (ed.to < r_) incoming_[ed.to].push_back(e);
    }
    std::vector<int> parent(r_);
    std::iota(parent.begin(), parent.end(), 0);
    for (int v = 0; v < r_; ++v) {
        if (incoming_[v].size() + outgoing_[v].size() != 3 || incoming_[v].empty() ||
            outgoing_[v].empty()) {
            throw InvariantError("inner vertex " + std::to_string(v + 1) + " is not 3-valent");
        }
        int in = 0, out = 0;
        for (int e : incoming_[v]) in += edges_[e].weight;
        for (int e : outgoing_[v]) out += edges_[e].weight;
        if (in != out) {
            throw InvariantError("balancing fails at vertex " + std::to_string(v + 1));
        }
    }
    int components = r_;
    for (const auto& ed : edges_) {
        if (ed.from >= 0 && ed.to < r_) {
            const int a = find_root(parent, ed.from);
            const int b = find_root(parent, ed.to);
            if (a != b) {
                parent[a] = b;
                --components;
            }
        }
    }
    if (components != 1) {
        throw InvariantError("cover graph is disconnected");
    }
    // b1 = E - V + 1 with leaves counted as vertices
    const int leaves = lambda().length() + mu().length();
    const int betti = edge_count() - (r_ + leaves) + 1;
    if (betti != genus_) {
        throw InvariantError("first Betti number " + std::to_string(betti) +
                             " differs from genus " + std::to_string(genus_));
    }
    if (lambda().size() != mu().size()) {
        throw InvariantError("end weights have different totals");
    }

    for (int e = 0; e + 1 < edge_count(); ++e) {
        const auto& a = edges_[e];
        const auto& b = edges_[e + 1];
        if (a != b) continue;
        SymPair pair{SymPair::Kind::Cycle, e, e + 1, a.weight};
        if (is_inner(e)) {
            sym_.cycles.push_back(pair);
        } else {
            pair.kind = SymPair::Kind::Fork;
            (pair.odd() ? sym_.odd_forks : sym_.even_forks).push_back(pair);
        }
    }
}

int TropicalCover::degree() const { return lambda().size(); }

Partition TropicalCover::lambda() const {
    std::vector<int> parts;
    for (const auto& e : edges_) {
        if (e.from == kMinusInfinity) parts.push_back(e.weight);
    }
    return Partition(std::move(parts));
}

Partition TropicalCover::mu() const {
    std::vector<int> parts;
    for (const auto& e : edges_) {
        if (e.to == r_) parts.push_back(e.weight);
    }
    return Partition(std::move(parts));
}

std::vector<int> TropicalCover::incident(int v) const {
    std::vector<int> out = incoming_[v];
    out.insert(out.end(), outgoing_[v].begin(), outgoing_[v].end());
    return out;
}

int TropicalCover::other_end(int e, int v) const {
    return edges_[e].from == v ? edges_[e].to : edges_[e].from;
}

std::string TropicalCover::canonical_form() const {
    std::string out;
    for (const auto& e : edges_) {
        if (!out.empty()) out += ';';
        out += std::to_string(e.from) + '>' + std::to_string(e.to) + ':' +
               std::to_string(e.weight);
    }
    return out;
}

namespace {

// Left-to-right sweep.  A strand is an edge that crosses the current cut,
// identified by (left endpoint, weight); strands with equal keys are
// interchangeable, so each multiset of choices is generated once.
class Sweep {
public:
    Sweep(int genus, const Partition& lambda, const Partition& mu,
          const TropicalOptions& options)
        : genus_(genus), mu_(mu), options_(options) {
        r_ = branch_count(genus, lambda, mu);
        if (r_ < 1) {
            throw PreconditionError("tropical covers need r >= 1");
        }
        for (int w : lambda) strands_.push_back({kMinusInfinity, w});
        std::sort(strands_.begin(), strands_.end());
        parent_.resize(r_);
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    std::vector<TropicalCover> run() {
        dfs(0, static_cast<int>(strands_.size()));
        std::vector<TropicalCover> covers;
        covers.reserve(found_.size());
        for (auto& edges : found_) {
            covers.emplace_back(genus_, r_, std::move(edges));
        }
        std::sort(covers.begin(), covers.end(), [](const auto& a, const auto& b) {
            return a.edges() < b.edges();
        });
        return covers;
    }

private:
    using Strand = std::pair<int, int>;  // (origin, weight)

    // Units not yet joined: each leaf strand is its own unit, inner
    // vertices are grouped by union-find.
    int live_units() {
        std::set<int> roots;
        int leaves = 0;
        for (const auto& [origin, w] : strands_) {
            if (origin == kMinusInfinity) {
                ++leaves;
            } else {
                roots.insert(find_root(parent_, origin));
            }
        }
        return leaves + static_cast<int>(roots.size());
    }

    bool feasible(int step, int components) {
        const int remaining = r_ - step;
        const int n = static_cast<int>(strands_.size());
        const int twice_joins = remaining + n - mu_.length();
        if (twice_joins < 0 || twice_joins % 2 != 0 || twice_joins / 2 > remaining) {
            return false;
        }
        // A component with no crossing strand can never be reconnected.
        if (live_units() != components) return false;
        return components - 1 <= twice_joins / 2;
    }

    void dfs(int step, int components) {
        if (++nodes_ > options_.node_budget) {
            throw BudgetExceeded("tropical sweep exceeded node budget");
        }
        if (options_.nodes) ++*options_.nodes;
        if (step == r_) {
            finish(components);
            return;
        }
        std::vector<int> picks(strands_.size());
        std::iota(picks.begin(), picks.end(), 0);
        if (options_.order == SweepOrder::Descending) {
            std::reverse(picks.begin(), picks.end());
        }
        auto is_repeat = [&](int i, int lower) {
            return i > lower && strands_[i] == strands_[i - 1];
        };
        // joins
        for (int i : picks) {
            if (is_repeat(i, 0)) continue;
            for (int j : picks) {
                if (j <= i || is_repeat(j, i + 1)) continue;
                join(step, components, i, j);
            }
        }
        // splits
        for (int i : picks) {
            if (is_repeat(i, 0)) continue;
            const int a = strands_[i].second;
            for (int b = 1; 2 * b <= a; ++b) {
                const int part = options_.order == SweepOrder::Ascending ? b : a / 2 + 1 - b;
                split(step, components, i, part);
            }
        }
    }

    // Attaches strand s to the new vertex v; returns the change in the
    // component count.
    int attach(const Strand& s, int v) {
        edges_.push_back({s.first, v, s.second});
        if (s.first == kMinusInfinity) return -1;
        const int a = find_root(parent_, s.first);
        const int b = find_root(parent_, v);
        if (a == b) return 0;
        parent_[a] = b;
        return -1;
    }

    void join(int step, int components, int i, int j) {
        const auto saved_strands = strands_;
        const auto saved_parent = parent_;
        const auto saved_edges = edges_.size();
        const Strand a = strands_[i];
        const Strand b = strands_[j];
        int comps = components + 1;
        comps += attach(a, step);
        comps += attach(b, step);
        strands_.erase(strands_.begin() + j);
        strands_.erase(strands_.begin() + i);
        insert_sorted({step, a.second + b.second});
        if (feasible(step + 1, comps)) dfs(step + 1, comps);
        strands_ = saved_strands;
        parent_ = saved_parent;
        edges_.resize(saved_edges);
    }

    void split(int step, int components, int i, int b) {
        const auto saved_strands = strands_;
        const auto saved_parent = parent_;
        const auto saved_edges = edges_.size();
        const Strand a = strands_[i];
        int comps = components + 1;
        comps += attach(a, step);
        strands_.erase(strands_.begin() + i);
        insert_sorted({step, b});
        insert_sorted({step, a.second - b});
        if (feasible(step + 1, comps)) dfs(step + 1, comps);
        strands_ = saved_strands;
        parent_ = saved_parent;
        edges_.resize(saved_edges);
    }

    void insert_sorted(const Strand& s) {
        strands_.insert(std::lower_bound(strands_.begin(), strands_.end(), s), s);
    }

    void finish(int components) {
        if (components != 1) return;
        std::vector<int> weights;
        for (const auto& [origin, w] : strands_) {
            if (origin == kMinusInfinity) return;
            weights.push_back(w);
        }
        if (Partition(weights) != mu_) return;
        auto edges = edges_;
        for (const auto& [origin, w] : strands_) {
            edges.push_back({origin, r_, w});
        }
        found_.push_back(std::move(edges));
    }

    int genus_;
    int r_ = 0;
    Partition mu_;
    TropicalOptions options_;
    std::uint64_t nodes_ = 0;
    std::vector<Strand> strands_;
    std::vector<int> parent_;
    std::vector<TropicalEdge> edges_;
    std::vector<std::vector<TropicalEdge>> found_;
};

}  // namespace

std::vector<TropicalCover> enumerate_covers(int genus, const Partition& lambda,
                                            const Partition& mu,
                                            const TropicalOptions& options) {
    if (lambda.empty() || mu.empty()) {
        throw PreconditionError("partitions must be nonempty");
    }
    return Sweep(genus, lambda, mu, options).run();
}

std::uint64_t automorphism_count(const TropicalCover& cover) {
    const auto& sym = cover.symmetry();
    const auto pairs = sym.cycles.size() + sym.odd_forks.size() + sym.even_forks.size();
    return std::uint64_t{1} << pairs;
}

HurwitzValue mult_complex(const TropicalCover& cover) {
    BigInt product = 1;
    for (int e = 0; e < cover.edge_count(); ++e) {
        if (cover.is_inner(e)) product *= cover.edge(e).weight;
    }
    return HurwitzValue(product, BigInt(automorphism_count(cover)));
}

HurwitzValue tropical_complex_hurwitz(int genus, const Partition& lambda,
                                      const Partition& mu,
                                      const TropicalOptions& options) {
    HurwitzValue total = 0;
    for (const auto& cover : enumerate_covers(genus, lambda, mu, options)) {
        total += mult_complex(cover);
    }
    return total;
}

std::string to_dot(const TropicalCover& cover, const std::string& name) {
    std::ostringstream out;
    const int r = cover.branch_points();
    out << "digraph \"" << name << "\" {\n  rankdir=LR;\n";
    for (int v = 0; v < r; ++v) {
        out << "  x" << v + 1 << " [label=\"x" << v + 1 << "\", shape=circle];\n";
    }
    for (int e = 0; e < cover.edge_count(); ++e) {
        const auto& ed = cover.edge(e);
        std::string from = "x" + std::to_string(ed.from + 1);
        std::string to = "x" + std::to_string(ed.to + 1);
        if (cover.is_left_end(e)) {
            from = "l" + std::to_string(e);
            out << "  " << from << " [label=\"lambda " << ed.weight
                << "\", shape=plaintext];\n";
        }
        if (cover.is_right_end(e)) {
            to = "m" + std::to_string(e);
            out << "  " << to << " [label=\"mu " << ed.weight << "\", shape=plaintext];\n";
        }
        out << "  " << from << " -> " << to << " [label=\"" << ed.weight << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace hurwitz
