#include "hurwitz/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <queue>

#include "hurwitz/errors.hpp"
#include "hurwitz/symgroup.hpp"
#include "hurwitz/zigzag.hpp"

namespace hurwitz {

namespace {

bool sign_changes(long long a, long long b) { return (a < 0 && b > 0) || (a > 0 && b < 0); }

std::vector<int> signed_steps(const Partition& lambda, const Partition& mu) {
    std::vector<int> steps(lambda.begin(), lambda.end());
    for (int p : mu) steps.push_back(-p);
    return steps;
}

constexpr std::size_t kMaxStates = 50'000'000;
constexpr int kExhaustiveSteps = 10;

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

int top_sum(const std::vector<int>& descending, int count) {
    return std::accumulate(descending.begin(), descending.begin() + count, 0);
}

}  // namespace

int sign_change_bound_exhaustive(int k, const Partition& lambda, const Partition& mu) {
    auto steps = signed_steps(lambda, mu);
    std::sort(steps.begin(), steps.end());
    const int cap = static_cast<int>(steps.size());
    int best = 0;
    do {
        long long value = k;
        int count = 0;
        for (int s : steps) {
            if (sign_changes(value, value + s)) ++count;
            value += s;
        }
        best = std::max(best, count);
    } while (best < cap && std::next_permutation(steps.begin(), steps.end()));
    return best;
}

int sign_change_bound_dp(int k, const Partition& lambda, const Partition& mu) {
    // A state is the multiset of steps already taken, in mixed radix over the
    // distinct step values; the current value follows from it.
    std::map<int, int> multiplicity;
    for (int s : signed_steps(lambda, mu)) ++multiplicity[s];
    std::vector<int> values, counts;
    for (const auto& [value, count] : multiplicity) {
        values.push_back(value);
        counts.push_back(count);
    }
    std::vector<std::size_t> radix(values.size());
    std::size_t states = 1;
    for (std::size_t i = 0; i < values.size(); ++i) {
        radix[i] = states;
        if (states > kMaxStates / (counts[i] + 1)) {
            throw BudgetExceeded("sign change search exceeds its state limit");
        }
        states *= counts[i] + 1;
    }
    std::vector<int> memo(states, -1);
    std::vector<int> used(values.size(), 0);
    std::function<int(std::size_t, long long)> best = [&](std::size_t state, long long value) {
        if (memo[state] >= 0) return memo[state];
        int out = 0;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (used[i] == counts[i]) continue;
            ++used[i];
            const long long next = value + values[i];
            out = std::max(out, (sign_changes(value, next) ? 1 : 0) + best(state + radix[i], next));
            --used[i];
        }
        memo[state] = out;
        return out;
    };
    return best(0, k);
}

int sign_change_bound(int k, const Partition& lambda, const Partition& mu) {
    if (lambda.length() + mu.length() <= kExhaustiveSteps) {
        return sign_change_bound_exhaustive(k, lambda, mu);
    }
    return sign_change_bound_dp(k, lambda, mu);
}

std::string to_string(const ExistenceCase& c) {
    std::string out;
    switch (c.condition) {
        case ExistenceCase::Condition::Equal: out = "EQ"; break;
        case ExistenceCase::Condition::Greater: out = "GT"; break;
        case ExistenceCase::Condition::Less: out = "LT"; break;
    }
    return out + (c.variant == ExistenceCase::Variant::Direct ? "-direct" : "-max-negative");
}

namespace {

// Everything about the case that does not depend on the genus.
struct CaseShape {
    ExistenceCase existence;
    int longest = 0;    // l(lambda_0) or l(mu_0), whichever enters 3 l(.)
    int threshold = 0;  // 0, or |max of the negative t|
    // Index choice for the first string (into the descending lambda_0 / mu_0).
    int i1 = -1;
    int i2 = -1;
    int j1 = -1;
    int t = 0;  // the chosen t: the signed weight of E_1
};

std::optional<CaseShape> case_shape(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) {
        throw PreconditionError("|lambda| != |mu|");
    }
    const auto tl = tail_decompose(lambda);
    const auto tm = tail_decompose(mu);
    const auto& l0 = tl.zero.vec();
    const auto& m0 = tm.zero.vec();
    const int a = tl.zero.length();
    const int b = tm.zero.length();
    const int sl = sum(l0);
    const int sm = sum(m0);

    CaseShape shape;
    struct Candidate {
        int t, i1, i2, j1;
    };
    std::vector<Candidate> candidates;  // in descending part order
    if (a == b) {
        if (a < 1 || tm.oo.length() < 1) return std::nullopt;
        shape.existence.condition = ExistenceCase::Condition::Equal;
        shape.longest = a;
        for (int i = 0; i < a; ++i) {
            for (int j = 0; j < b; ++j) candidates.push_back({sl - l0[i] - (sm - m0[j]), i, -1, j});
        }
    } else if (a > b) {
        if (2 * tm.ones_in_oo <= a - b) return std::nullopt;
        shape.existence.condition = ExistenceCase::Condition::Greater;
        shape.longest = a;
        for (int i = 0; i < a; ++i) {
            for (int j = i + 1; j < a; ++j) {
                candidates.push_back({sl - l0[i] - l0[j] - sm - a + b + 2, i, j, -1});
            }
        }
    } else {
        if (tm.oo.length() < 1 || 2 * tl.ones_in_oo <= b - a) return std::nullopt;
        shape.existence.condition = ExistenceCase::Condition::Less;
        shape.longest = b;
        for (int j = 0; j < b; ++j) candidates.push_back({sl - (sm - m0[j]) - a + b - 1, -1, -1, j});
    }

    const Candidate* chosen = nullptr;
    for (const auto& c : candidates) {
        if (c.t > 0) {
            chosen = &c;
            break;
        }
    }
    if (chosen != nullptr) {
        shape.existence.variant = ExistenceCase::Variant::Direct;
        shape.threshold = 0;
    } else {
        for (const auto& c : candidates) {
            if (c.t < 0 && (chosen == nullptr || c.t > chosen->t)) chosen = &c;
        }
        if (chosen == nullptr) return std::nullopt;
        shape.existence.variant = ExistenceCase::Variant::MaxNegative;
        shape.threshold = -chosen->t;
    }
    shape.i1 = chosen->i1;
    shape.i2 = chosen->i2;
    shape.j1 = chosen->j1;
    shape.t = chosen->t;
    return shape;
}

CaseShape checked_shape(const Partition& lambda, const Partition& mu, const ExistenceCase& c) {
    const auto shape = case_shape(lambda, mu);
    if (!shape || shape->existence != c) {
        throw PreconditionError("(" + lambda.to_string() + ", " + mu.to_string() +
                                ") is not in case " + to_string(c));
    }
    return *shape;
}

// A tail on S_1: an end of weight 2p, or an odd symmetric fork (p, p) behind
// an edge of weight 2p.
struct Tail {
    bool lambda = true;
    bool pair = false;
    int part = 0;
};

enum class Slot { Lambda0, Mu0, LambdaOne, MuOne };

struct StringSpec {
    bool first_lambda = true;
    int first = 0;
    bool second_lambda = false;
    int second = 0;

    int excess() const {
        return (first_lambda ? first : -first) + (second_lambda ? second : -second);
    }
};

// The chain of the existence proof before the strings S_2..S_n get their
// parts.
struct ChainPlan {
    CaseShape shape;
    StringSpec first;
    int x1 = 0;
    std::vector<std::pair<Slot, Slot>> slots;  // S_2..S_n
    std::vector<int> lambda0_left;             // descending
    std::vector<int> mu0_left;
    // Tail parts available to S_1, descending.
    std::vector<int> lambda_2o, lambda_2e, lambda_oo;
    std::vector<int> mu_2o, mu_2e, mu_oo;
    AppendixConstants constants;
};

std::vector<int> without_index(std::vector<int> v, int i) {
    v.erase(v.begin() + i);
    return v;
}

std::vector<int> without_ones(const Partition& oo, int count) {
    if (oo.count(1) < count) {
        throw InvariantError("not enough parts 1 in " + oo.to_string());
    }
    std::vector<int> out = oo.vec();
    out.erase(out.end() - count, out.end());
    return out;
}

ChainPlan plan_chain(const Partition& lambda, const Partition& mu, const CaseShape& shape) {
    const auto tl = tail_decompose(lambda);
    const auto tm = tail_decompose(mu);
    const auto& l0 = tl.zero.vec();
    const auto& m0 = tm.zero.vec();
    const int a = tl.zero.length();
    const int b = tm.zero.length();

    ChainPlan plan;
    plan.shape = shape;
    plan.x1 = shape.t;
    plan.lambda_2o = tl.two_o.vec();
    plan.lambda_2e = tl.two_e.vec();
    plan.lambda_oo = tl.oo.vec();
    plan.mu_2o = tm.two_o.vec();
    plan.mu_2e = tm.two_e.vec();
    plan.mu_oo = tm.oo.vec();

    using C = ExistenceCase::Condition;
    switch (shape.existence.condition) {
        case C::Equal:
            plan.first = {true, l0[shape.i1], false, m0[shape.j1]};
            plan.lambda0_left = without_index(l0, shape.i1);
            plan.mu0_left = without_index(m0, shape.j1);
            for (int s = 1; s < a; ++s) plan.slots.push_back({Slot::Lambda0, Slot::Mu0});
            break;
        case C::Greater: {
            const int k = (a - b) / 2;
            plan.first = {true, l0[shape.i1], true, l0[shape.i2]};
            plan.lambda0_left = without_index(without_index(l0, shape.i2), shape.i1);
            plan.mu0_left = m0;
            for (int s = 0; s < b; ++s) plan.slots.push_back({Slot::Lambda0, Slot::Mu0});
            for (int s = 1; s < k; ++s) {
                plan.slots.push_back({Slot::MuOne, Slot::MuOne});
                plan.slots.push_back({Slot::Lambda0, Slot::Lambda0});
            }
            plan.mu_oo = without_ones(tm.oo, k - 1);
            break;
        }
        case C::Less: {
            const int k = (b - a) / 2;
            plan.first = {true, 1, false, m0[shape.j1]};
            plan.lambda0_left = l0;
            plan.mu0_left = without_index(m0, shape.j1);
            plan.slots.push_back({Slot::LambdaOne, Slot::Mu0});
            for (int s = 0; s < a; ++s) plan.slots.push_back({Slot::Lambda0, Slot::Mu0});
            for (int s = 1; s < k; ++s) {
                plan.slots.push_back({Slot::LambdaOne, Slot::LambdaOne});
                plan.slots.push_back({Slot::Mu0, Slot::Mu0});
            }
            plan.lambda_oo = without_ones(tl.oo, k);
            break;
        }
    }

    int rest = sum(plan.lambda0_left) - sum(plan.mu0_left);
    for (const auto& [x, y] : plan.slots) {
        for (Slot s : {x, y}) {
            if (s == Slot::LambdaOne) ++rest;
            if (s == Slot::MuOne) --rest;
        }
    }
    if (rest != plan.x1) {
        throw InvariantError("weight of E_1 disagrees with the chain");
    }

    // Tails placed before v_1 so that the flow along S_1 stays positive when
    // E_1 leaves v_1.
    auto& ac = plan.constants;
    ac.existence = shape.existence;
    ac.first_end = plan.first.first;
    ac.e1 = plan.x1;
    ac.strings = 1 + static_cast<int>(plan.slots.size());
    ac.inner_vertices = 2 * ac.strings - 3;
    if (plan.x1 > 0) {
        ac.n2 = 1;
    } else {
        const int w = -plan.x1;
        const int l = plan.first.first;
        const int all_2o = 2 * sum(plan.lambda_2o);
        const int all_2e = 2 * sum(plan.lambda_2e);
        const int n_oo = static_cast<int>(plan.lambda_oo.size());
        ac.n1 = -1;
        for (int s3 = 0; s3 <= n_oo && ac.n1 < 0; ++s3) {
            if (l + all_2o + all_2e + 2 * top_sum(plan.lambda_oo, s3) > w) ac.n1 = s3;
        }
        if (ac.n1 < 0) {
            throw InvariantError("no tails before v_1 exceed the weight of E_1");
        }
        const int oo = 2 * top_sum(plan.lambda_oo, ac.n1);
        while (l + 2 * top_sum(plan.lambda_2o, ac.m1) + all_2e + oo <= w) ++ac.m1;
        const int two_o = 2 * top_sum(plan.lambda_2o, ac.m1);
        while (l + two_o + 2 * top_sum(plan.lambda_2e, ac.m2) + oo <= w) ++ac.m2;
        ac.n2 = ac.n1 + ac.m1 + ac.m2 + 1;
    }
    ac.n3 = ac.n1 + ac.n2 + ac.inner_vertices;
    auto head = [](const std::vector<int>& v, int count) {
        return Partition(std::vector<int>(v.begin(), v.begin() + count));
    };
    ac.lambda_2o_star = head(plan.lambda_2o, ac.m1);
    ac.lambda_2e_star = head(plan.lambda_2e, ac.m2);
    ac.lambda_oo_star = head(plan.lambda_oo, ac.n1);
    ac.k = plan.first.first + 2 * ac.lambda_star().size() + plan.x1;
    const Partition lambda_tail = Partition(plan.lambda_2e)
                                      .merged(Partition(plan.lambda_2o))
                                      .merged(Partition(plan.lambda_oo));
    ac.lambda_rest = lambda_tail.without(ac.lambda_star());
    ac.mu_rest =
        Partition(plan.mu_2e).merged(Partition(plan.mu_2o)).merged(Partition(plan.mu_oo));
    return plan;
}

// Abstract cover: inner vertices are node ids, leaves are kLeft / kRight, and
// every edge points left to right.
constexpr int kLeft = -1;
constexpr int kRight = -2;

struct Graph {
    struct Edge {
        int from, to, weight;
    };
    int nodes = 0;
    std::vector<Edge> edges;

    int add_node() { return nodes++; }
    void add(int from, int to, int weight) { edges.push_back({from, to, weight}); }
};

struct Attachment {
    int node;
    // Signed weight of the third edge: positive when it leaves to the right.
    // The flow along the string drops by t at the vertex.
    int t;
};

// Lays a string through the attachments and returns, per attachment, whether
// the string bends there.
std::vector<bool> lay_string(Graph& g, const StringSpec& spec,
                             const std::vector<Attachment>& sequence) {
    long long flow = spec.first_lambda ? spec.first : -spec.first;
    int prev = spec.first_lambda ? kLeft : kRight;
    std::vector<bool> bent;
    for (const auto& at : sequence) {
        if (flow > 0) {
            g.add(prev, at.node, static_cast<int>(flow));
        } else {
            g.add(at.node, prev, static_cast<int>(-flow));
        }
        const long long next = flow - at.t;
        if (next == 0) throw InvariantError("zero flow along a string");
        bent.push_back((flow > 0) != (next > 0));
        flow = next;
        prev = at.node;
    }
    const long long expected = spec.second_lambda ? -spec.second : spec.second;
    if (flow != expected) throw InvariantError("string does not balance");
    if (flow > 0) {
        g.add(prev, kRight, static_cast<int>(flow));
    } else {
        g.add(kLeft, prev, static_cast<int>(-flow));
    }
    return bent;
}

// Builds the tail at a fresh node and returns the attachment.
Attachment add_tail(Graph& g, const Tail& tail, int cycles) {
    const int u = g.add_node();
    const int p = tail.part;
    if (!tail.pair) {
        if (tail.lambda) {
            g.add(kLeft, u, 2 * p);
        } else {
            g.add(u, kRight, 2 * p);
        }
        return {u, tail.lambda ? -2 * p : 2 * p};
    }
    auto add_cycle = [&](int from) {
        const int x = g.add_node();
        const int y = g.add_node();
        g.add(from, x, 2 * p);
        g.add(x, y, p);
        g.add(x, y, p);
        return y;
    };
    if (tail.lambda) {
        const int fork = g.add_node();
        g.add(kLeft, fork, p);
        g.add(kLeft, fork, p);
        int cur = fork;
        for (int c = 0; c < cycles; ++c) cur = add_cycle(cur);
        g.add(cur, u, 2 * p);
        return {u, -2 * p};
    }
    int cur = u;
    for (int c = 0; c < cycles; ++c) cur = add_cycle(cur);
    const int fork = g.add_node();
    g.add(cur, fork, 2 * p);
    g.add(fork, kRight, p);
    g.add(fork, kRight, p);
    return {u, 2 * p};
}

std::vector<Tail> tails_of(bool lambda, const std::vector<int>& two_o,
                           const std::vector<int>& two_e, const std::vector<int>& oo) {
    std::vector<Tail> out;
    for (int p : two_o) out.push_back({lambda, false, p});
    for (int p : two_e) out.push_back({lambda, false, p});
    for (int p : oo) out.push_back({lambda, true, p});
    std::stable_sort(out.begin(), out.end(),
                     [](const Tail& x, const Tail& y) { return x.part > y.part; });
    return out;
}

// Orders the nodes so that the down-closure of `early` comes first; returns
// the position of each node, or nothing if that closure is longer than
// `limit`.
std::optional<std::vector<int>> order_nodes(const Graph& g, const std::vector<int>& early,
                                            int limit) {
    std::vector<std::vector<int>> preds(g.nodes), succs(g.nodes);
    for (const auto& e : g.edges) {
        if (e.from >= 0 && e.to >= 0) {
            preds[e.to].push_back(e.from);
            succs[e.from].push_back(e.to);
        }
    }
    std::vector<bool> closed(g.nodes, false);
    std::vector<int> stack = early;
    int closure = 0;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        if (closed[v]) continue;
        closed[v] = true;
        ++closure;
        for (int p : preds[v]) stack.push_back(p);
    }
    if (closure > limit) return std::nullopt;

    std::vector<int> indegree(g.nodes, 0);
    for (int v = 0; v < g.nodes; ++v) indegree[v] = static_cast<int>(preds[v].size());
    std::vector<int> position(g.nodes, -1);
    int next = 0;
    for (bool phase : {true, false}) {
        std::priority_queue<int, std::vector<int>, std::greater<>> ready;
        for (int v = 0; v < g.nodes; ++v) {
            if (closed[v] == phase && position[v] < 0 && indegree[v] == 0) ready.push(v);
        }
        while (!ready.empty()) {
            const int v = ready.top();
            ready.pop();
            position[v] = next++;
            for (int s : succs[v]) {
                if (--indegree[s] == 0 && closed[s] == phase) ready.push(s);
            }
        }
    }
    if (next != g.nodes) throw InvariantError("witness graph has a directed cycle");
    return position;
}

// Builds the cover for one labelling of the strings, trying both attachment
// orders on each middle string.
std::optional<TropicalCover> build_cover(int genus, int r, const ChainPlan& plan,
                                         const std::vector<StringSpec>& strings,
                                         std::string& failure) {
    const int n = static_cast<int>(strings.size());
    std::vector<int> x(n, 0);  // x[i]: signed weight of E_{i+1}, excess of S_{i+2}..S_n
    for (int i = n - 2; i >= 0; --i) x[i] = x[i + 1] + strings[i + 1].excess();
    x[n - 1] = 0;
    const auto& ac = plan.constants;

    const int middle = std::max(0, n - 2);
    for (int bits = 0; bits < (1 << middle); ++bits) {
        Graph g;
        // S_1
        std::vector<Tail> lambda_tails =
            tails_of(true, plan.lambda_2o, plan.lambda_2e, plan.lambda_oo);
        std::vector<Tail> before;
        auto take = [&](const Partition& star, bool pair) {
            for (int p : star) {
                for (auto it = lambda_tails.begin(); it != lambda_tails.end(); ++it) {
                    if (it->pair == pair && it->part == p) {
                        before.push_back(*it);
                        lambda_tails.erase(it);
                        break;
                    }
                }
            }
        };
        take(ac.lambda_oo_star, true);
        take(ac.lambda_2o_star, false);
        take(ac.lambda_2e_star, false);
        std::vector<Tail> mu_tails = tails_of(false, plan.mu_2o, plan.mu_2e, plan.mu_oo);

        // The g cycles go on the first mu fork, or failing that a lambda fork
        // after v_1.
        Tail* cycle_tail = nullptr;
        for (auto& t : mu_tails) {
            if (t.pair && cycle_tail == nullptr) cycle_tail = &t;
        }
        for (auto& t : lambda_tails) {
            if (t.pair && cycle_tail == nullptr) cycle_tail = &t;
        }
        if (genus > 0 && cycle_tail == nullptr) {
            failure = "no symmetric fork to carry the cycles";
            return std::nullopt;
        }

        std::vector<Attachment> s1;
        for (const auto& t : before) s1.push_back(add_tail(g, t, 0));
        const int v1 = g.add_node();
        s1.push_back({v1, -x[0]});
        for (auto* list : {&lambda_tails, &mu_tails}) {
            for (auto& t : *list) s1.push_back(add_tail(g, t, &t == cycle_tail ? genus : 0));
        }
        const auto s1_bent = lay_string(g, plan.first, s1);
        const bool v1_bent = s1_bent[before.size()];

        // S_2..S_n: the vertex v'_i meets E_{i-1}, the vertex v_i meets E_i.
        std::vector<int> v(n, -1), vp(n, -1);
        std::vector<bool> v_bent(n, false), vp_bent(n, false);
        v[0] = v1;
        v_bent[0] = v1_bent;
        for (int i = 1; i < n; ++i) {
            vp[i] = g.add_node();
            std::vector<Attachment> seq{{vp[i], x[i - 1]}};
            if (i < n - 1) {
                v[i] = g.add_node();
                Attachment other{v[i], -x[i]};
                if (bits & (1 << (i - 1))) {
                    seq.insert(seq.begin(), other);
                } else {
                    seq.push_back(other);
                }
            }
            const auto bent = lay_string(g, strings[i], seq);
            const bool vp_first = seq.front().node == vp[i];
            vp_bent[i] = bent[vp_first ? 0 : 1];
            if (i < n - 1) v_bent[i] = bent[vp_first ? 1 : 0];
        }
        bool types_ok = true;
        std::vector<int> connector_nodes;
        for (int i = 0; i + 1 < n; ++i) {
            types_ok = types_ok && v_bent[i] == vp_bent[i + 1];
            if (x[i] > 0) {
                g.add(vp[i + 1], v[i], x[i]);
            } else {
                g.add(v[i], vp[i + 1], -x[i]);
            }
            connector_nodes.push_back(v[i]);
            connector_nodes.push_back(vp[i + 1]);
        }
        if (!types_ok) {
            failure = "a connector mixes bent and unbent ends";
            continue;
        }
        if (g.nodes != r) throw InvariantError("witness has the wrong number of vertices");
        const auto position = order_nodes(g, connector_nodes, (r + 1) / 2);
        if (!position) {
            failure = "connector vertices cannot all precede x_ceil(r/2)";
            continue;
        }
        std::vector<TropicalEdge> edges;
        for (const auto& e : g.edges) {
            edges.push_back({e.from == kLeft ? kMinusInfinity : (*position)[e.from],
                             e.to == kRight ? r : (*position)[e.to], e.weight});
        }
        TropicalCover cover(genus, r, std::move(edges));
        const auto cls = classify_cover(cover);
        if (cls.kind == CoverKind::EffectiveNonZigzag) return cover;
        failure = "built cover classifies as " + to_string(cls.kind) + ": " + cls.reason;
    }
    return std::nullopt;
}

// Gives parts to S_2..S_n in descending order, first feasible, with every cut
// E_i of nonzero weight.
bool label_strings(int genus, int r, const ChainPlan& plan, std::size_t slot,
                   std::vector<int>& lambda_left, std::vector<int>& mu_left,
                   std::vector<StringSpec>& strings, std::optional<TropicalCover>& out,
                   std::string& failure) {
    if (slot == plan.slots.size()) {
        out = build_cover(genus, r, plan, strings, failure);
        return out.has_value();
    }
    const auto [first, second] = plan.slots[slot];
    auto rest_excess = [&] {
        int rest = sum(lambda_left) - sum(mu_left);
        for (std::size_t s = slot + 1; s < plan.slots.size(); ++s) {
            for (Slot x : {plan.slots[s].first, plan.slots[s].second}) {
                if (x == Slot::LambdaOne) ++rest;
                if (x == Slot::MuOne) --rest;
            }
        }
        return rest;
    };
    auto attempt = [&](StringSpec spec) {
        if (slot + 1 < plan.slots.size() && rest_excess() == 0) return false;
        strings.push_back(spec);
        const bool done =
            label_strings(genus, r, plan, slot + 1, lambda_left, mu_left, strings, out, failure);
        strings.pop_back();
        return done;
    };
    // Picks from `pool` (one or two parts) and recurses through `next`.
    auto pick = [&](std::vector<int>& pool, const std::function<bool(int)>& next) {
        for (std::size_t i = 0; i < pool.size(); ++i) {
            const int part = pool[i];
            pool.erase(pool.begin() + static_cast<long>(i));
            const bool done = next(part);
            pool.insert(pool.begin() + static_cast<long>(i), part);
            if (done) return true;
        }
        return false;
    };
    auto pool_of = [&](Slot s) -> std::vector<int>& {
        return s == Slot::Lambda0 ? lambda_left : mu_left;
    };
    auto is_lambda = [](Slot s) { return s == Slot::Lambda0 || s == Slot::LambdaOne; };
    auto is_one = [](Slot s) { return s == Slot::LambdaOne || s == Slot::MuOne; };

    if (is_one(first) && is_one(second)) {
        return attempt({is_lambda(first), 1, is_lambda(second), 1});
    }
    if (is_one(first)) {
        return pick(pool_of(second), [&](int q) {
            return attempt({is_lambda(first), 1, is_lambda(second), q});
        });
    }
    if (first == second) {
        // Two parts from one pool: unordered pairs, larger part first.
        auto& pool = pool_of(first);
        for (std::size_t i = 0; i < pool.size(); ++i) {
            for (std::size_t j = i + 1; j < pool.size(); ++j) {
                const int p = pool[i];
                const int q = pool[j];
                pool.erase(pool.begin() + static_cast<long>(j));
                pool.erase(pool.begin() + static_cast<long>(i));
                const bool done = attempt({is_lambda(first), p, is_lambda(second), q});
                pool.insert(pool.begin() + static_cast<long>(i), p);
                pool.insert(pool.begin() + static_cast<long>(j), q);
                if (done) return true;
            }
        }
        return false;
    }
    return pick(pool_of(first), [&](int p) {
        return pick(pool_of(second), [&](int q) {
            return attempt({is_lambda(first), p, is_lambda(second), q});
        });
    });
}

}  // namespace

Partition AppendixConstants::lambda_star() const {
    return lambda_2o_star.merged(lambda_2e_star).merged(lambda_oo_star);
}

std::optional<ExistenceCase> existence_case(int genus, const Partition& lambda,
                                            const Partition& mu) {
    const auto shape = case_shape(lambda, mu);
    if (!shape) return std::nullopt;
    if (mu.length() + 2 * genus - 3 * shape->longest > shape->threshold) {
        return shape->existence;
    }
    return std::nullopt;
}

AppendixConstants appendix_constants(const Partition& lambda, const Partition& mu,
                                     const ExistenceCase& c) {
    return plan_chain(lambda, mu, checked_shape(lambda, mu, c)).constants;
}

TropicalCover construct_witness(int genus, const Partition& lambda, const Partition& mu,
                                const ExistenceCase& c) {
    const auto found = existence_case(genus, lambda, mu);
    if (!found || *found != c) {
        throw PreconditionError("(" + lambda.to_string() + ", " + mu.to_string() +
                                ") is not in case " + to_string(c) + " for genus " +
                                std::to_string(genus));
    }
    const auto plan = plan_chain(lambda, mu, checked_shape(lambda, mu, c));
    const int r = branch_count(genus, lambda, mu);
    auto lambda_left = plan.lambda0_left;
    auto mu_left = plan.mu0_left;
    std::vector<StringSpec> strings{plan.first};
    std::optional<TropicalCover> out;
    std::string failure = "no labelling of the strings";
    if (!label_strings(genus, r, plan, 0, lambda_left, mu_left, strings, out, failure)) {
        throw InvariantError("no witness for (" + lambda.to_string() + ", " + mu.to_string() +
                             "): " + failure);
    }
    return *out;
}

BigInt lower_bound_estimate(int genus, const Partition& lambda, const Partition& mu) {
    const auto c = existence_case(genus, lambda, mu);
    if (!c) {
        throw PreconditionError("no existence condition holds for (" + lambda.to_string() +
                                ", " + mu.to_string() + ")");
    }
    const auto ac = appendix_constants(lambda, mu, *c);
    const int b = sign_change_bound(ac.k, ac.lambda_rest.scaled(2), ac.mu_rest.scaled(2));
    const int f_l = tail_decompose(lambda).oo.length();
    const int f_r = tail_decompose(mu).oo.length();
    return factorial(ac.n1) * factorial(f_l - ac.n1) * factorial(f_r) * factorial(b / 2) *
           factorial(b - b / 2);
}

SweepRow sweep_row(int genus, const Partition& lambda, const Partition& mu, int m,
                   const SweepOptions& options) {
    SweepRow row;
    row.m = m;
    const Partition l = extend_with_ones(lambda, m);
    const Partition u = extend_with_ones(mu, m);
    TropicalOptions tropical;
    tropical.node_budget = options.node_budget;
    SearchOptions search;
    search.node_budget = options.node_budget;
    try {
        const int r = branch_count(genus, l, u);
        row.in_scope = r > 0 && !in_excluded_family(l, u);
        if (row.in_scope) {
            const auto report = verify_bounds(genus, l, u, tropical);
            row.Z = report.Z;
            row.Zprime = report.Zprime;
            row.E = report.E;
            row.H_complex = report.H_complex;
            row.H_real = report.H_real;
            row.chain_ok = report.chain_ok && report.parity_ok;
        } else {
            row.Z = zigzag_number(genus, l, u, tropical);
            row.Zprime = effective_nonzigzag_number(genus, l, u, tropical);
            row.E = row.Z + row.Zprime;
            row.H_complex = complex_hurwitz(genus, l, u, search);
            for (int s = 0; s <= r; ++s) row.H_real.push_back(real_hurwitz(genus, l, u, s, search));
        }
        row.computed = true;
    } catch (const BudgetExceeded& e) {
        row.error = e.what();
        return row;
    } catch (const Error& e) {
        row.error = e.what();
        return row;
    }
    if (row.E > 0) row.log_e = std::log(static_cast<double>(row.E));
    if (row.H_complex > 0) row.log_hC = log_value(row.H_complex);
    if (m >= 2) {
        const double scale = 2.0 * m * std::log(static_cast<double>(m));
        if (row.log_e) row.log_ratio_e = *row.log_e / scale;
        if (row.log_hC) row.log_ratio_hC = *row.log_hC / scale;
    }
    return row;
}

std::vector<SweepRow> sweep(int genus, const Partition& lambda, const Partition& mu,
                            int m_max, const SweepOptions& options) {
    if (m_max < 0) throw PreconditionError("m_max must be nonnegative");
    if (lambda.size() != mu.size()) throw PreconditionError("|lambda| != |mu|");
    std::vector<SweepRow> rows;
    if (!options.parallel) {
        for (int m = 0; m <= m_max; ++m) rows.push_back(sweep_row(genus, lambda, mu, m, options));
        return rows;
    }
    std::vector<std::future<SweepRow>> pending;
    for (int m = 0; m <= m_max; ++m) {
        pending.push_back(std::async(std::launch::async, [&, m] {
            return sweep_row(genus, lambda, mu, m, options);
        }));
    }
    for (auto& f : pending) rows.push_back(f.get());
    return rows;
}

}  // namespace hurwitz
