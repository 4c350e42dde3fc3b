#include "hurwitz/symgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>
#include <unordered_map>
#include <utility>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

using Count = unsigned __int128;

// Orbit partition of {0..d-1}, stored as canonical block labels (restricted
// growth string) so equal partitions have equal codes.
class Blocks {
public:
    explicit Blocks(int degree) : degree_(degree) {
        for (int i = 0; i < degree; ++i) {
            label_[i] = static_cast<std::uint8_t>(i);
        }
        count_ = degree;
    }

    static Blocks from_cycles(const Permutation& p) {
        Blocks b(p.degree());
        for (int i = 0; i < p.degree(); ++i) {
            b.merge(i, p(i));
        }
        return b;
    }

    void merge(int a, int b) {
        const std::uint8_t la = label_[a];
        const std::uint8_t lb = label_[b];
        if (la == lb) {
            return;
        }
        for (int i = 0; i < degree_; ++i) {
            if (label_[i] == lb) {
                label_[i] = la;
            }
        }
        --count_;
        canonicalize();
    }

    int count() const { return count_; }

    std::uint64_t code() const {
        std::uint64_t out = 0;
        for (int i = 0; i < degree_; ++i) {
            out |= static_cast<std::uint64_t>(label_[i]) << (4 * i);
        }
        return out;
    }

private:
    void canonicalize() {
        std::array<int, kMaxDegree> remap;
        remap.fill(-1);
        int next = 0;
        for (int i = 0; i < degree_; ++i) {
            if (remap[label_[i]] < 0) {
                remap[label_[i]] = next++;
            }
            label_[i] = static_cast<std::uint8_t>(remap[label_[i]]);
        }
    }

    std::array<std::uint8_t, kMaxDegree> label_{};
    int degree_;
    int count_;
};

struct StateKey {
    std::uint64_t prefix;
    std::uint64_t suffix;
    std::uint64_t blocks;
    int step;

    bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
    std::size_t operator()(const StateKey& k) const {
        std::uint64_t h = k.prefix * 0x9E3779B97F4A7C15ULL;
        h ^= k.suffix + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
        h ^= k.blocks + 0x94D049BB133111EBULL + (h << 6) + (h >> 2);
        h ^= static_cast<std::uint64_t>(k.step) * 0xBF58476D1CE4E5B9ULL;
        return static_cast<std::size_t>(h);
    }
};

Permutation left_transpose(const Permutation& p, int a, int b) {
    return Permutation::transposition(p.degree(), a, b) * p;
}

Count checked_add(Count a, Count b) {
    if (std::numeric_limits<Count>::max() - a < b) {
        throw BudgetExceeded("factorization count overflows 128 bits");
    }
    return a + b;
}

BigInt to_big(Count value) {
    BigInt out = 0;
    BigInt base = 1;
    while (value > 0) {
        out += base * static_cast<unsigned>(value % 1000000000U);
        value /= 1000000000U;
        base *= 1000000000U;
    }
    return out;
}

// Depth-first count of transposition sequences completing a (real)
// factorization.  Steps [0, split) extend the prefix product
// tau_i ... tau_1 sigma1; steps [split, r) extend the suffix product
// tau_j ... tau_{s+1}.  The complex count is the real search with
// split = r and no gamma.
class TranspositionSearch {
public:
    TranspositionSearch(int degree, int branch_points, int split, const Partition& mu,
                        const SearchOptions& options)
        : degree_(degree), r_(branch_points), split_(split), mu_(mu),
          options_(options) {
        for (int a = 0; a < degree; ++a) {
            for (int b = a + 1; b < degree; ++b) {
                transpositions_.emplace_back(a, b);
            }
        }
        if (options.order == BranchOrder::Descending) {
            std::reverse(transpositions_.begin(), transpositions_.end());
        }
    }

    Count run(const Permutation& sigma1, const std::optional<Permutation>& gamma) {
        gamma_ = gamma;
        memo_.clear();
        return visit(0, sigma1, Permutation::identity(degree_), Blocks::from_cycles(sigma1));
    }

    std::uint64_t nodes() const { return nodes_; }
    std::uint64_t memo_hits() const { return memo_hits_; }

private:
    Count visit(int step, const Permutation& prefix, const Permutation& suffix,
                const Blocks& blocks) {
        if (++nodes_ > options_.node_budget) {
            throw BudgetExceeded("node budget of " + std::to_string(options_.node_budget) +
                                 " exhausted");
        }
        const int remaining = r_ - step;
        const Permutation product = suffix * prefix;
        // Each transposition changes the cycle count by exactly one.
        const int gap = product.cycle_count() - mu_.length();
        if (std::abs(gap) > remaining || (remaining - gap) % 2 != 0) {
            return 0;
        }
        // Each transposition merges at most two orbits.
        if (blocks.count() - 1 > remaining) {
            return 0;
        }
        if (remaining == 0) {
            return product.inverse().cycle_type() == mu_ ? 1 : 0;
        }
        const StateKey key{prefix.code(), suffix.code(), blocks.code(), step};
        if (options_.memoize) {
            if (auto it = memo_.find(key); it != memo_.end()) {
                ++memo_hits_;
                return it->second;
            }
        }
        Count total = 0;
        for (auto [a, b] : transpositions_) {
            Blocks next_blocks = blocks;
            next_blocks.merge(a, b);
            if (step < split_) {
                Permutation next = left_transpose(prefix, a, b);
                if (gamma_ && !reversed_by(*gamma_, next)) {
                    continue;
                }
                total = checked_add(total, visit(step + 1, next, suffix, next_blocks));
            } else {
                Permutation next = left_transpose(suffix, a, b);
                if (gamma_ && !reversed_by(*gamma_, next)) {
                    continue;
                }
                total = checked_add(total, visit(step + 1, prefix, next, next_blocks));
            }
        }
        if (options_.memoize) {
            memo_.emplace(key, total);
        }
        return total;
    }

    int degree_;
    int r_;
    int split_;
    Partition mu_;
    SearchOptions options_;
    std::vector<std::pair<int, int>> transpositions_;
    std::optional<Permutation> gamma_;
    std::unordered_map<StateKey, Count, StateKeyHash> memo_;
    std::uint64_t nodes_ = 0;
    std::uint64_t memo_hits_ = 0;
};

struct Instance {
    int degree;
    int r;
};

Instance validate(int genus, const Partition& lambda, const Partition& mu) {
    const int r = branch_count(genus, lambda, mu);
    const int d = lambda.size();
    if (d < 1) {
        throw PreconditionError("degree must be at least 1");
    }
    if (d > kMaxDegree) {
        throw PreconditionError("degree " + std::to_string(d) + " exceeds the supported " +
                                std::to_string(kMaxDegree));
    }
    if (r < 0) {
        throw PreconditionError("branch point count r = " + std::to_string(r) +
                                " is negative");
    }
    return {d, r};
}

std::vector<Permutation> sigma1_choices(const Partition& lambda, SigmaStrategy strategy) {
    if (strategy == SigmaStrategy::ClassRepresentative) {
        return {Permutation::with_cycle_type(lambda)};
    }
    return all_of_cycle_type(lambda);
}

BigInt class_multiplier(const Partition& lambda, SigmaStrategy strategy) {
    return strategy == SigmaStrategy::ClassRepresentative
               ? BigInt(conjugacy_class_size(lambda))
               : BigInt(1);
}

void record(const SearchOptions& options, const TranspositionSearch& search) {
    if (options.stats) {
        options.stats->nodes += search.nodes();
        options.stats->memo_hits += search.memo_hits();
    }
}

bool transitive(int degree, const std::vector<const Permutation*>& generators) {
    std::vector<bool> reached(degree, false);
    std::vector<int> frontier{0};
    reached[0] = true;
    while (!frontier.empty()) {
        const int x = frontier.back();
        frontier.pop_back();
        for (const Permutation* g : generators) {
            const int y = (*g)(x);
            if (!reached[y]) {
                reached[y] = true;
                frontier.push_back(y);
            }
        }
    }
    return std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
}

}  // namespace

std::uint64_t default_node_budget() {
    if (const char* env = std::getenv("HURWITZ_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw PreconditionError(std::string("HURWITZ_BUDGET is not a number: ") + env);
        }
    }
    return SearchOptions{}.node_budget;
}

BigInt count_factorizations(int genus, const Partition& lambda, const Partition& mu,
                            const SearchOptions& options) {
    const auto [d, r] = validate(genus, lambda, mu);
    TranspositionSearch search(d, r, r, mu, options);
    Count total = 0;
    try {
        for (const auto& sigma1 : sigma1_choices(lambda, options.strategy)) {
            total = checked_add(total, search.run(sigma1, std::nullopt));
        }
    } catch (...) {
        record(options, search);
        throw;
    }
    record(options, search);
    return to_big(total) * class_multiplier(lambda, options.strategy);
}

HurwitzValue complex_hurwitz(int genus, const Partition& lambda, const Partition& mu,
                             const SearchOptions& options) {
    const BigInt count = count_factorizations(genus, lambda, mu, options);
    return HurwitzValue(count, factorial(lambda.size()));
}

BigInt count_real_factorizations(int genus, const Partition& lambda, const Partition& mu,
                                 int s, const SearchOptions& options) {
    const auto [d, r] = validate(genus, lambda, mu);
    if (s < 0 || s > r) {
        throw PreconditionError("s = " + std::to_string(s) + " outside [0, " +
                                std::to_string(r) + "]");
    }
    TranspositionSearch search(d, r, s, mu, options);
    const auto involutions = all_involutions(d);
    Count total = 0;
    try {
        for (const auto& sigma1 : sigma1_choices(lambda, options.strategy)) {
            for (const auto& gamma : involutions) {
                if (reversed_by(gamma, sigma1)) {
                    total = checked_add(total, search.run(sigma1, gamma));
                }
            }
        }
    } catch (...) {
        record(options, search);
        throw;
    }
    record(options, search);
    return to_big(total) * class_multiplier(lambda, options.strategy);
}

HurwitzValue real_hurwitz(int genus, const Partition& lambda, const Partition& mu, int s,
                          const SearchOptions& options) {
    const BigInt count = count_real_factorizations(genus, lambda, mu, s, options);
    return HurwitzValue(count, factorial(lambda.size()));
}

bool is_factorization(const FactorizationTuple& t, int genus, const Partition& lambda,
                      const Partition& mu) {
    if (lambda.size() != mu.size()) {
        return false;
    }
    const int d = lambda.size();
    const int r = lambda.length() + mu.length() + 2 * genus - 2;
    if (static_cast<int>(t.taus.size()) != r || t.sigma1.degree() != d ||
        t.sigma2.degree() != d) {
        return false;
    }
    Permutation product = t.sigma1;
    for (const auto& tau : t.taus) {
        if (tau.degree() != d || !tau.is_transposition()) {
            return false;
        }
        product = tau * product;
    }
    product = t.sigma2 * product;
    if (!product.is_identity()) {
        return false;
    }
    if (t.sigma1.cycle_type() != lambda || t.sigma2.cycle_type() != mu) {
        return false;
    }
    std::vector<const Permutation*> generators{&t.sigma1, &t.sigma2};
    for (const auto& tau : t.taus) {
        generators.push_back(&tau);
    }
    return transitive(d, generators);
}

bool is_real_factorization(const FactorizationTuple& t, int genus,
                           const Partition& lambda, const Partition& mu, int s) {
    if (!t.gamma || !is_factorization(t, genus, lambda, mu)) {
        return false;
    }
    const int r = static_cast<int>(t.taus.size());
    if (s < 0 || s > r) {
        return false;
    }
    const Permutation& gamma = *t.gamma;
    if (!gamma.is_involution() || !reversed_by(gamma, t.sigma1)) {
        return false;
    }
    Permutation prefix = t.sigma1;
    for (int i = 0; i < s; ++i) {
        prefix = t.taus[i] * prefix;
        if (!reversed_by(gamma, prefix)) {
            return false;
        }
    }
    Permutation suffix = Permutation::identity(t.sigma1.degree());
    for (int j = s; j < r; ++j) {
        suffix = t.taus[j] * suffix;
        if (!reversed_by(gamma, suffix)) {
            return false;
        }
    }
    return true;
}

void for_each_real_factorization(
    int genus, const Partition& lambda, const Partition& mu, int s,
    const std::function<void(const FactorizationTuple&)>& visit) {
    const auto [d, r] = validate(genus, lambda, mu);
    if (s < 0 || s > r) {
        throw PreconditionError("s outside [0, r]");
    }
    std::vector<Permutation> transpositions;
    for (int a = 0; a < d; ++a) {
        for (int b = a + 1; b < d; ++b) {
            transpositions.push_back(Permutation::transposition(d, a, b));
        }
    }
    FactorizationTuple tuple;
    std::function<void(int, const Permutation&, const Permutation&)> extend =
        [&](int step, const Permutation& prefix, const Permutation& suffix) {
            if (step == r) {
                tuple.sigma2 = (suffix * prefix).inverse();
                if (tuple.sigma2.cycle_type() != mu) {
                    return;
                }
                std::vector<const Permutation*> generators{&tuple.sigma1, &tuple.sigma2};
                for (const auto& tau : tuple.taus) {
                    generators.push_back(&tau);
                }
                if (transitive(d, generators)) {
                    visit(tuple);
                }
                return;
            }
            for (const auto& tau : transpositions) {
                const bool in_prefix = step < s;
                const Permutation next = tau * (in_prefix ? prefix : suffix);
                if (!reversed_by(*tuple.gamma, next)) {
                    continue;
                }
                tuple.taus.push_back(tau);
                if (in_prefix) {
                    extend(step + 1, next, suffix);
                } else {
                    extend(step + 1, prefix, next);
                }
                tuple.taus.pop_back();
            }
        };
    const auto involutions = all_involutions(d);
    for (const auto& sigma1 : all_of_cycle_type(lambda)) {
        for (const auto& gamma : involutions) {
            if (!reversed_by(gamma, sigma1)) {
                continue;
            }
            tuple.sigma1 = sigma1;
            tuple.gamma = gamma;
            tuple.taus.clear();
            extend(0, sigma1, Permutation::identity(d));
        }
    }
}

}  // namespace hurwitz
