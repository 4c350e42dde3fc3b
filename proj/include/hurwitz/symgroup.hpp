#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hurwitz/partition.hpp"
#include "hurwitz/permutation.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// (gamma?, sigma1, tau_1..tau_r, sigma2).  gamma is present for real
// factorizations only.
struct FactorizationTuple {
    std::optional<Permutation> gamma;
    Permutation sigma1;
    std::vector<Permutation> taus;
    Permutation sigma2;
};

enum class SigmaStrategy {
    // Fix sigma1 to one element of its class and multiply by the class size.
    // Sound for both counts because simultaneous conjugation of the whole
    // tuple (gamma included) preserves every defining condition.
    ClassRepresentative,
    // Enumerate every sigma1 of the class.
    FullClass,
};

enum class BranchOrder { Ascending, Descending };

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t memo_hits = 0;
};

struct SearchOptions {
    std::uint64_t node_budget = 1'000'000'000ULL;
    SigmaStrategy strategy = SigmaStrategy::ClassRepresentative;
    BranchOrder order = BranchOrder::Ascending;
    bool memoize = true;
    SearchStats* stats = nullptr;
};

// Node budget from HURWITZ_BUDGET when set, otherwise the default.
std::uint64_t default_node_budget();

// |F(g, lambda, mu)|
BigInt count_factorizations(int genus, const Partition& lambda, const Partition& mu,
                            const SearchOptions& options = {});

// |F(g, lambda, mu)| / d!
HurwitzValue complex_hurwitz(int genus, const Partition& lambda, const Partition& mu,
                             const SearchOptions& options = {});

// |F^R(g, lambda, mu; s)|
BigInt count_real_factorizations(int genus, const Partition& lambda,
                                 const Partition& mu, int s,
                                 const SearchOptions& options = {});

// |F^R(g, lambda, mu; s)| / d!
HurwitzValue real_hurwitz(int genus, const Partition& lambda, const Partition& mu,
                          int s, const SearchOptions& options = {});

// Literal checks of the defining conditions; used to validate enumerated tuples.
bool is_factorization(const FactorizationTuple& t, int genus, const Partition& lambda,
                      const Partition& mu);
bool is_real_factorization(const FactorizationTuple& t, int genus,
                           const Partition& lambda, const Partition& mu, int s);

// Visits every real factorization of type (g, lambda, mu; s) with no symmetry
// reduction.  Meant for small instances (tests, projections).
void for_each_real_factorization(int genus, const Partition& lambda,
                                 const Partition& mu, int s,
                                 const std::function<void(const FactorizationTuple&)>& visit);

}  // namespace hurwitz
