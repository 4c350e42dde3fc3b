#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/tropical.hpp"

namespace hurwitz {

// Maximal number of sign changes of k_0 = k, k_{i+1} = k_i + lambda_s or
// k_i - mu_t, every part used once.  A change at i means k_i * k_{i+1} < 0,
// so a zero breaks the run.
int sign_change_bound(int k, const Partition& lambda, const Partition& mu);

// The two evaluation paths behind sign_change_bound: every distinct
// interleaving, and a memoized search over the remaining steps.
int sign_change_bound_exhaustive(int k, const Partition& lambda, const Partition& mu);
int sign_change_bound_dp(int k, const Partition& lambda, const Partition& mu);

// Which of the three existence conditions holds (Equal: l(lambda_0) = l(mu_0),
// Greater: l(lambda_0) > l(mu_0), Less: l(lambda_0) < l(mu_0)), and whether the
// first string can send E_1 into v_1 (Direct) or only out of it (MaxNegative).
struct ExistenceCase {
    enum class Condition { Equal, Greater, Less };
    enum class Variant { Direct, MaxNegative };
    Condition condition = Condition::Equal;
    Variant variant = Variant::Direct;

    friend auto operator<=>(const ExistenceCase&, const ExistenceCase&) = default;
};

// "EQ-direct", "GT-max-negative", ...
std::string to_string(const ExistenceCase& c);

// The displayed conditions evaluated verbatim.  A maximum over an empty set
// of negative values makes the condition fail.
std::optional<ExistenceCase> existence_case(int genus, const Partition& lambda,
                                            const Partition& mu);

struct AppendixConstants {
    int n1 = 0;
    int n2 = 0;
    int n3 = 0;
    int m1 = 0;
    int m2 = 0;
    // Starting value of the bend sequence: the weight of the edge of S_1
    // leaving v_1 on the far side from its first end.
    int k = 0;
    // Signed weight of E_1: positive when E_1 enters v_1 from the left.
    int e1 = 0;
    // Inner vertices of S_2, ..., S_n.
    int inner_vertices = 0;
    // l: the first end of S_1.
    int first_end = 0;
    // lambda* = (lambda_2o*, lambda_2e*, lambda_oo*): tails placed before v_1.
    Partition lambda_2o_star;
    Partition lambda_2e_star;
    Partition lambda_oo_star;
    // Tails left for the bends of S_1 after v_1, as tail parts (not doubled).
    Partition lambda_rest;
    Partition mu_rest;
    // n: the strings S_1, ..., S_n of the chain.
    int strings = 0;
    ExistenceCase existence;

    Partition lambda_star() const;
};

// Throws PreconditionError if `c` is not the case of (lambda, mu) for some
// genus, InvariantError if the threshold for n_1 cannot be met.
AppendixConstants appendix_constants(const Partition& lambda, const Partition& mu,
                                     const ExistenceCase& c);

// An effective non-zigzag cover built along the chain of strings, with the
// connector vertices among x_1..x_ceil(r/2).  Throws PreconditionError if
// existence_case does not return `c`, InvariantError if the construction
// fails.
TropicalCover construct_witness(int genus, const Partition& lambda, const Partition& mu,
                                const ExistenceCase& c);

// n1! (l(lambda_oo) - n1)! l(mu_oo)! floor(B/2)! ceil(B/2)! with
// B = B(k, 2 lambda_rest, 2 mu_rest).  Throws PreconditionError if no case
// holds.
BigInt lower_bound_estimate(int genus, const Partition& lambda, const Partition& mu);

struct SweepRow {
    int m = 0;
    // False when the row ran out of budget; the values below are then unset.
    bool computed = false;
    std::string error;
    // False for rows outside the hypotheses of the bound (chain not checked).
    bool in_scope = false;
    std::uint64_t Z = 0;
    std::uint64_t Zprime = 0;
    std::uint64_t E = 0;
    HurwitzValue H_complex;
    std::vector<HurwitzValue> H_real;  // indexed by s
    bool chain_ok = false;
    // log(value) and log(value) / (2m log m); the ratio is absent for m < 2
    // and the logs are absent for zero values.
    std::optional<double> log_e;
    std::optional<double> log_hC;
    std::optional<double> log_ratio_e;
    std::optional<double> log_ratio_hC;
};

struct SweepOptions {
    std::uint64_t node_budget = 1'000'000'000ULL;
    // Rows run on separate threads.
    bool parallel = true;
};

// The row for one m.  Never throws for budget exhaustion: the row comes back
// with computed = false and the error text.
SweepRow sweep_row(int genus, const Partition& lambda, const Partition& mu, int m,
                   const SweepOptions& options = {});

// One row per m = 0..m_max on ((lambda, 1^m), (mu, 1^m)).
std::vector<SweepRow> sweep(int genus, const Partition& lambda, const Partition& mu,
                            int m_max, const SweepOptions& options = {});

}  // namespace hurwitz
