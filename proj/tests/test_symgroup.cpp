#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "hurwitz/errors.hpp"
#include "hurwitz/symgroup.hpp"
#include "support/factorization_oracle.hpp"
#include "support/instances.hpp"

using namespace hurwitz;

namespace {

std::uint64_t oracle_count(int g, const Partition& l, const Partition& m) {
    return oracle::count_tuples(g, l.vec(), m.vec(), false, 0);
}

std::uint64_t oracle_real(int g, const Partition& l, const Partition& m, int s) {
    return oracle::count_tuples(g, l.vec(), m.vec(), true, s);
}

}  // namespace

TEST_CASE("complex counts match literal enumeration") {
    // Values frozen from oracle::count_tuples.
    CHECK(oracle_count(0, {1}, {1}) == 1);
    CHECK(oracle_count(0, {2}, {1, 1}) == 1);
    CHECK(oracle_count(0, {3}, {1, 1, 1}) == 6);
    CHECK(oracle_count(0, {2, 1}, {1, 1, 1}) == 24);

    CHECK(count_factorizations(0, {1}, {1}) == 1);
    CHECK(count_factorizations(0, {2}, {1, 1}) == 1);
    CHECK(count_factorizations(0, {3}, {1, 1, 1}) == 6);
    CHECK(count_factorizations(0, {2, 1}, {1, 1, 1}) == 24);

    CHECK(complex_hurwitz(0, {1}, {1}) == 1);
    CHECK(complex_hurwitz(0, {2}, {1, 1}) == Rational(1, 2));
    CHECK(complex_hurwitz(0, {2, 1}, {1, 1, 1}) == 4);
}

TEST_CASE("complex counts agree with the oracle on every small instance") {
    for (const auto& inst : testing_instances::all(3, 1, 4)) {
        CAPTURE(inst.label());
        CHECK(count_factorizations(inst.genus, inst.lambda, inst.mu) ==
              oracle_count(inst.genus, inst.lambda, inst.mu));
    }
    for (const auto& inst : testing_instances::all(4, 0, 2)) {
        CAPTURE(inst.label());
        CHECK(count_factorizations(inst.genus, inst.lambda, inst.mu) ==
              oracle_count(inst.genus, inst.lambda, inst.mu));
    }
}

TEST_CASE("real counts match literal enumeration") {
    CHECK(oracle_real(0, {1}, {1}, 0) == 1);
    CHECK(oracle_real(0, {2}, {1, 1}, 1) == 2);
    CHECK(oracle_real(0, {2}, {1, 1}, 0) == 2);

    CHECK(count_real_factorizations(0, {1}, {1}, 0) == 1);
    CHECK(count_real_factorizations(0, {2}, {1, 1}, 1) == 2);
    CHECK(count_real_factorizations(0, {2}, {1, 1}, 0) == 2);
    CHECK(real_hurwitz(0, {2}, {1, 1}, 1) == 1);

    for (const auto& inst : testing_instances::all(3, 1, 4)) {
        for (int s = 0; s <= inst.r(); ++s) {
            CAPTURE(inst.label());
            CAPTURE(s);
            CHECK(count_real_factorizations(inst.genus, inst.lambda, inst.mu, s) ==
                  oracle_real(inst.genus, inst.lambda, inst.mu, s));
        }
    }
}

TEST_CASE("real (2,1),(1,1,1) is symmetric in s") {
    const Partition l{2, 1};
    const Partition m{1, 1, 1};
    for (int s : {0, 1}) {
        CHECK(oracle_real(0, l, m, s) == oracle_real(0, l, m, 3 - s));
        CHECK(real_hurwitz(0, l, m, s) == real_hurwitz(0, l, m, 3 - s));
    }
}

TEST_CASE("symmetry and real <= complex for d <= 5, r <= 6") {
    for (const auto& inst : testing_instances::all(5, 2, 6)) {
        CAPTURE(inst.label());
        const auto hc = complex_hurwitz(inst.genus, inst.lambda, inst.mu);
        std::vector<HurwitzValue> hr;
        for (int s = 0; s <= inst.r(); ++s) {
            hr.push_back(real_hurwitz(inst.genus, inst.lambda, inst.mu, s));
        }
        const bool in_scope =
            inst.r() > 0 && !testing_instances::excluded_family(inst.lambda, inst.mu);
        for (int s = 0; s <= inst.r(); ++s) {
            CHECK(hr[s] == hr[inst.r() - s]);
            if (in_scope) {
                CHECK(hr[s] <= hc);
            }
        }
    }
}

TEST_CASE("real exceeds complex only outside the bound hypotheses") {
    // Covers with automorphisms admit several equivalent real structures.
    CHECK(real_hurwitz(0, {2}, {1, 1}, 0) > complex_hurwitz(0, {2}, {1, 1}));
    CHECK(real_hurwitz(0, {5}, {5}, 0) == 1);
    CHECK(complex_hurwitz(0, {5}, {5}) == Rational(1, 5));
}

TEST_CASE("search order and symmetry reduction do not change counts") {
    for (const auto& inst : testing_instances::all(4, 1, 5)) {
        CAPTURE(inst.label());
        SearchOptions reference;
        SearchOptions reversed;
        reversed.order = BranchOrder::Descending;
        reversed.memoize = false;
        SearchOptions full;
        full.strategy = SigmaStrategy::FullClass;
        const auto base = count_factorizations(inst.genus, inst.lambda, inst.mu, reference);
        CHECK(count_factorizations(inst.genus, inst.lambda, inst.mu, reversed) == base);
        CHECK(count_factorizations(inst.genus, inst.lambda, inst.mu, full) == base);
        for (int s = 0; s <= inst.r(); ++s) {
            const auto real = count_real_factorizations(inst.genus, inst.lambda, inst.mu, s,
                                                        reference);
            CHECK(count_real_factorizations(inst.genus, inst.lambda, inst.mu, s, reversed) ==
                  real);
            CHECK(count_real_factorizations(inst.genus, inst.lambda, inst.mu, s, full) ==
                  real);
        }
    }
}

TEST_CASE("forgetting gamma projects real factorizations onto complex ones") {
    for (const auto& inst : testing_instances::all(4, 0, 4)) {
        for (int s = 0; s <= inst.r(); ++s) {
            CAPTURE(inst.label());
            CAPTURE(s);
            std::uint64_t visited = 0;
            bool all_valid = true;
            for_each_real_factorization(
                inst.genus, inst.lambda, inst.mu, s, [&](const FactorizationTuple& t) {
                    ++visited;
                    FactorizationTuple forgotten = t;
                    forgotten.gamma.reset();
                    all_valid = all_valid &&
                                is_real_factorization(t, inst.genus, inst.lambda,
                                                      inst.mu, s) &&
                                is_factorization(forgotten, inst.genus, inst.lambda,
                                                 inst.mu);
                });
            CHECK(all_valid);
            CHECK(BigInt(visited) ==
                  count_real_factorizations(inst.genus, inst.lambda, inst.mu, s));
        }
    }
}

TEST_CASE("precondition and budget errors") {
    CHECK_THROWS_AS(count_factorizations(0, {2}, {1, 1, 1}), PreconditionError);
    CHECK_THROWS_AS(count_real_factorizations(0, {2}, {1, 1}, 2), PreconditionError);
    CHECK_THROWS_AS(count_real_factorizations(0, {2}, {1, 1}, -1), PreconditionError);
    CHECK_THROWS_AS(count_factorizations(0, {}, {}), PreconditionError);
    SearchOptions tiny;
    tiny.node_budget = 3;
    CHECK_THROWS_AS(count_factorizations(0, {2, 1}, {1, 1, 1}, tiny), BudgetExceeded);
}

TEST_CASE("permutation basics") {
    const auto p = Permutation::with_cycle_type({3, 2});
    CHECK(p.cycle_type() == Partition{3, 2});
    CHECK((p * p.inverse()).is_identity());
    CHECK(conjugacy_class_size({3, 2}) == 20);
    CHECK(conjugacy_class_size({2, 1, 1}) == 6);
    CHECK(all_involutions(4).size() == 10);
    CHECK(reversed_by(Permutation::identity(3), Permutation::transposition(3, 0, 1)));
}
