// One PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hurwitz/bounds.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/realtrop.hpp"
#include "hurwitz/symgroup.hpp"
#include "hurwitz/tropical.hpp"
#include "hurwitz/zigzag.hpp"
#include "support/factorization_oracle.hpp"
#include "support/instances.hpp"

using namespace hurwitz;
using testing_instances::Instance;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> failures;

    void fail(const std::string& what) {
        pass = false;
        if (failures.size() < 20) failures.push_back(what);
    }
};

std::vector<Splitting> all_splittings(int r) {
    std::vector<Splitting> out;
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        Splitting split{std::vector<bool>(r)};
        for (int i = 0; i < r; ++i) split.positive[i] = (mask >> i) & 1u;
        out.push_back(split);
    }
    return out;
}

// Instances of the real criteria: d <= 4, 1 <= r <= 5.
std::vector<Instance> real_box() { return testing_instances::all(4, 3, 5, 1); }

Outcome complex_correspondence() {
    Outcome o;
    const auto box = testing_instances::all(5, 2, 6, 1);
    for (const auto& in : box) {
        const auto trop = tropical_complex_hurwitz(in.genus, in.lambda, in.mu);
        const auto group = complex_hurwitz(in.genus, in.lambda, in.mu);
        if (trop != group) o.fail(in.label() + ": " + to_string(trop) + " != " + to_string(group));
    }
    o.detail = std::to_string(box.size()) + " instances, d <= 5, g <= 2, 1 <= r <= 6";
    return o;
}

Outcome real_correspondence() {
    Outcome o;
    const auto box = real_box();
    std::size_t splittings = 0;
    for (const auto& in : box) {
        const int r = in.r();
        const auto by_split = real_tropical_by_splitting(in.genus, in.lambda, in.mu);
        std::vector<HurwitzValue> group;
        for (int s = 0; s <= r; ++s) group.push_back(real_hurwitz(in.genus, in.lambda, in.mu, s));
        std::vector<std::set<HurwitzValue>> per_size(r + 1);
        for (const auto& split : all_splittings(r)) {
            ++splittings;
            const auto it = by_split.find(split);
            const HurwitzValue trop = it == by_split.end() ? HurwitzValue(0) : it->second;
            per_size[split.size()].insert(trop);
            if (trop != group[split.size()]) {
                o.fail(in.label() + " splitting " + split.to_string() + ": " + to_string(trop) +
                       " != " + to_string(group[split.size()]));
            }
        }
        for (int s = 0; s <= r; ++s) {
            if (per_size[s].size() != 1) {
                o.fail(in.label() + ": value varies over splittings of size " + std::to_string(s));
            }
        }
    }
    o.detail = std::to_string(box.size()) + " instances, " + std::to_string(splittings) +
               " splittings, d <= 4, 1 <= r <= 5";
    return o;
}

Outcome symmetry() {
    Outcome o;
    const auto box = real_box();
    for (const auto& in : box) {
        const int r = in.r();
        for (int s = 0; s <= r; ++s) {
            const auto a = real_hurwitz(in.genus, in.lambda, in.mu, s);
            const auto b = real_hurwitz(in.genus, in.lambda, in.mu, r - s);
            if (a != b) o.fail(in.label() + " s=" + std::to_string(s));
        }
        const auto by_split = real_tropical_by_splitting(in.genus, in.lambda, in.mu);
        for (int s = 0; s <= r; ++s) {
            auto value = [&](int size) {
                const auto it = by_split.find(Splitting::first(r, size));
                return it == by_split.end() ? HurwitzValue(0) : it->second;
            };
            if (value(s) != value(r - s)) o.fail(in.label() + " tropical s=" + std::to_string(s));
        }
    }
    o.detail = std::to_string(box.size()) + " instances, group and tropical routes";
    return o;
}

Outcome parity_zigzag() {
    Outcome o;
    std::size_t covers = 0;
    std::size_t excluded = 0;
    std::size_t outside = 0;
    for (const auto& in : real_box()) {
        const bool in_family = in_excluded_family(in.lambda, in.mu);
        for (const auto& cover : enumerate_covers(in.genus, in.lambda, in.mu)) {
            ++covers;
            const bool zigzag = classify_cover(cover).kind == CoverKind::Zigzag;
            std::string problem;
            std::set<int> parities;
            for (const auto& rho : enumerate_colourings(cover)) {
                const auto m = mult_real(cover, rho);
                if (!is_integer(m)) {
                    problem = "multiplicity " + to_string(m) + " has no parity";
                    break;
                }
                parities.insert(parity(m));
            }
            if (problem.empty() && parities.size() != 1) problem = "parity depends on colouring";
            if (problem.empty() && (*parities.begin() == 1) != zigzag) {
                problem = "parity disagrees with class";
            }
            if (problem.empty()) continue;
            ++(in_family ? excluded : outside);
            o.fail(in.label() + " " + cover.canonical_form() + ": " + problem);
        }
    }
    o.detail = std::to_string(covers) + " covers; " + std::to_string(excluded + outside) +
               " exceptions, " + std::to_string(outside) + " of them outside {(2k),(k,k)}";
    return o;
}

Outcome bound_chain() {
    Outcome o;
    std::size_t checked = 0;
    for (const auto& in : real_box()) {
        if (in_excluded_family(in.lambda, in.mu)) continue;
        ++checked;
        const int r = in.r();
        const HurwitzValue z = zigzag_number(in.genus, in.lambda, in.mu);
        const HurwitzValue e = effective_number(in.genus, in.lambda, in.mu);
        const HurwitzValue hc = complex_hurwitz(in.genus, in.lambda, in.mu);
        if (!(z <= e)) o.fail(in.label() + ": Z > E");
        for (int s = 0; s <= r; ++s) {
            const HurwitzValue hr = real_hurwitz(in.genus, in.lambda, in.mu, s);
            if (!(e <= hr && hr <= hc)) o.fail(in.label() + ": chain fails at s=" + std::to_string(s));
            if (!is_integer(hr) || !is_integer(hc) || parity(z) != parity(e) ||
                parity(e) != parity(hr) || parity(hr) != parity(hc)) {
                o.fail(in.label() + ": parity fails at s=" + std::to_string(s));
            }
        }
    }
    o.detail = std::to_string(checked) + " instances outside {(2k),(k,k)}, every s";
    return o;
}

struct CaseInstance {
    int genus;
    Partition lambda;
    Partition mu;
    ExistenceCase existence;

    std::string label() const {
        return "g=" + std::to_string(genus) + " " + lambda.to_string() + " " + mu.to_string();
    }
};

std::vector<CaseInstance> case_instances(int max_d, int max_g) {
    std::vector<CaseInstance> out;
    for (int d = 1; d <= max_d; ++d) {
        for (const auto& lambda : partitions_of(d)) {
            for (const auto& mu : partitions_of(d)) {
                for (int g = 0; g <= max_g; ++g) {
                    if (auto c = existence_case(g, lambda, mu)) out.push_back({g, lambda, mu, *c});
                }
            }
        }
    }
    return out;
}

Outcome witnesses() {
    Outcome o;
    const auto instances = case_instances(8, 3);
    for (const auto& c : instances) {
        const auto cover = construct_witness(c.genus, c.lambda, c.mu, c.existence);
        if (cover.genus() != c.genus || cover.lambda() != c.lambda || cover.mu() != c.mu) {
            o.fail(c.label() + ": witness has the wrong type");
            continue;
        }
        const auto cls = classify_cover(cover);
        if (cls.kind != CoverKind::EffectiveNonZigzag) {
            o.fail(c.label() + ": witness classified " + to_string(cls.kind));
            continue;
        }
        const int half = (cover.branch_points() + 1) / 2;
        for (const auto& conn : cls.connectors) {
            for (int v : conn.vertices) {
                if (v >= half) o.fail(c.label() + ": connector vertex past ceil(r/2)");
            }
        }
    }
    o.detail = std::to_string(instances.size()) + " instances, |lambda| <= 8, g <= 3";
    if (instances.empty()) o.fail("no instances");
    return o;
}

Outcome lower_bound() {
    Outcome o;
    const auto small = case_instances(5, 2);
    std::size_t larger = 0;
    std::ostringstream values;
    for (const auto& c : case_instances(6, 2)) {
        if (c.lambda.size() == 6) ++larger;
        const auto zprime = effective_nonzigzag_number(c.genus, c.lambda, c.mu);
        const auto bound = lower_bound_estimate(c.genus, c.lambda, c.mu);
        values << " " << zprime << ">=" << bound;
        if (BigInt(zprime) < bound) {
            o.fail(c.label() + ": Z' = " + std::to_string(zprime) + " < " + bound.str());
        }
    }
    o.detail = std::to_string(small.size()) + " instances with d <= 5 (vacuous); " +
               std::to_string(larger) + " instances with d = 6, g <= 2 also checked:" +
               values.str();
    return o;
}

Outcome spot_values() {
    Outcome o;
    struct Spot {
        Partition lambda;
        Partition mu;
        HurwitzValue golden;
    };
    const std::vector<Spot> spots{{Partition{2}, Partition{1, 1}, HurwitzValue(1, 2)},
                                  {Partition{3}, Partition{1, 1, 1}, HurwitzValue(1)},
                                  {Partition{2, 1}, Partition{1, 1, 1}, HurwitzValue(4)}};
    std::ostringstream values;
    for (const auto& spot : spots) {
        const auto value = complex_hurwitz(0, spot.lambda, spot.mu);
        const HurwitzValue oracle(
            BigInt(oracle::count_tuples(0, spot.lambda.vec(), spot.mu.vec(), false, 0)),
            factorial(spot.lambda.size()));
        values << " " << to_string(value);
        if (value != spot.golden || oracle != spot.golden) {
            o.fail(spot.lambda.to_string() + " " + spot.mu.to_string() + ": " + to_string(value) +
                   ", oracle " + to_string(oracle));
        }
    }
    o.detail = "values" + values.str() + ", each matching the exhaustive oracle";
    return o;
}

Outcome asymptotic_trend() {
    Outcome o;
    const auto rows = sweep(0, Partition{2, 1}, Partition{1, 1, 1}, 3);
    std::optional<double> last_e;
    std::optional<double> last_hc;
    std::ostringstream values;
    for (const auto& row : rows) {
        const std::string m = "m=" + std::to_string(row.m);
        if (!row.computed) {
            o.fail(m + ": " + row.error);
            continue;
        }
        values << " " << row.E << "/" << to_string(row.H_complex);
        if (!row.in_scope || !row.chain_ok) o.fail(m + ": chain check fails");
        if (!row.log_e || !row.log_hC) {
            o.fail(m + ": zero value");
            continue;
        }
        if (last_e && *row.log_e < *last_e) o.fail(m + ": log e decreases");
        if (last_hc && *row.log_hC < *last_hc) o.fail(m + ": log h decreases");
        last_e = row.log_e;
        last_hc = row.log_hC;
    }
    if (rows.size() != 4) o.fail("expected 4 rows");
    o.detail = "E/H_complex for m = 0..3:" + values.str();
    return o;
}

Outcome tail_example() {
    Outcome o;
    const auto t = tail_decompose(Partition{7, 6, 4, 5, 5, 3, 1, 1});
    if (t.two_e != Partition{2} || t.two_o != Partition{3} || t.oo != Partition{5, 1} ||
        t.zero != Partition{7, 3}) {
        o.fail("got 2e=" + t.two_e.to_string() + " 2o=" + t.two_o.to_string() +
               " oo=" + t.oo.to_string() + " 0=" + t.zero.to_string());
    }
    o.detail = "(7,6,4,5,5,3,1,1): 2e=" + t.two_e.to_string() + " 2o=" + t.two_o.to_string() +
               " oo=" + t.oo.to_string() + " 0=" + t.zero.to_string();
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"correspondence (complex)", complex_correspondence},
        {"correspondence (real)", real_correspondence},
        {"symmetry", symmetry},
        {"parity and zigzag", parity_zigzag},
        {"bound chain", bound_chain},
        {"witnesses", witnesses},
        {"lower bound", lower_bound},
        {"spot values", spot_values},
        {"asymptotic trend", asymptotic_trend},
        {"tail decomposition example", tail_example},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " "
                  << criteria[i].first << ": " << o.detail << " [" << std::fixed
                  << std::setprecision(1) << seconds << "s]" << std::endl;
        for (const auto& f : o.failures) std::cout << "    " << f << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
