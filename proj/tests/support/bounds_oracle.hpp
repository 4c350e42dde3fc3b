#pragma once

// Test-only re-derivations for the bounds module, written from the
// definitions without sharing code with the library.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace bounds_oracle {

// Max sign changes over every ordering of the steps, parts treated as
// distinct.
inline int sign_changes(long long value, std::vector<int> steps) {
    int best = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        std::vector<int> rest = steps;
        rest.erase(rest.begin() + static_cast<long>(i));
        const long long next = value + steps[i];
        const int here = (value < 0 && next > 0) || (value > 0 && next < 0) ? 1 : 0;
        best = std::max(best, here + sign_changes(next, rest));
    }
    return best;
}

inline int sign_change_bound(int k, const std::vector<int>& lambda, const std::vector<int>& mu) {
    std::vector<int> steps = lambda;
    for (int p : mu) steps.push_back(-p);
    return sign_changes(k, steps);
}

struct Split {
    std::vector<int> zero;  // distinct odd parts left after pairing
    int pairs = 0;          // pairs of equal odd parts
    int one_pairs = 0;      // pairs of ones
};

// Odd parts are paired greedily by value; an odd leftover goes to zero.
inline Split split(const std::vector<int>& parts) {
    std::map<int, int> count;
    for (int p : parts) ++count[p];
    Split out;
    for (const auto& [value, c] : count) {
        if (value % 2 == 0) continue;
        out.pairs += c / 2;
        if (value == 1) out.one_pairs = c / 2;
        if (c % 2 == 1) out.zero.push_back(value);
    }
    return out;
}

inline int total(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

// "EQ-direct", ..., or nothing; every displayed inequality taken literally.
inline std::optional<std::string> existence(int genus, const std::vector<int>& lambda,
                                            const std::vector<int>& mu) {
    const Split sl = split(lambda);
    const Split sm = split(mu);
    const int a = static_cast<int>(sl.zero.size());
    const int b = static_cast<int>(sm.zero.size());
    const int lm = static_cast<int>(mu.size());
    std::vector<int> t;
    std::string name;
    int lhs = 0;
    if (a == b && a >= 1 && sm.pairs >= 1) {
        name = "EQ";
        lhs = lm + 2 * genus - 3 * a;
        for (int x : sl.zero) {
            for (int y : sm.zero) t.push_back((total(sl.zero) - x) - (total(sm.zero) - y));
        }
    } else if (a > b && 2 * sm.one_pairs > a - b) {
        name = "GT";
        lhs = lm + 2 * genus - 3 * a;
        for (int i = 0; i < a; ++i) {
            for (int j = i + 1; j < a; ++j) {
                t.push_back(total(sl.zero) - sl.zero[i] - sl.zero[j] - total(sm.zero) - a + b + 2);
            }
        }
    } else if (b > a && sm.pairs >= 1 && 2 * sl.one_pairs > b - a) {
        name = "LT";
        lhs = lm + 2 * genus - 3 * b;
        for (int y : sm.zero) t.push_back(total(sl.zero) - (total(sm.zero) - y) - a + b - 1);
    } else {
        return std::nullopt;
    }
    if (std::any_of(t.begin(), t.end(), [](int x) { return x > 0; })) {
        return lhs > 0 ? std::optional<std::string>(name + "-direct") : std::nullopt;
    }
    std::optional<int> best;
    for (int x : t) {
        if (x < 0 && (!best || x > *best)) best = x;
    }
    if (!best || lhs <= -*best) return std::nullopt;
    return name + "-max-negative";
}

struct Mins {
    int n1 = -1, m1 = -1, m2 = -1;
};

// The minima n1, m1, m2 taken over all permutations and prefix lengths.
inline Mins appendix_minima(int l, int w, std::vector<int> two_o, std::vector<int> two_e,
                            std::vector<int> oo) {
    std::sort(two_o.begin(), two_o.end());
    std::sort(two_e.begin(), two_e.end());
    std::sort(oo.begin(), oo.end());
    Mins out;
    const int no = static_cast<int>(two_o.size());
    const int ne = static_cast<int>(two_e.size());
    const int noo = static_cast<int>(oo.size());
    // Visits every (s1, s2, s3) reachable by some permutation triple.
    auto visit = [&](auto&& fn) {
        auto a = two_o;
        do {
            auto b = two_e;
            do {
                auto c = oo;
                do {
                    for (int s1 = 0; s1 <= no; ++s1) {
                        for (int s2 = 0; s2 <= ne; ++s2) {
                            for (int s3 = 0; s3 <= noo; ++s3) {
                                const int value = l +
                                                  2 * std::accumulate(a.begin(), a.begin() + s1, 0) +
                                                  2 * std::accumulate(b.begin(), b.begin() + s2, 0) +
                                                  2 * std::accumulate(c.begin(), c.begin() + s3, 0);
                                if (value > w) fn(s1, s2, s3);
                            }
                        }
                    }
                } while (std::next_permutation(c.begin(), c.end()));
            } while (std::next_permutation(b.begin(), b.end()));
        } while (std::next_permutation(a.begin(), a.end()));
    };
    visit([&](int, int, int s3) {
        if (out.n1 < 0 || s3 < out.n1) out.n1 = s3;
    });
    if (out.n1 < 0) return out;
    visit([&](int s1, int, int s3) {
        if (s3 == out.n1 && (out.m1 < 0 || s1 < out.m1)) out.m1 = s1;
    });
    visit([&](int s1, int s2, int s3) {
        if (s3 == out.n1 && s1 == out.m1 && (out.m2 < 0 || s2 < out.m2)) out.m2 = s2;
    });
    return out;
}

}  // namespace bounds_oracle
