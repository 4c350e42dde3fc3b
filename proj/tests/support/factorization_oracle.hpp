#pragma once

// Literal enumeration of (real) factorizations over S_d^(r+2), written
// against plain vectors so it shares no code with the library search.
// Feasible for d <= 3 at any small r and for d = 4 with r <= 2.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;

inline Perm compose(const Perm& a, const Perm& b) {
    Perm out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[b[i]];
    }
    return out;
}

inline Perm invert(const Perm& a) {
    Perm out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[a[i]] = static_cast<int>(i);
    }
    return out;
}

inline std::vector<int> cycle_type(const Perm& a) {
    std::vector<int> lengths;
    std::vector<bool> seen(a.size(), false);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = a[j]) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

inline std::vector<Perm> symmetric_group(int d) {
    Perm p(d);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline bool is_transitive(int d, const std::vector<Perm>& gens) {
    std::vector<int> orbit{0};
    std::vector<bool> in(d, false);
    in[0] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
        for (const auto& g : gens) {
            if (!in[g[orbit[k]]]) {
                in[g[orbit[k]]] = true;
                orbit.push_back(g[orbit[k]]);
            }
        }
    }
    return static_cast<int>(orbit.size()) == d;
}

// gamma is ignored when real == false.  s counts the prefix conditions.
inline std::uint64_t count_tuples(int genus, std::vector<int> lambda, std::vector<int> mu,
                                  bool real, int s) {
    std::sort(lambda.rbegin(), lambda.rend());
    std::sort(mu.rbegin(), mu.rend());
    const int d = std::accumulate(lambda.begin(), lambda.end(), 0);
    const int r = static_cast<int>(lambda.size() + mu.size()) + 2 * genus - 2;
    const auto group = symmetric_group(d);
    std::vector<Perm> transpositions, sigma1s, gammas;
    std::vector<int> simple(d, 1);
    if (d >= 2) {
        simple[0] = 2;
        simple.pop_back();
    }
    for (const auto& p : group) {
        if (d >= 2 && cycle_type(p) == simple) transpositions.push_back(p);
        if (cycle_type(p) == lambda) sigma1s.push_back(p);
        if (compose(p, p) == group.front()) gammas.push_back(p);
    }
    if (!real) {
        gammas.assign(1, group.front());
    }
    if (r < 0 || (r > 0 && transpositions.empty())) {
        return 0;
    }
    auto reversed = [](const Perm& g, const Perm& x) {
        return compose(compose(g, x), g) == invert(x);
    };
    std::uint64_t total = 0;
    std::vector<std::size_t> idx(r, 0);
    for (const auto& gamma : gammas) {
        for (const auto& sigma1 : sigma1s) {
            if (real && !reversed(gamma, sigma1)) continue;
            std::fill(idx.begin(), idx.end(), 0);
            while (true) {
                // sigma2 ranges over the whole group; the product condition
                // then selects it.
                for (const auto& sigma2 : group) {
                    Perm prod = sigma1;
                    std::vector<Perm> gens{sigma1, sigma2};
                    bool ok = true;
                    Perm suffix = group.front();
                    for (int i = 0; i < r; ++i) {
                        const Perm& tau = transpositions[idx[i]];
                        gens.push_back(tau);
                        prod = compose(tau, prod);
                        if (real && i < s && !reversed(gamma, prod)) ok = false;
                        if (i >= s) {
                            suffix = compose(tau, suffix);
                            if (real && !reversed(gamma, suffix)) ok = false;
                        }
                    }
                    if (!ok) continue;
                    if (compose(sigma2, prod) != group.front()) continue;
                    if (cycle_type(sigma2) != mu) continue;
                    if (!is_transitive(d, gens)) continue;
                    ++total;
                }
                int k = 0;
                while (k < r && ++idx[k] == transpositions.size()) {
                    idx[k] = 0;
                    ++k;
                }
                if (k == r) break;
            }
        }
    }
    return total;
}

}  // namespace oracle
