#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// Endpoint value for an end whose leaf maps to -infinity.  An end whose leaf
// maps to +infinity has `to == r`.
inline constexpr int kMinusInfinity = -1;

// Edges are oriented left to right: from < to.  Inner vertex i sits over x_{i+1}.
struct TropicalEdge {
    int from = 0;
    int to = 0;
    int weight = 1;

    friend auto operator<=>(const TropicalEdge&, const TropicalEdge&) = default;
};

// A pair of edges that an automorphism may interchange.
struct SymPair {
    enum class Kind { Cycle, Fork };
    Kind kind = Kind::Cycle;
    int first = 0;   // edge indices
    int second = 0;
    int weight = 0;

    bool odd() const { return weight % 2 == 1; }
    friend bool operator==(const SymPair&, const SymPair&) = default;
};

struct SymRegistry {
    std::vector<SymPair> cycles;
    std::vector<SymPair> odd_forks;
    std::vector<SymPair> even_forks;

    // Sym(phi): symmetric cycles followed by odd forks.  Even forks are left
    // out here but still contribute to Aut.
    std::vector<SymPair> sym() const;
};

class TropicalCover {
public:
    // Validates 3-valence, balancing, orientation, connectivity and genus;
    // throws InvariantError on failure.
    TropicalCover(int genus, int branch_points, std::vector<TropicalEdge> edges);

    int genus() const { return genus_; }
    int branch_points() const { return r_; }
    int degree() const;
    Partition lambda() const;
    Partition mu() const;

    // Sorted, so equal covers have equal edge lists.
    const std::vector<TropicalEdge>& edges() const { return edges_; }
    const TropicalEdge& edge(int i) const { return edges_[i]; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool is_left_end(int e) const { return edges_[e].from == kMinusInfinity; }
    bool is_right_end(int e) const { return edges_[e].to == r_; }
    bool is_end(int e) const { return is_left_end(e) || is_right_end(e); }
    bool is_inner(int e) const { return !is_end(e); }

    // Edge indices meeting inner vertex v from the left / to the right.
    const std::vector<int>& incoming(int v) const { return incoming_[v]; }
    const std::vector<int>& outgoing(int v) const { return outgoing_[v]; }
    // All three edges at v.
    std::vector<int> incident(int v) const;
    // The endpoint of e other than v; kMinusInfinity or r for ends.
    int other_end(int e, int v) const;

    const SymRegistry& symmetry() const { return sym_; }

    // "a>b:w;..." over the sorted edge list; equal strings iff isomorphic.
    std::string canonical_form() const;

    friend bool operator==(const TropicalCover& a, const TropicalCover& b) {
        return a.r_ == b.r_ && a.edges_ == b.edges_;
    }

private:
    int genus_ = 0;
    int r_ = 0;
    std::vector<TropicalEdge> edges_;
    std::vector<std::vector<int>> incoming_;
    std::vector<std::vector<int>> outgoing_;
    SymRegistry sym_;
};

enum class SweepOrder { Ascending, Descending };

struct TropicalOptions {
    std::uint64_t node_budget = 1'000'000'000ULL;
    SweepOrder order = SweepOrder::Ascending;
    std::uint64_t* nodes = nullptr;
};

// One cover per isomorphism class, sorted by canonical form.
std::vector<TropicalCover> enumerate_covers(int genus, const Partition& lambda,
                                            const Partition& mu,
                                            const TropicalOptions& options = {});

// 2^(symmetric cycles + symmetric forks, odd and even)
std::uint64_t automorphism_count(const TropicalCover& cover);

HurwitzValue mult_complex(const TropicalCover& cover);

HurwitzValue tropical_complex_hurwitz(int genus, const Partition& lambda,
                                      const Partition& mu,
                                      const TropicalOptions& options = {});

// Graphviz rendering, left to right.
std::string to_dot(const TropicalCover& cover, const std::string& name = "cover");

}  // namespace hurwitz
