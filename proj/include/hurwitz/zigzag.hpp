#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/realtrop.hpp"
#include "hurwitz/tropical.hpp"

namespace hurwitz {

enum class CoverKind { Zigzag, EffectiveNonZigzag, Other };

std::string to_string(CoverKind kind);

// An even connection between two strings.
struct Connector {
    // Unbent: both strings pass straight through their attaching vertex and
    // the connection may run through even symmetric cycles.
    // Bent: both strings turn at their attaching vertex; a single edge.
    enum class Type { Unbent, Bent };
    Type type = Type::Unbent;
    int first_string = 0;   // index into CoverClass::strings
    int second_string = 0;
    std::vector<int> edges;
    // Attaching vertices and the vertices of its cycles.
    std::vector<int> vertices;
};

struct CoverClass {
    CoverKind kind = CoverKind::Other;
    // Zigzag with S a single inner vertex.
    std::optional<int> vertex;
    // Edge sets of the odd strings.  For an effective non-zigzag cover they
    // are ordered S_1..S_n along the chain of connectors.
    std::vector<std::vector<int>> strings;
    // E_1..E_{n-1}
    std::vector<Connector> connectors;
    // The strings, connectors and tails have the required shapes; only the
    // vertex-order condition may fail.
    bool shape_ok = false;
    // Why the cover is Other (empty otherwise).
    std::string reason;
};

// Odd edges outside Sym split into strings (leaf-to-leaf paths or cycles).
std::vector<std::vector<int>> odd_strings(const TropicalCover& cover);

CoverClass classify_cover(const TropicalCover& cover);

std::uint64_t zigzag_number(int genus, const Partition& lambda, const Partition& mu,
                            const TropicalOptions& options = {});

// Twice the number of effective non-zigzag covers.
std::uint64_t effective_nonzigzag_number(int genus, const Partition& lambda,
                                         const Partition& mu,
                                         const TropicalOptions& options = {});

std::uint64_t effective_number(int genus, const Partition& lambda, const Partition& mu,
                               const TropicalOptions& options = {});

// The one colouring of an effective non-zigzag cover inducing `split`,
// which must contain x_1..x_{ceil(r/2)}.  Throws PreconditionError on bad
// input and InvariantError if zero or several colourings match.
Colouring unique_matching_colouring(const TropicalCover& cover, const Splitting& split);

struct BoundReport {
    int genus = 0;
    Partition lambda;
    Partition mu;
    std::uint64_t Z = 0;
    std::uint64_t Zprime = 0;
    std::uint64_t E = 0;
    std::vector<HurwitzValue> H_real;  // indexed by s
    HurwitzValue H_complex;
    bool chain_ok = false;
    bool parity_ok = false;
    // One line per comparison, e.g. "E <= H_real(2): 4 <= 6 ok".
    std::vector<std::string> comparisons;
};

// Z <= E <= H^R(s) <= H^C and parity agreement for every s.  Throws
// HypothesisError for {lambda, mu} inside {(2k), (k,k)} or r <= 0.
BoundReport verify_bounds(int genus, const Partition& lambda, const Partition& mu,
                          const TropicalOptions& options = {});

// {lambda, mu} inside {(2k), (k,k)}
bool in_excluded_family(const Partition& lambda, const Partition& mu);

}  // namespace hurwitz
