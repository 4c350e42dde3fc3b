#pragma once

#include <map>
#include <string>
#include <vector>

#include "hurwitz/tropical.hpp"

namespace hurwitz {

enum class Colour { Red, Blue };
enum class Sign { Negative, Positive };

// T_rho plus a colour for each component of the even-edge subgraph of
// C \ T_rho (ends included).
struct Colouring {
    // Indexed like cover.symmetry().sym().
    std::vector<bool> in_t;
    // Component index per edge, -1 for odd edges and edges of T_rho.
    std::vector<int> component;
    std::vector<Colour> colours;

    int component_count() const { return static_cast<int>(colours.size()); }
    // Colour of an even edge outside T_rho.
    Colour colour_of(int edge) const { return colours.at(component.at(edge)); }
    friend bool operator==(const Colouring&, const Colouring&) = default;
};

// The set x^+ as a mask over inner vertices (index 0 is x_1).
struct Splitting {
    std::vector<bool> positive;

    int size() const;
    int branch_points() const { return static_cast<int>(positive.size()); }
    // From 1-based indices.
    static Splitting from_indices(int r, const std::vector<int>& indices);
    // x_1..x_s positive.
    static Splitting first(int r, int s);
    std::string to_string() const;

    friend auto operator<=>(const Splitting&, const Splitting&) = default;
};

// Every (T_rho, colour) pair exactly once.
std::vector<Colouring> enumerate_colourings(const TropicalCover& cover);

// Components of the even subgraph of C \ T; returns the per-edge component
// index (-1 if not even or removed) and writes the count.
std::vector<int> even_components(const TropicalCover& cover, const std::vector<bool>& in_t,
                                 int& count);

// Local configuration at a vertex, reduced to the data the sign rules read.
struct VertexShape {
    enum class Pair { OddEven, EvenEven, OddOdd };
    bool single_even = false;  // parity of the lone edge on its side
    Pair pair = Pair::OddOdd;  // parities of the two edges on the other side
    bool dotted = false;       // the pair is a member of T_rho
    Colour colour = Colour::Red;  // colour the rule reads
};

struct SignRule {
    bool single_even;
    VertexShape::Pair pair;
    bool dotted;
    Colour colour;
    Sign sign;
};

// The positive and negative vertex types, closed under reflection.
const std::vector<SignRule>& sign_rules();

VertexShape vertex_shape(const TropicalCover& cover, const Colouring& rho, int v);

// Throws InvariantError if the configuration matches no rule.
Sign vertex_sign(const TropicalCover& cover, const Colouring& rho, int v);

Splitting induced_splitting(const TropicalCover& cover, const Colouring& rho);

// 2^{|E(T)| - |Sym|} * prod of cycle weights in T.  Non-integral only on the
// excluded family.
HurwitzValue mult_real(const TropicalCover& cover, const Colouring& rho);

// As mult_real, but throws NonIntegralError when the value is not an integer.
BigInt mult_real_integral(const TropicalCover& cover, const Colouring& rho);

// Canonical string of a real tropical cover (cover plus colouring).
std::string real_canonical_form(const TropicalCover& cover, const Colouring& rho);

// H^R via the tropical count for one splitting.
HurwitzValue real_tropical_hurwitz(int genus, const Partition& lambda, const Partition& mu,
                                   const Splitting& split,
                                   const TropicalOptions& options = {});

// The sum for every splitting at once (splittings absent from the map have
// value 0).
std::map<Splitting, HurwitzValue> real_tropical_by_splitting(
    int genus, const Partition& lambda, const Partition& mu,
    const TropicalOptions& options = {});

// Graphviz rendering with red/blue even edges and dotted T_rho pairs.
std::string to_dot(const TropicalCover& cover, const Colouring& rho,
                   const std::string& name = "cover");

}  // namespace hurwitz
