#include "hurwitz/realtrop.hpp"

#include <numeric>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

int Splitting::size() const {
    int n = 0;
    for (bool p : positive) n += p;
    return n;
}

Splitting Splitting::from_indices(int r, const std::vector<int>& indices) {
    Splitting out{std::vector<bool>(r, false)};
    for (int i : indices) {
        if (i < 1 || i > r) {
            throw PreconditionError("splitting index " + std::to_string(i) +
                                    " outside 1.." + std::to_string(r));
        }
        out.positive[i - 1] = true;
    }
    return out;
}

Splitting Splitting::first(int r, int s) {
    if (s < 0 || s > r) {
        throw PreconditionError("s outside 0..r");
    }
    Splitting out{std::vector<bool>(r, false)};
    for (int i = 0; i < s; ++i) out.positive[i] = true;
    return out;
}

std::string Splitting::to_string() const {
    std::string out = "{";
    for (int i = 0; i < branch_points(); ++i) {
        if (!positive[i]) continue;
        if (out.size() > 1) out += ',';
        out += std::to_string(i + 1);
    }
    return out + "}";
}

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

std::vector<bool> edges_in_t(const TropicalCover& cover, const std::vector<bool>& in_t) {
    std::vector<bool> removed(cover.edge_count(), false);
    const auto sym = cover.symmetry().sym();
    for (std::size_t k = 0; k < sym.size(); ++k) {
        if (in_t[k]) {
            removed[sym[k].first] = true;
            removed[sym[k].second] = true;
        }
    }
    return removed;
}

}  // namespace

std::vector<int> even_components(const TropicalCover& cover, const std::vector<bool>& in_t,
                                 int& count) {
    const int n = cover.edge_count();
    const auto removed = edges_in_t(cover, in_t);
    auto even = [&](int e) { return cover.edge(e).weight % 2 == 0 && !removed[e]; };
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (int v = 0; v < cover.branch_points(); ++v) {
        int anchor = -1;
        for (int e : cover.incident(v)) {
            if (!even(e)) continue;
            if (anchor < 0) {
                anchor = e;
            } else {
                parent[find_root(parent, e)] = find_root(parent, anchor);
            }
        }
    }
    std::vector<int> label(n, -1);
    std::vector<int> root_label(n, -1);
    count = 0;
    for (int e = 0; e < n; ++e) {
        if (!even(e)) continue;
        const int root = find_root(parent, e);
        if (root_label[root] < 0) root_label[root] = count++;
        label[e] = root_label[root];
    }
    return label;
}

std::vector<Colouring> enumerate_colourings(const TropicalCover& cover) {
    const auto sym = cover.symmetry().sym();
    const std::size_t pairs = sym.size();
    std::vector<Colouring> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        std::vector<bool> in_t(pairs);
        for (std::size_t k = 0; k < pairs; ++k) in_t[k] = (mask >> k) & 1;
        int count = 0;
        auto component = even_components(cover, in_t, count);
        for (std::uint64_t colours = 0; colours < (std::uint64_t{1} << count); ++colours) {
            Colouring rho{in_t, component, {}};
            for (int c = 0; c < count; ++c) {
                rho.colours.push_back((colours >> c) & 1 ? Colour::Blue : Colour::Red);
            }
            out.push_back(std::move(rho));
        }
    }
    return out;
}

const std::vector<SignRule>& sign_rules() {
    using P = VertexShape::Pair;
    static const std::vector<SignRule> rules = {
        // odd strand with an even edge branching off
        {false, P::OddEven, false, Colour::Blue, Sign::Positive},
        {false, P::OddEven, false, Colour::Red, Sign::Negative},
        // three even edges
        {true, P::EvenEven, false, Colour::Blue, Sign::Positive},
        {true, P::EvenEven, false, Colour::Red, Sign::Negative},
        // even edge splitting into two odd edges
        {true, P::OddOdd, false, Colour::Red, Sign::Positive},
        {true, P::OddOdd, false, Colour::Blue, Sign::Negative},
        // even edge meeting a dotted pair
        {true, P::OddOdd, true, Colour::Blue, Sign::Positive},
        {true, P::OddOdd, true, Colour::Red, Sign::Negative},
        {true, P::EvenEven, true, Colour::Blue, Sign::Positive},
        {true, P::EvenEven, true, Colour::Red, Sign::Negative},
    };
    return rules;
}

VertexShape vertex_shape(const TropicalCover& cover, const Colouring& rho, int v) {
    const auto& in = cover.incoming(v);
    const auto& out = cover.outgoing(v);
    const int single = in.size() == 1 ? in[0] : out[0];
    const auto& pair = in.size() == 1 ? out : in;
    auto even = [&](int e) { return cover.edge(e).weight % 2 == 0; };

    VertexShape shape;
    shape.single_even = even(single);
    const int evens = even(pair[0]) + even(pair[1]);
    shape.pair = evens == 2   ? VertexShape::Pair::EvenEven
                 : evens == 1 ? VertexShape::Pair::OddEven
                              : VertexShape::Pair::OddOdd;
    const auto sym = cover.symmetry().sym();
    for (std::size_t k = 0; k < sym.size(); ++k) {
        if (!rho.in_t[k]) continue;
        const bool a = sym[k].first == pair[0] || sym[k].first == pair[1];
        const bool b = sym[k].second == pair[0] || sym[k].second == pair[1];
        if (a && b) shape.dotted = true;
    }
    int coloured = -1;
    if (shape.single_even) {
        coloured = single;
    } else if (shape.pair == VertexShape::Pair::OddEven) {
        coloured = even(pair[0]) ? pair[0] : pair[1];
    }
    if (coloured >= 0 && rho.component.at(coloured) >= 0) {
        shape.colour = rho.colour_of(coloured);
    }
    return shape;
}

Sign vertex_sign(const TropicalCover& cover, const Colouring& rho, int v) {
    const auto shape = vertex_shape(cover, rho, v);
    for (const auto& rule : sign_rules()) {
        if (rule.single_even == shape.single_even && rule.pair == shape.pair &&
            rule.dotted == shape.dotted && rule.colour == shape.colour) {
            return rule.sign;
        }
    }
    throw InvariantError("vertex " + std::to_string(v + 1) +
                         " matches no positive or negative type");
}

Splitting induced_splitting(const TropicalCover& cover, const Colouring& rho) {
    Splitting out{std::vector<bool>(cover.branch_points(), false)};
    for (int v = 0; v < cover.branch_points(); ++v) {
        out.positive[v] = vertex_sign(cover, rho, v) == Sign::Positive;
    }
    return out;
}

HurwitzValue mult_real(const TropicalCover& cover, const Colouring& rho) {
    const auto sym = cover.symmetry().sym();
    const auto removed = edges_in_t(cover, rho.in_t);
    int even_inner = 0;
    for (int e = 0; e < cover.edge_count(); ++e) {
        if (cover.is_inner(e) && !removed[e] && cover.edge(e).weight % 2 == 0) ++even_inner;
    }
    BigInt product = 1;
    for (std::size_t k = 0; k < sym.size(); ++k) {
        if (rho.in_t[k] && sym[k].kind == SymPair::Kind::Cycle) product *= sym[k].weight;
    }
    const int exponent = even_inner - static_cast<int>(sym.size());
    if (exponent >= 0) {
        return HurwitzValue(product << exponent);
    }
    return HurwitzValue(product, BigInt(1) << -exponent);
}

BigInt mult_real_integral(const TropicalCover& cover, const Colouring& rho) {
    const auto value = mult_real(cover, rho);
    if (!is_integer(value)) {
        throw NonIntegralError("mult^R = " + to_string(value) + " for cover " +
                               cover.canonical_form());
    }
    return numerator(value);
}

std::string real_canonical_form(const TropicalCover& cover, const Colouring& rho) {
    // Automorphisms only swap edges inside a symmetric pair, and both edges
    // of a pair always share their T-membership and component, so the
    // colouring data read along the sorted edge list is already canonical.
    std::string out = cover.canonical_form() + "|T=";
    for (bool b : rho.in_t) out += b ? '1' : '0';
    out += "|c=";
    for (int e = 0; e < cover.edge_count(); ++e) {
        const int c = rho.component[e];
        out += c < 0 ? '.' : (rho.colours[c] == Colour::Blue ? 'b' : 'r');
    }
    return out;
}

std::map<Splitting, HurwitzValue> real_tropical_by_splitting(int genus,
                                                             const Partition& lambda,
                                                             const Partition& mu,
                                                             const TropicalOptions& options) {
    std::map<Splitting, HurwitzValue> sums;
    for (const auto& cover : enumerate_covers(genus, lambda, mu, options)) {
        for (const auto& rho : enumerate_colourings(cover)) {
            sums[induced_splitting(cover, rho)] += mult_real(cover, rho);
        }
    }
    return sums;
}

HurwitzValue real_tropical_hurwitz(int genus, const Partition& lambda, const Partition& mu,
                                   const Splitting& split, const TropicalOptions& options) {
    const int r = branch_count(genus, lambda, mu);
    if (split.branch_points() != r) {
        throw PreconditionError("splitting has " + std::to_string(split.branch_points()) +
                                " points, expected r = " + std::to_string(r));
    }
    HurwitzValue total = 0;
    for (const auto& cover : enumerate_covers(genus, lambda, mu, options)) {
        for (const auto& rho : enumerate_colourings(cover)) {
            if (induced_splitting(cover, rho) == split) total += mult_real(cover, rho);
        }
    }
    return total;
}

std::string to_dot(const TropicalCover& cover, const Colouring& rho, const std::string& name) {
    std::ostringstream out;
    const int r = cover.branch_points();
    const auto removed = edges_in_t(cover, rho.in_t);
    const auto split = induced_splitting(cover, rho);
    out << "digraph \"" << name << "\" {\n  rankdir=LR;\n";
    for (int v = 0; v < r; ++v) {
        out << "  x" << v + 1 << " [label=\"x" << v + 1 << (split.positive[v] ? "+" : "-")
            << "\", shape=circle];\n";
    }
    for (int e = 0; e < cover.edge_count(); ++e) {
        const auto& ed = cover.edge(e);
        std::string from = "x" + std::to_string(ed.from + 1);
        std::string to = "x" + std::to_string(ed.to + 1);
        if (cover.is_left_end(e)) {
            from = "l" + std::to_string(e);
            out << "  " << from << " [label=\"lambda " << ed.weight
                << "\", shape=plaintext];\n";
        }
        if (cover.is_right_end(e)) {
            to = "m" + std::to_string(e);
            out << "  " << to << " [label=\"mu " << ed.weight << "\", shape=plaintext];\n";
        }
        std::string style;
        if (removed[e]) {
            style = ", style=dotted";
        } else if (rho.component[e] >= 0) {
            style = rho.colour_of(e) == Colour::Blue ? ", color=blue" : ", color=red";
        }
        out << "  " << from << " -> " << to << " [label=\"" << ed.weight << "\"" << style
            << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace hurwitz
