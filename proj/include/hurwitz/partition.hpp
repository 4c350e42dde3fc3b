#pragma once

#include <compare>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace hurwitz {

// Weakly decreasing sequence of positive integers.  Stored sorted, so two
// partitions are equal exactly when they are equal as multisets.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    std::span<const int> parts() const { return parts_; }
    const std::vector<int>& vec() const { return parts_; }

    // |lambda|
    int size() const;
    // l(lambda)
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }
    int count(int part) const;

    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    // Multiset union.
    Partition merged(const Partition& other) const;
    // Multiset difference; throws PreconditionError if other is not contained.
    Partition without(const Partition& other) const;
    Partition scaled(int factor) const;
    // Every part repeated twice (the lambda^2 of the tail decomposition).
    Partition doubled_multiplicity() const;

    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& out, const Partition& p);

// Parses "[7,6,4]" (brackets optional, whitespace ignored); "[]" is empty.
Partition parse_partition(const std::string& text);

// lambda = (2*two_e, 2*two_o, oo^2, zero) with the parity constraints
// documented on each field.
struct TailDecomposition {
    Partition two_e;  // even parts; contribute 2*p (multiples of 4)
    Partition two_o;  // odd parts; contribute 2*p
    Partition oo;     // odd parts; each contributes the pair (p, p)
    Partition zero;   // pairwise distinct odd parts
    int ones_in_oo = 0;

    Partition reassemble() const;
    // (two_e, two_o, oo) as one partition.
    Partition tail() const;

    friend bool operator==(const TailDecomposition&, const TailDecomposition&) = default;
};

TailDecomposition tail_decompose(const Partition& lambda);

// (lambda, 1^m)
Partition extend_with_ones(const Partition& lambda, int m);

// r = l(lambda) + l(mu) + 2g - 2; throws PreconditionError if |lambda| != |mu|.
int branch_count(int genus, const Partition& lambda, const Partition& mu);

// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

}  // namespace hurwitz
