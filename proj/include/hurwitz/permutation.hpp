#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hurwitz/partition.hpp"

namespace hurwitz {

inline constexpr int kMaxDegree = 16;

// Bijection of {0..d-1}.  Composition is functional: (a * b)(x) = a(b(x)),
// so a product written sigma2 * tau_r * ... * sigma1 applies sigma1 first.
class Permutation {
public:
    Permutation() = default;
    static Permutation identity(int degree);
    // Throws PreconditionError unless images is a bijection of {0..d-1}.
    static Permutation from_images(const std::vector<int>& images);
    static Permutation transposition(int degree, int a, int b);
    // A fixed element of cycle type lambda: cycles on consecutive points.
    static Permutation with_cycle_type(const Partition& lambda);

    int degree() const { return degree_; }
    int operator()(int x) const { return images_[x]; }

    Permutation inverse() const;
    Partition cycle_type() const;
    int cycle_count() const;
    bool is_identity() const;
    bool is_involution() const;
    bool is_transposition() const;

    // 4 bits per point; unique for degree <= 16.
    std::uint64_t code() const;

    std::string to_string() const;  // cycle notation, 1-based

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.degree_ == b.degree_ && a.images_ == b.images_;
    }

private:
    std::array<std::uint8_t, kMaxDegree> images_{};
    std::uint8_t degree_ = 0;
};

// gamma * p * gamma == p^{-1}
bool reversed_by(const Permutation& gamma, const Permutation& p);

std::vector<Permutation> all_permutations(int degree);
std::vector<Permutation> all_involutions(int degree);
std::vector<Permutation> all_of_cycle_type(const Partition& lambda);

// d! / z_lambda
std::uint64_t conjugacy_class_size(const Partition& lambda);

}  // namespace hurwitz
