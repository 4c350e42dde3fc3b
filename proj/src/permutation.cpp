#include "hurwitz/permutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hurwitz/errors.hpp"

namespace hurwitz {

Permutation Permutation::identity(int degree) {
    if (degree < 0 || degree > kMaxDegree) {
        throw PreconditionError("permutation degree out of range: " +
                                std::to_string(degree));
    }
    Permutation p;
    p.degree_ = static_cast<std::uint8_t>(degree);
    for (int i = 0; i < degree; ++i) {
        p.images_[i] = static_cast<std::uint8_t>(i);
    }
    return p;
}

Permutation Permutation::from_images(const std::vector<int>& images) {
    const int degree = static_cast<int>(images.size());
    Permutation p = identity(degree);
    std::vector<bool> seen(degree, false);
    for (int i = 0; i < degree; ++i) {
        const int image = images[i];
        if (image < 0 || image >= degree || seen[image]) {
            throw PreconditionError("not a bijection");
        }
        seen[image] = true;
        p.images_[i] = static_cast<std::uint8_t>(image);
    }
    return p;
}

Permutation Permutation::transposition(int degree, int a, int b) {
    Permutation p = identity(degree);
    if (a == b || a < 0 || b < 0 || a >= degree || b >= degree) {
        throw PreconditionError("bad transposition");
    }
    std::swap(p.images_[a], p.images_[b]);
    return p;
}

Permutation Permutation::with_cycle_type(const Partition& lambda) {
    Permutation p = identity(lambda.size());
    int start = 0;
    for (int len : lambda) {
        for (int j = 0; j < len; ++j) {
            p.images_[start + j] = static_cast<std::uint8_t>(start + (j + 1) % len);
        }
        start += len;
    }
    return p;
}

Permutation Permutation::inverse() const {
    Permutation p = *this;
    for (int i = 0; i < degree_; ++i) {
        p.images_[images_[i]] = static_cast<std::uint8_t>(i);
    }
    return p;
}

Partition Permutation::cycle_type() const {
    std::vector<int> lengths;
    std::array<bool, kMaxDegree> seen{};
    for (int i = 0; i < degree_; ++i) {
        if (seen[i]) {
            continue;
        }
        int len = 0;
        for (int j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition(std::move(lengths));
}

int Permutation::cycle_count() const {
    int cycles = 0;
    std::array<bool, kMaxDegree> seen{};
    for (int i = 0; i < degree_; ++i) {
        if (seen[i]) {
            continue;
        }
        ++cycles;
        for (int j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
        }
    }
    return cycles;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree_; ++i) {
        if (images_[i] != i) {
            return false;
        }
    }
    return true;
}

bool Permutation::is_involution() const {
    for (int i = 0; i < degree_; ++i) {
        if (images_[images_[i]] != i) {
            return false;
        }
    }
    return true;
}

bool Permutation::is_transposition() const {
    int moved = 0;
    for (int i = 0; i < degree_; ++i) {
        moved += images_[i] != i;
    }
    return moved == 2 && is_involution();
}

std::uint64_t Permutation::code() const {
    std::uint64_t out = 0;
    for (int i = 0; i < degree_; ++i) {
        out |= static_cast<std::uint64_t>(images_[i]) << (4 * i);
    }
    return out;
}

std::string Permutation::to_string() const {
    std::string out;
    std::array<bool, kMaxDegree> seen{};
    for (int i = 0; i < degree_; ++i) {
        if (seen[i] || images_[i] == i) {
            seen[i] = true;
            continue;
        }
        out += '(';
        for (int j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            if (out.back() != '(') {
                out += ' ';
            }
            out += std::to_string(j + 1);
        }
        out += ')';
    }
    return out.empty() ? "id" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree_ != b.degree_) {
        throw PreconditionError("composing permutations of different degree");
    }
    Permutation out = a;
    for (int i = 0; i < a.degree_; ++i) {
        out.images_[i] = a.images_[b.images_[i]];
    }
    return out;
}

bool reversed_by(const Permutation& gamma, const Permutation& p) {
    // gamma p gamma = p^{-1}  <=>  p(gamma(p(gamma(x)))) = x for all x
    for (int x = 0; x < p.degree(); ++x) {
        if (p(gamma(p(gamma(x)))) != x) {
            return false;
        }
    }
    return true;
}

std::vector<Permutation> all_permutations(int degree) {
    std::vector<int> images(degree);
    std::iota(images.begin(), images.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

std::vector<Permutation> all_involutions(int degree) {
    std::vector<Permutation> out;
    for (const auto& p : all_permutations(degree)) {
        if (p.is_involution()) {
            out.push_back(p);
        }
    }
    return out;
}

std::vector<Permutation> all_of_cycle_type(const Partition& lambda) {
    std::vector<Permutation> out;
    for (const auto& p : all_permutations(lambda.size())) {
        if (p.cycle_type() == lambda) {
            out.push_back(p);
        }
    }
    return out;
}

std::uint64_t conjugacy_class_size(const Partition& lambda) {
    // d! / prod_i (i^{m_i} m_i!)
    std::uint64_t numerator = 1;
    for (int i = 2; i <= lambda.size(); ++i) {
        numerator *= static_cast<std::uint64_t>(i);
    }
    std::map<int, int> multiplicity;
    for (int p : lambda) {
        ++multiplicity[p];
    }
    std::uint64_t z = 1;
    for (auto [part, m] : multiplicity) {
        for (int j = 1; j <= m; ++j) {
            z *= static_cast<std::uint64_t>(part) * static_cast<std::uint64_t>(j);
        }
    }
    return numerator / z;
}

}  // namespace hurwitz
