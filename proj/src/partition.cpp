#include "hurwitz/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

void check_positive(const std::vector<int>& parts) {
    for (int p : parts) {
        if (p < 1) {
            throw PreconditionError("partition parts must be positive, got " +
                                    std::to_string(p));
        }
    }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    check_positive(parts_);
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::count(int part) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

Partition Partition::merged(const Partition& other) const {
    std::vector<int> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    return Partition(std::move(all));
}

Partition Partition::without(const Partition& other) const {
    std::vector<int> rest = parts_;
    for (int p : other.parts_) {
        auto it = std::find(rest.begin(), rest.end(), p);
        if (it == rest.end()) {
            throw PreconditionError(other.to_string() + " is not contained in " +
                                    to_string());
        }
        rest.erase(it);
    }
    return Partition(std::move(rest));
}

Partition Partition::scaled(int factor) const {
    std::vector<int> out = parts_;
    for (int& p : out) {
        p *= factor;
    }
    return Partition(std::move(out));
}

Partition Partition::doubled_multiplicity() const {
    std::vector<int> out;
    out.reserve(parts_.size() * 2);
    for (int p : parts_) {
        out.push_back(p);
        out.push_back(p);
    }
    return Partition(std::move(out));
}

std::string Partition::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

std::ostream& operator<<(std::ostream& out, const Partition& p) {
    return out << p.to_string();
}

Partition parse_partition(const std::string& text) {
    std::string body;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            body += c;
        }
    }
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') {
            throw ParseError("unbalanced brackets in partition '" + text + "'");
        }
        body = body.substr(1, body.size() - 2);
    }
    std::vector<int> parts;
    if (body.empty()) {
        return Partition();
    }
    std::stringstream stream(body);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty() ||
            !std::all_of(item.begin(), item.end(),
                         [](unsigned char c) { return std::isdigit(c); })) {
            throw ParseError("bad partition part '" + item + "' in '" + text + "'");
        }
        const int value = std::stoi(item);
        if (value < 1) {
            throw ParseError("partition parts must be positive in '" + text + "'");
        }
        parts.push_back(value);
    }
    return Partition(std::move(parts));
}

Partition TailDecomposition::reassemble() const {
    return two_e.scaled(2)
        .merged(two_o.scaled(2))
        .merged(oo.doubled_multiplicity())
        .merged(zero);
}

Partition TailDecomposition::tail() const {
    return two_e.merged(two_o).merged(oo);
}

TailDecomposition tail_decompose(const Partition& lambda) {
    std::map<int, int, std::greater<>> multiplicity;
    for (int p : lambda) {
        ++multiplicity[p];
    }
    std::vector<int> two_e, two_o, oo, zero;
    for (auto [part, count] : multiplicity) {
        if (part % 2 == 0) {
            auto& target = (part / 2) % 2 == 0 ? two_e : two_o;
            target.insert(target.end(), count, part / 2);
        } else {
            oo.insert(oo.end(), count / 2, part);
            if (count % 2 == 1) {
                zero.push_back(part);
            }
        }
    }
    TailDecomposition result;
    result.two_e = Partition(std::move(two_e));
    result.two_o = Partition(std::move(two_o));
    result.oo = Partition(std::move(oo));
    result.zero = Partition(std::move(zero));
    result.ones_in_oo = result.oo.count(1);
    return result;
}

Partition extend_with_ones(const Partition& lambda, int m) {
    if (m < 0) {
        throw PreconditionError("cannot add a negative number of ones");
    }
    std::vector<int> parts = lambda.vec();
    parts.insert(parts.end(), m, 1);
    return Partition(std::move(parts));
}

int branch_count(int genus, const Partition& lambda, const Partition& mu) {
    if (genus < 0) {
        throw PreconditionError("genus must be nonnegative");
    }
    if (lambda.size() != mu.size()) {
        throw PreconditionError("degree mismatch: |" + lambda.to_string() +
                                "| = " + std::to_string(lambda.size()) + " but |" +
                                mu.to_string() + "| = " + std::to_string(mu.size()));
    }
    return lambda.length() + mu.length() + 2 * genus - 2;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    if (n >= 0) {
        rec(n, n);
    }
    return out;
}

}  // namespace hurwitz
