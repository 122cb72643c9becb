#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lsym {

/**
 * Integer partition: a weakly decreasing sequence of positive integers.
 *
 * Canonical form forbids zero parts; construction from arbitrary input
 * sorts descending and strips zeros, so equal partitions always compare
 * equal as map keys. Immutable value type.
 *
 * The total order is graded reverse-lexicographic: first by weight, then
 * lexicographically decreasing within a grade. Partitions of weight <= 2
 * are ordered [], [1], [2], [1,1]. This is also the serialization order.
 */
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 0) throw std::invalid_argument("negative part in partition");
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    int weight() const {
        int w = 0;
        for (int p : parts_) w += p;
        return w;
    }

    int length() const { return static_cast<int>(parts_.size()); }

    int distinct_entries() const {
        int d = 0;
        for (std::size_t i = 0; i < parts_.size(); ++i)
            if (i == 0 || parts_[i] != parts_[i - 1]) ++d;
        return d;
    }

    // Multiplies every part by i; length is preserved.
    Partition scaled(int i) const {
        if (i < 1) throw std::invalid_argument("scale factor must be >= 1");
        std::vector<int> v = parts_;
        for (int& p : v) p *= i;
        return Partition(std::move(v));
    }

    // Transpose of the Young diagram.
    Partition conjugate() const {
        std::vector<int> v;
        if (!parts_.empty()) {
            v.resize(static_cast<std::size_t>(parts_[0]), 0);
            for (int p : parts_)
                for (int j = 0; j < p; ++j) ++v[static_cast<std::size_t>(j)];
        }
        return Partition(std::move(v));
    }

    // z_tau = prod_i i^{m_i} m_i!  with m_i the multiplicity of part i.
    // This is <p_tau, p_tau> under the Hall pairing. Fits easily in 64
    // bits for the weights this library handles (z <= 12! at weight 12).
    std::int64_t z_factor() const {
        std::int64_t z = 1;
        std::size_t i = 0;
        while (i < parts_.size()) {
            std::size_t j = i;
            while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
            std::int64_t m = static_cast<std::int64_t>(j - i);
            for (std::int64_t k = 1; k <= m; ++k) z *= parts_[i] * k;
            i = j;
        }
        return z;
    }

    // Multiset union of parts (index rule for p_a * p_b = p_{a u b}).
    Partition merged(const Partition& other) const {
        std::vector<int> v = parts_;
        v.insert(v.end(), other.parts_.begin(), other.parts_.end());
        return Partition(std::move(v));
    }

    bool operator==(const Partition& other) const = default;

    // Graded reverse-lexicographic order (see class comment).
    std::strong_ordering operator<=>(const Partition& other) const {
        int wa = weight(), wb = other.weight();
        if (wa != wb) return wa <=> wb;
        // within a grade: lexicographically larger sequence first
        return std::lexicographical_compare_three_way(
            other.parts_.begin(), other.parts_.end(),
            parts_.begin(), parts_.end());
    }

    std::string str() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        os << ']';
        return os.str();
    }

private:
    std::vector<int> parts_;
};

// Parses "[3,2,2,1]" or "[]".
inline Partition parse_partition(const std::string& s) {
    std::size_t i = 0;
    auto fail = [&]() -> void {
        throw std::invalid_argument("malformed partition literal: '" + s + "'");
    };
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size() || s[i] != '[') fail();
    ++i;
    std::vector<int> parts;
    while (true) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i < s.size() && s[i] == ']') { ++i; break; }
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) fail();
        parts.push_back(std::stoi(s.substr(i, j - i)));
        i = j;
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i < s.size() && s[i] == ',') { ++i; continue; }
        if (i < s.size() && s[i] == ']') { ++i; break; }
        fail();
    }
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i != s.size()) fail();
    return Partition(std::move(parts));
}

namespace detail {

inline void partitions_of_rec(int n, int max_part, std::vector<int>& acc,
                              const std::function<void(const Partition&)>& emit) {
    if (n == 0) {
        emit(Partition(acc));
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        acc.push_back(p);
        partitions_of_rec(n - p, p, acc, emit);
        acc.pop_back();
    }
}

} // namespace detail

// All partitions of exactly n, in reverse-lexicographic order
// ([4], [3,1], [2,2], [2,1,1], [1,1,1,1]).
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> acc;
    detail::partitions_of_rec(n, n == 0 ? 1 : n, acc,
                              [&](const Partition& p) { out.push_back(p); });
    return out;
}

// All partitions of weight <= bound, each exactly once, in the documented
// order: graded, then reverse-lexicographic within a grade.
inline std::vector<Partition> partitions_up_to(int bound) {
    std::vector<Partition> out;
    for (int d = 0; d <= bound; ++d) {
        auto layer = partitions_of(d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

} // namespace lsym
