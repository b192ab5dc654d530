#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace regpart {

/// A weakly decreasing list of positive integers.
///
/// Construction validates the invariant; equality is equality of part lists.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    /// Builds a partition from an unordered list of positive parts.
    static Partition from_unsorted(std::vector<int> parts);
    /// Builds a partition from (part, multiplicity) pairs.
    static Partition from_multiplicities(const std::map<int, int>& mult);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    int weight() const noexcept { return weight_; }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    /// Number of parts equal to `part`.
    int multiplicity(int part) const;
    /// part -> multiplicity, for parts that occur.
    std::map<int, int> multiplicities() const;
    /// Number of distinct part values.
    int distinct_parts() const;

    Partition conjugate() const;
    /// Removes `count` copies of `part`; throws if fewer are present.
    Partition remove_parts(int part, int count) const;
    /// Multiplies every part by k.
    Partition scaled(int k) const;
    /// Multiset union of the parts.
    Partition merged(const Partition& other) const;

    /// "(3,1,1)" style rendering; "()" for the empty partition.
    std::string to_string() const;
    /// Exponential notation: "3 1^2", or "0" for the empty partition.
    std::string to_compact_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// The shared total order used to index every matrix: lexicographically
/// decreasing part lists, so (n) comes first and (1^n) last. It is a linear
/// extension of dominance order.
struct CanonicalOrder {
    bool operator()(const Partition& a, const Partition& b) const
    {
        return a.parts() > b.parts();
    }
};

/// lambda dominates mu (partial sums weakly larger); weights must agree.
bool dominates(const Partition& lambda, const Partition& mu);

/// Pairwise-coprime moduli (r_1, ..., r_m), each at least 2, m >= 1.
class ModulusTuple {
public:
    ModulusTuple(std::initializer_list<int> moduli);
    explicit ModulusTuple(std::vector<int> moduli);

    const std::vector<int>& moduli() const noexcept { return moduli_; }
    std::size_t size() const noexcept { return moduli_.size(); }
    int operator[](std::size_t i) const { return moduli_[i]; }
    int first() const noexcept { return moduli_.front(); }

    /// True iff no modulus divides k.
    bool coprime_to_all(long long k) const;
    /// The tuple with the i-th entry (0-based) removed; empty result allowed
    /// only as a plain list, since a ModulusTuple must be non-empty.
    std::vector<int> without(std::size_t i) const;

    std::string to_string() const;

    friend bool operator==(const ModulusTuple&, const ModulusTuple&) = default;

private:
    std::vector<int> moduli_;
};

/// All partitions of n in canonical order.
std::vector<Partition> enumerate_partitions(int n);

/// No part divisible by any modulus.
bool is_class_regular(const Partition& lambda, const ModulusTuple& moduli);
/// Every multiplicity below r_1 and no part divisible by r_2, ..., r_m.
bool is_regular(const Partition& lambda, const ModulusTuple& moduli);

/// CP_{r,n}: class-regular partitions of n, canonical order.
std::vector<Partition> enumerate_class_regular(const ModulusTuple& moduli, int n);
/// RP_{r,n}: regular partitions of n, canonical order.
std::vector<Partition> enumerate_regular(const ModulusTuple& moduli, int n);

} // namespace regpart

template <>
struct std::hash<regpart::Partition> {
    std::size_t operator()(const regpart::Partition& p) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ull;
        for (int part : p.parts()) {
            h ^= static_cast<std::size_t>(part);
            h *= 0x100000001b3ull;
        }
        return h;
    }
};
