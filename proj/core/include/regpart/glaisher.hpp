#pragma once

#include "regpart/numeric.hpp"
#include "regpart/partition.hpp"

#include <map>

namespace regpart {

/// Result of one Glaisher map application.
struct GlaisherTrace {
    /// For the inverse map, input is the class-regular partition and output
    /// the regular one.
    Partition input;
    Partition output;
    /// Number of elementary replacements k*r_1 -> k^{r_1} (forward direction)
    /// needed to pass between input and output.
    long long steps = 0;
    /// Sparse j -> G_j of the class-regular end of the trace (nonzero only).
    std::map<int, long long> g_by_j;

    friend bool operator==(const GlaisherTrace&, const GlaisherTrace&) = default;
};

/// RP_{r,n} -> CP_{r,n}: each part j*r_1^v with r_1 not dividing j becomes
/// r_1^v copies of j. Throws std::invalid_argument on non-regular input.
GlaisherTrace glaisher_forward(const Partition& lambda, const ModulusTuple& moduli);

/// CP_{r,n} -> RP_{r,n}: a part j of multiplicity m = sum c_k r_1^k (base r_1)
/// becomes c_k parts j*r_1^k. Throws on non-class-regular input.
GlaisherTrace glaisher_inverse(const Partition& rho, const ModulusTuple& moduli);

struct GStatistics {
    /// j -> G_j(rho) for j not divisible by r_1, nonzero entries only.
    std::map<int, long long> by_j;
    long long total = 0;
};

/// G_j(rho) = sum_{k>=1} k * #{i : m_i(rho) >= r_1^k j}, and their sum.
GStatistics g_statistics(const Partition& rho, int r1);

} // namespace regpart

namespace regpart {

/// Sum of G(rho) over CP_{r,n}, with r_1 the regularity modulus.
Integer glaisher_step_total(const ModulusTuple& moduli, int n);

} // namespace regpart
