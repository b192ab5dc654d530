#pragma once

#include "regpart/numeric.hpp"
#include "regpart/partition.hpp"

#include <functional>
#include <map>
#include <vector>
#include <string>

namespace regpart {

/// Per-part multiplicity sums and related counts over CP_{r,n} and RP_{r,n}.
///
/// Everything here is computed by direct enumeration; the generating-function
/// forms live in series.hpp and are only ever compared against these.

/// Which statistic a StatisticTable holds.
enum class Statistic { V, W, X, Y };

std::string to_string(Statistic s);

/// j -> value for one statistic at fixed moduli and n.
struct StatisticTable {
    ModulusTuple moduli;
    int n = 0;
    Statistic statistic = Statistic::V;
    std::map<int, Integer> values;

    friend bool operator==(const StatisticTable&, const StatisticTable&) = default;
};

/// V_{r,j,n}: total multiplicity of the part j over CP_{r,n}.
Integer stat_V(const ModulusTuple& moduli, int j, int n);
/// W_{r,j,n}: number of (rho, i) with rho in CP_{r,n} and m_i(rho) >= j.
Integer stat_W(const ModulusTuple& moduli, int j, int n);

/// X_{r,j,n}: number of parts congruent to j mod r, summed over CP_{r,n}.
/// Requires 1 <= j <= r-1.
Integer stat_X(int r, int j, int n);
/// Y_{r,j,n}: number of part values with multiplicity >= j, summed over RP_{r,n}.
/// Requires 1 <= j <= r-1.
Integer stat_Y(int r, int j, int n);

/// Product of all parts of all partitions in CP_{r,n}.
Integer stat_a(const ModulusTuple& moduli, int n);
/// Product of all multiplicity factorials over CP_{r,n}.
Integer stat_b(const ModulusTuple& moduli, int n);

/// c_{r_i,n} by the weighted W double sum; `index` is 1-based.
Integer stat_c(const ModulusTuple& moduli, int index, int n);

/// V and W for every j in 1..n from a single enumeration.
StatisticTable table_V(const ModulusTuple& moduli, int n);
StatisticTable table_W(const ModulusTuple& moduli, int n);
/// X and Y for every j in 1..r-1.
StatisticTable table_X(int r, int n);
StatisticTable table_Y(int r, int n);

/// Calls fn(power, exponents) for every r_1^{k_1}...r_m^{k_m} <= limit,
/// in increasing exponent-tuple order. Exposed for the verification suites.
void for_each_modulus_power(const ModulusTuple& moduli, long long limit,
                            const std::function<void(long long, const std::vector<int>&)>& fn);

} // namespace regpart
