#include "regpart/statistics.hpp"

#include <stdexcept>

namespace regpart {

std::string to_string(Statistic s)
{
    switch (s) {
    case Statistic::V: return "V";
    case Statistic::W: return "W";
    case Statistic::X: return "X";
    case Statistic::Y: return "Y";
    }
    return "?";
}

namespace {

void require_j(int j)
{
    if (j < 1) {
        throw std::invalid_argument("j must be at least 1");
    }
}

void require_residue(int r, int j)
{
    if (r < 2) {
        throw std::invalid_argument("r must be at least 2");
    }
    if (j < 1 || j > r - 1) {
        throw std::invalid_argument("j must lie in 1..r-1");
    }
}

// y_j(rho): number of distinct part values with multiplicity >= j.
int count_mult_at_least(const Partition& rho, int j)
{
    int count = 0;
    for (const auto& [part, mult] : rho.multiplicities()) {
        if (mult >= j) {
            ++count;
        }
    }
    return count;
}

void power_recurse(const ModulusTuple& moduli, std::size_t pos, long long power, long long limit,
                   std::vector<int>& exps,
                   const std::function<void(long long, const std::vector<int>&)>& fn)
{
    if (pos == moduli.size()) {
        fn(power, exps);
        return;
    }
    for (long long p = power; p <= limit; p *= moduli[pos]) {
        power_recurse(moduli, pos + 1, p, limit, exps, fn);
        ++exps[pos];
    }
    exps[pos] = 0;
}

} // namespace

void for_each_modulus_power(const ModulusTuple& moduli, long long limit,
                            const std::function<void(long long, const std::vector<int>&)>& fn)
{
    if (limit < 1) {
        return;
    }
    std::vector<int> exps(moduli.size(), 0);
    power_recurse(moduli, 0, 1, limit, exps, fn);
}

Integer stat_V(const ModulusTuple& moduli, int j, int n)
{
    require_j(j);
    Integer total = 0;
    for (const auto& rho : enumerate_class_regular(moduli, n)) {
        total += rho.multiplicity(j);
    }
    return total;
}

Integer stat_W(const ModulusTuple& moduli, int j, int n)
{
    require_j(j);
    Integer total = 0;
    for (const auto& rho : enumerate_class_regular(moduli, n)) {
        total += count_mult_at_least(rho, j);
    }
    return total;
}

Integer stat_X(int r, int j, int n)
{
    require_residue(r, j);
    Integer total = 0;
    for (const auto& rho : enumerate_class_regular(ModulusTuple{r}, n)) {
        for (int part : rho.parts()) {
            if (part % r == j) {
                ++total;
            }
        }
    }
    return total;
}

Integer stat_Y(int r, int j, int n)
{
    require_residue(r, j);
    Integer total = 0;
    for (const auto& lambda : enumerate_regular(ModulusTuple{r}, n)) {
        total += count_mult_at_least(lambda, j);
    }
    return total;
}

Integer stat_a(const ModulusTuple& moduli, int n)
{
    Integer product = 1;
    for (const auto& rho : enumerate_class_regular(moduli, n)) {
        for (int part : rho.parts()) {
            product *= part;
        }
    }
    return product;
}

Integer stat_b(const ModulusTuple& moduli, int n)
{
    Integer product = 1;
    for (const auto& rho : enumerate_class_regular(moduli, n)) {
        for (const auto& [part, mult] : rho.multiplicities()) {
            product *= factorial(static_cast<unsigned long>(mult));
        }
    }
    return product;
}

Integer stat_c(const ModulusTuple& moduli, int index, int n)
{
    if (index < 1 || static_cast<std::size_t>(index) > moduli.size()) {
        throw std::invalid_argument("modulus index out of range");
    }
    const auto w = table_W(moduli, n).values;
    Integer total = 0;
    for (int j = 1; j <= n; ++j) {
        if (!moduli.coprime_to_all(j)) {
            continue;
        }
        for_each_modulus_power(moduli, n / j, [&](long long power, const std::vector<int>& exps) {
            const int k = exps[static_cast<std::size_t>(index - 1)];
            if (k > 0) {
                total += k * w.at(static_cast<int>(power * j));
            }
        });
    }
    return total;
}

StatisticTable table_V(const ModulusTuple& moduli, int n)
{
    StatisticTable table{moduli, n, Statistic::V, {}};
    for (int j = 1; j <= n; ++j) {
        table.values[j] = 0;
    }
    for (const auto& rho : enumerate_class_regular(moduli, n)) {
        for (int part : rho.parts()) {
            ++table.values[part];
        }
    }
    return table;
}

StatisticTable table_W(const ModulusTuple& moduli, int n)
{
    StatisticTable table{moduli, n, Statistic::W, {}};
    for (int j = 1; j <= n; ++j) {
        table.values[j] = 0;
    }
    for (const auto& rho : enumerate_class_regular(moduli, n)) {
        for (const auto& [part, mult] : rho.multiplicities()) {
            for (int j = 1; j <= mult; ++j) {
                ++table.values[j];
            }
        }
    }
    return table;
}

StatisticTable table_X(int r, int n)
{
    StatisticTable table{ModulusTuple{r}, n, Statistic::X, {}};
    for (int j = 1; j < r; ++j) {
        table.values[j] = stat_X(r, j, n);
    }
    return table;
}

StatisticTable table_Y(int r, int n)
{
    StatisticTable table{ModulusTuple{r}, n, Statistic::Y, {}};
    for (int j = 1; j < r; ++j) {
        table.values[j] = stat_Y(r, j, n);
    }
    return table;
}

} // namespace regpart
