#include "regpart/glaisher.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace regpart {

GStatistics g_statistics(const Partition& rho, int r1)
{
    if (r1 < 2) {
        throw std::invalid_argument("r_1 must be at least 2");
    }
    GStatistics stats;
    const auto mult = rho.multiplicities();
    int max_mult = 0;
    for (const auto& [part, m] : mult) {
        max_mult = std::max(max_mult, m);
    }
    for (int j = 1; static_cast<long long>(j) * r1 <= max_mult; ++j) {
        if (j % r1 == 0) {
            continue;
        }
        long long g = 0;
        long long threshold = static_cast<long long>(j) * r1;
        for (int k = 1; threshold <= max_mult; ++k, threshold *= r1) {
            long long y = 0;
            for (const auto& [part, m] : mult) {
                if (m >= threshold) {
                    ++y;
                }
            }
            g += k * y;
        }
        if (g != 0) {
            stats.by_j[j] = g;
            stats.total += g;
        }
    }
    return stats;
}

GlaisherTrace glaisher_forward(const Partition& lambda, const ModulusTuple& moduli)
{
    if (!is_regular(lambda, moduli)) {
        throw std::invalid_argument("glaisher_forward requires a regular partition: " + lambda.to_string());
    }
    const int r1 = moduli.first();
    std::vector<int> parts;
    long long steps = 0;
    for (int part : lambda.parts()) {
        int base = part;
        long long copies = 1;
        while (base % r1 == 0) {
            base /= r1;
            copies *= r1;
        }
        // (r1^v - 1)/(r1 - 1) single replacements produce r1^v copies.
        steps += (copies - 1) / (r1 - 1);
        parts.insert(parts.end(), static_cast<std::size_t>(copies), base);
    }
    auto output = Partition::from_unsorted(std::move(parts));
    auto stats = g_statistics(output, r1);
    return {lambda, std::move(output), steps, std::move(stats.by_j)};
}

GlaisherTrace glaisher_inverse(const Partition& rho, const ModulusTuple& moduli)
{
    if (!is_class_regular(rho, moduli)) {
        throw std::invalid_argument("glaisher_inverse requires a class-regular partition: " + rho.to_string());
    }
    const int r1 = moduli.first();
    std::vector<int> parts;
    long long steps = 0;
    for (const auto& [part, m] : rho.multiplicities()) {
        long long remaining = m;
        long long scale = 1;
        while (remaining > 0) {
            const long long digit = remaining % r1;
            parts.insert(parts.end(), static_cast<std::size_t>(digit), static_cast<int>(part * scale));
            steps += digit * ((scale - 1) / (r1 - 1));
            remaining /= r1;
            scale *= r1;
        }
    }
    auto stats = g_statistics(rho, r1);
    return {rho, Partition::from_unsorted(std::move(parts)), steps, std::move(stats.by_j)};
}

} // namespace regpart

namespace regpart {

Integer glaisher_step_total(const ModulusTuple& moduli, int n)
{
    Integer total = 0;
    for (const auto& rho : enumerate_class_regular(moduli, n)) {
        total += static_cast<long>(g_statistics(rho, moduli.first()).total);
    }
    return total;
}

} // namespace regpart
