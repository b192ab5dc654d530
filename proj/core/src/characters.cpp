#include "regpart/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace regpart {

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

std::mutex memo_mutex;
std::map<Key, std::int64_t> memo;

// Removes the first part of rho as a rim hook in every possible way.
std::int64_t compute(const std::vector<int>& lambda, const std::vector<int>& rho)
{
    if (rho.empty()) {
        return lambda.empty() ? 1 : 0;
    }
    {
        std::lock_guard lock(memo_mutex);
        if (auto it = memo.find({lambda, rho}); it != memo.end()) {
            return it->second;
        }
    }

    const int hook = rho.front();
    const std::vector<int> rest(rho.begin() + 1, rho.end());
    const int len = static_cast<int>(lambda.size());

    // beta_i = lambda_i + (len - 1 - i), strictly decreasing.
    std::vector<int> beta(lambda.size());
    for (int i = 0; i < len; ++i) {
        beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);
    }

    std::int64_t total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - hook;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) {
            continue;
        }
        // Leg length = number of beta values strictly between target and beta_i.
        const auto height = std::count_if(beta.begin(), beta.end(),
                                          [&](int b) { return b > target && b < beta[i]; });
        std::vector<int> moved = beta;
        moved[i] = target;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> smaller;
        for (int k = 0; k < len; ++k) {
            const int part = moved[static_cast<std::size_t>(k)] - (len - 1 - k);
            if (part > 0) {
                smaller.push_back(part);
            }
        }
        const std::int64_t value = compute(smaller, rest);
        total += (height % 2 == 0) ? value : -value;
    }

    std::lock_guard lock(memo_mutex);
    memo.emplace(Key{lambda, rho}, total);
    return total;
}

} // namespace

std::int64_t mn_character(const Partition& lambda, const Partition& rho)
{
    if (lambda.weight() != rho.weight()) {
        throw std::invalid_argument("character value needs partitions of equal weight");
    }
    return compute(lambda.parts(), rho.parts());
}

} // namespace regpart
