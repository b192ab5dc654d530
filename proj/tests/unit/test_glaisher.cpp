#include "doctest.h"

#include "regpart/glaisher.hpp"
#include "regpart/series.hpp"
#include "regpart/statistics.hpp"

#include <random>
#include <set>

using namespace regpart;

namespace {

const std::vector<ModulusTuple>& sweep_tuples()
{
    static const std::vector<ModulusTuple> tuples = {{2},    {3},    {5},       {2, 3},    {2, 5}, {3, 5},
                                                     {3, 2}, {3, 4}, {4, 9},    {2, 3, 5}, {5, 3, 2}};
    return tuples;
}

// One replacement k*r1 -> k^{r1} at a time, in random order.
std::pair<Partition, long long> iterative_glaisher(const Partition& lambda, int r1, std::mt19937& rng)
{
    std::vector<int> parts = lambda.parts();
    long long steps = 0;
    for (;;) {
        std::vector<std::size_t> eligible;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] % r1 == 0) {
                eligible.push_back(i);
            }
        }
        if (eligible.empty()) {
            break;
        }
        std::uniform_int_distribution<std::size_t> pick(0, eligible.size() - 1);
        const std::size_t at = eligible[pick(rng)];
        const int k = parts[at] / r1;
        parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(at));
        parts.insert(parts.end(), static_cast<std::size_t>(r1), k);
        ++steps;
    }
    return {Partition::from_unsorted(parts), steps};
}

} // namespace

TEST_CASE("forward examples")
{
    auto t = glaisher_forward(Partition{6, 1}, ModulusTuple{3});
    CHECK(t.output == Partition{2, 2, 2, 1});
    CHECK(t.steps == 1);
    t = glaisher_forward(Partition{9}, ModulusTuple{3});
    CHECK(t.output == Partition::from_multiplicities({{1, 9}}));
    CHECK(t.steps == 4);
    t = glaisher_forward(Partition{5, 2, 1}, ModulusTuple{3});
    CHECK(t.output == Partition{5, 2, 1});
    CHECK(t.steps == 0);
    CHECK_THROWS_AS(glaisher_forward(Partition{1, 1, 1}, ModulusTuple{3}), std::invalid_argument);
    CHECK_THROWS_AS(glaisher_forward(Partition{3, 1}, ModulusTuple{2, 3}), std::invalid_argument);
}

TEST_CASE("inverse examples")
{
    auto t = glaisher_inverse(Partition::from_multiplicities({{1, 9}}), ModulusTuple{3});
    CHECK(t.input == Partition::from_multiplicities({{1, 9}}));
    CHECK(t.output == Partition{9});
    CHECK(t.steps == 4);
    CHECK(glaisher_inverse(Partition{2, 2, 2, 1}, ModulusTuple{3}).output == Partition{6, 1});
    CHECK(glaisher_inverse(Partition{5, 2, 1}, ModulusTuple{3}).output == Partition{5, 2, 1});
    CHECK_THROWS_AS(glaisher_inverse(Partition{3}, ModulusTuple{3}), std::invalid_argument);
}

TEST_CASE("G statistics")
{
    auto g = g_statistics(Partition::from_multiplicities({{1, 9}}), 3);
    CHECK(g.by_j == std::map<int, long long>{{1, 3}, {2, 1}});
    CHECK(g.total == 4);
    g = g_statistics(Partition::from_multiplicities({{1, 7}}), 3);
    CHECK(g.by_j == std::map<int, long long>{{1, 1}, {2, 1}});
    CHECK(g.total == 2);
    g = g_statistics(Partition{5, 4, 2, 2, 1}, 3);
    CHECK(g.by_j.empty());
    CHECK(g.total == 0);
}

TEST_CASE("forward and inverse are mutually inverse bijections")
{
    for (const auto& r : sweep_tuples()) {
        for (int n = 0; n <= 20; ++n) {
            const auto rp = enumerate_regular(r, n);
            const auto cp = enumerate_class_regular(r, n);
            REQUIRE(rp.size() == cp.size());
            std::set<Partition, CanonicalOrder> images;
            for (const auto& lambda : rp) {
                const auto t = glaisher_forward(lambda, r);
                CHECK(t.input == lambda);
                CHECK(is_class_regular(t.output, r));
                CHECK(t.output.weight() == n);
                CHECK(glaisher_inverse(t.output, r).output == lambda);
                const auto delta = static_cast<long long>(t.output.length() - lambda.length());
                CHECK(delta == t.steps * (r.first() - 1));
                const auto g = g_statistics(t.output, r.first());
                CHECK(t.steps == g.total);
                CHECK(t.g_by_j == g.by_j);
                images.insert(t.output);
            }
            CHECK(images.size() == cp.size());
            for (const auto& rho : cp) {
                const auto t = glaisher_inverse(rho, r);
                CHECK(is_regular(t.output, r));
                CHECK(glaisher_forward(t.output, r).output == rho);
            }
        }
    }
}

TEST_CASE("iterative replacement in any order agrees with the batch map")
{
    std::mt19937 rng(4242);
    for (const auto& r : sweep_tuples()) {
        for (int n = 0; n <= 18; ++n) {
            for (const auto& lambda : enumerate_regular(r, n)) {
                const auto batch = glaisher_forward(lambda, r);
                for (int trial = 0; trial < 3; ++trial) {
                    const auto [out, steps] = iterative_glaisher(lambda, r.first(), rng);
                    CHECK(out == batch.output);
                    CHECK(steps == batch.steps);
                }
            }
        }
    }
}

TEST_CASE("c equals the total Glaisher step count")
{
    for (const auto& r : sweep_tuples()) {
        const auto series = series_c(r, 1, 20);
        for (int n = 0; n <= 20; ++n) {
            const Integer total = glaisher_step_total(r, n);
            CHECK(total == stat_c(r, 1, n));
            CHECK(total == series.integer_coefficient(n));
        }
    }
    CHECK(glaisher_step_total(ModulusTuple{3}, 7) == 6);
}
