#include "doctest.h"

#include "oracles.hpp"
#include "regpart/partition.hpp"

#include <set>

using namespace regpart;

namespace {

std::vector<std::vector<int>> parts_of(const std::vector<Partition>& ps)
{
    std::vector<std::vector<int>> out;
    for (const auto& p : ps) {
        out.push_back(p.parts());
    }
    return out;
}

const std::vector<ModulusTuple>& sample_tuples()
{
    static const std::vector<ModulusTuple> tuples = {
        {2}, {3}, {4}, {5}, {2, 3}, {3, 2}, {2, 5}, {3, 5}, {3, 4}, {4, 9}, {2, 3, 5}, {5, 3, 2}, {2, 3, 7}};
    return tuples;
}

} // namespace

TEST_CASE("partition invariants are enforced")
{
    Partition p{3, 1, 1};
    CHECK(p.weight() == 5);
    CHECK(p.length() == 3);
    CHECK(p.multiplicity(1) == 2);
    CHECK(p.distinct_parts() == 2);
    CHECK(p.to_compact_string() == "3 1^2");
    CHECK(Partition{}.to_compact_string() == "0");
    CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition(std::vector<int>{2, 0}), std::invalid_argument);
    CHECK(Partition::from_unsorted({1, 3, 1}) == p);
    CHECK(Partition::from_multiplicities({{1, 2}, {3, 1}}) == p);
    CHECK(p.conjugate() == Partition{3, 1, 1});
    CHECK(Partition{4, 2}.conjugate() == Partition{2, 2, 1, 1});
    CHECK(p.remove_parts(1, 2) == Partition{3});
    CHECK_THROWS(p.remove_parts(3, 2));
}

TEST_CASE("modulus tuples must be pairwise coprime and non-empty")
{
    CHECK_NOTHROW(ModulusTuple{2, 3, 5});
    CHECK_THROWS_AS(ModulusTuple({2, 4}), std::invalid_argument);
    CHECK_THROWS_AS(ModulusTuple({1}), std::invalid_argument);
    CHECK_THROWS_AS(ModulusTuple(std::vector<int>{}), std::invalid_argument);
    ModulusTuple r{2, 3};
    CHECK(r.coprime_to_all(7));
    CHECK_FALSE(r.coprime_to_all(9));
    CHECK(r.without(0) == std::vector<int>{3});
}

TEST_CASE("enumerate_partitions matches the pentagonal recurrence")
{
    const auto p = oracle::partition_numbers(30);
    CHECK(enumerate_partitions(0).size() == 1);
    CHECK(enumerate_partitions(0).front().empty());
    CHECK(enumerate_partitions(4).size() == 5);
    CHECK(enumerate_partitions(7).size() == 15);
    for (int n = 0; n <= 30; ++n) {
        CHECK(mpz_class(enumerate_partitions(n).size()) == p[static_cast<std::size_t>(n)]);
    }
    CHECK_THROWS_AS(enumerate_partitions(-1), std::invalid_argument);
}

TEST_CASE("enumeration is strictly increasing in canonical order")
{
    CanonicalOrder less;
    for (int n = 0; n <= 15; ++n) {
        const auto all = enumerate_partitions(n);
        for (std::size_t i = 1; i < all.size(); ++i) {
            CHECK(less(all[i - 1], all[i]));
        }
        for (const auto& r : sample_tuples()) {
            for (const auto& list : {enumerate_class_regular(r, n), enumerate_regular(r, n)}) {
                for (std::size_t i = 1; i < list.size(); ++i) {
                    CHECK(less(list[i - 1], list[i]));
                }
            }
        }
    }
    const auto four = enumerate_partitions(4);
    CHECK(parts_of(four) == std::vector<std::vector<int>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
}

TEST_CASE("canonical order extends dominance")
{
    for (int n = 1; n <= 10; ++n) {
        const auto all = enumerate_partitions(n);
        for (std::size_t i = 0; i < all.size(); ++i) {
            for (std::size_t j = i + 1; j < all.size(); ++j) {
                CHECK_FALSE(dominates(all[j], all[i]));
            }
        }
    }
    CHECK(dominates(Partition{3, 1}, Partition{2, 2}));
    CHECK_FALSE(dominates(Partition{3, 3}, Partition{4, 1, 1}));
    CHECK_FALSE(dominates(Partition{4, 1, 1}, Partition{3, 3}));
}

TEST_CASE("class-regular and regular predicates")
{
    CHECK(is_class_regular(Partition{7, 1, 1, 1}, ModulusTuple{2, 3}));
    CHECK_FALSE(is_class_regular(Partition{6, 1}, ModulusTuple{2, 3}));
    CHECK(is_class_regular(Partition{}, ModulusTuple{2, 3}));
    CHECK(is_regular(Partition{9}, ModulusTuple{3}));
    CHECK(is_regular(Partition{3, 2, 1, 1}, ModulusTuple{3}));
    CHECK_FALSE(is_regular(Partition{1, 1, 1}, ModulusTuple{3}));
    // parts divisible by r_2 are excluded, parts divisible by r_1 allowed
    CHECK(is_regular(Partition{4, 1}, ModulusTuple{2, 3}));
    CHECK_FALSE(is_regular(Partition{3, 1}, ModulusTuple{2, 3}));
}

TEST_CASE("enumerated CP and RP sets for small cases")
{
    CHECK(parts_of(enumerate_class_regular(ModulusTuple{2, 3}, 10)) ==
          std::vector<std::vector<int>>{{7, 1, 1, 1}, {5, 5}, {5, 1, 1, 1, 1, 1}, std::vector<int>(10, 1)});
    const std::vector<std::vector<int>> cp37 = {{7},          {5, 2},          {5, 1, 1},    {4, 2, 1},
                                                {4, 1, 1, 1}, {2, 2, 2, 1},    {2, 2, 1, 1, 1},
                                                {2, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1, 1}};
    CHECK(parts_of(enumerate_class_regular(ModulusTuple{3}, 7)) == cp37);
    const std::vector<std::vector<int>> rp37 = {{7},    {6, 1},    {5, 2},    {5, 1, 1}, {4, 3},
                                                {4, 2, 1}, {3, 3, 1}, {3, 2, 2}, {3, 2, 1, 1}};
    CHECK(parts_of(enumerate_regular(ModulusTuple{3}, 7)) == rp37);
    CHECK(parts_of(enumerate_regular(ModulusTuple{2}, 4)) == std::vector<std::vector<int>>{{4}, {3, 1}});
    CHECK(enumerate_class_regular(ModulusTuple{5}, 0).size() == 1);
    CHECK(enumerate_regular(ModulusTuple{5}, 0).size() == 1);
}

TEST_CASE("CP and RP are exactly the filtered partitions, and equinumerous")
{
    for (const auto& r : sample_tuples()) {
        for (int n = 0; n <= 20; ++n) {
            std::set<std::vector<int>> expected_cp;
            std::set<std::vector<int>> expected_rp;
            for (const auto& asc : oracle::partitions_ascending(n)) {
                const auto parts = oracle::descending(asc);
                const auto mult = oracle::multiplicities(parts);
                bool class_regular = true;
                bool regular = true;
                for (const auto& [part, m] : mult) {
                    for (std::size_t i = 0; i < r.size(); ++i) {
                        if (part % r[i] == 0) {
                            class_regular = false;
                            if (i > 0) {
                                regular = false;
                            }
                        }
                    }
                    if (m >= r.first()) {
                        regular = false;
                    }
                }
                if (class_regular) {
                    expected_cp.insert(parts);
                }
                if (regular) {
                    expected_rp.insert(parts);
                }
            }
            const auto cp = parts_of(enumerate_class_regular(r, n));
            const auto rp = parts_of(enumerate_regular(r, n));
            CHECK(std::set<std::vector<int>>(cp.begin(), cp.end()) == expected_cp);
            CHECK(std::set<std::vector<int>>(rp.begin(), rp.end()) == expected_rp);
            CHECK(cp.size() == expected_cp.size());
            CHECK(rp.size() == expected_rp.size());
            CHECK(cp.size() == rp.size());
        }
    }
}

TEST_CASE("|RP| is invariant under permuting the moduli")
{
    const std::vector<std::vector<int>> bases = {{2, 3}, {2, 3, 5}, {3, 4, 5}, {4, 9}};
    for (auto base : bases) {
        std::sort(base.begin(), base.end());
        for (int n = 0; n <= 20; ++n) {
            const auto reference = enumerate_regular(ModulusTuple(base), n).size();
            auto perm = base;
            do {
                CHECK(enumerate_regular(ModulusTuple(perm), n).size() == reference);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
}
