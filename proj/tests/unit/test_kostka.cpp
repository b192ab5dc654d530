#include "doctest.h"

#include "oracles.hpp"
#include "regpart/kostka.hpp"

using namespace regpart;

namespace {

QPoly t_power(int k) { return QPoly::monomial(1, static_cast<std::size_t>(k)); }

// sum_i (i-1) mu_i
int n_of(const Partition& mu)
{
    int total = 0;
    for (std::size_t i = 0; i < mu.length(); ++i) {
        total += static_cast<int>(i) * mu[i];
    }
    return total;
}

QPoly t_integer(int k)
{
    QPoly out;
    for (int i = 0; i < k; ++i) {
        out += t_power(i);
    }
    return out;
}

// t^{n(lambda')} [n]_t! / prod over cells [h]_t
QPoly fake_degree(const Partition& lambda)
{
    QPoly num = t_power(n_of(lambda.conjugate()));
    for (int i = 1; i <= lambda.weight(); ++i) {
        num *= t_integer(i);
    }
    QPoly den(1);
    for (int h : oracle::hook_lengths(lambda.parts())) {
        den *= t_integer(h);
    }
    return num / den;
}

} // namespace

TEST_CASE("charge of small words")
{
    CHECK(charge({1, 2, 3}) == 3);
    CHECK(charge({3, 2, 1}) == 0);
    CHECK(charge({2, 1, 3}) == 1);
    CHECK(charge({2, 1, 1, 2}) == 1);
    CHECK(charge({}) == 0);
    CHECK_THROWS_AS(charge({2}), std::invalid_argument);
    CHECK_THROWS_AS(charge({1, 2, 2}), std::invalid_argument);
}

TEST_CASE("tableaux and reading words")
{
    const auto tabs = semistandard_tableaux(Partition{3, 1}, Partition{2, 2});
    REQUIRE(tabs.size() == 1);
    CHECK(tabs[0] == Tableau{{1, 1, 2}, {2}});
    CHECK(reading_word(tabs[0]) == std::vector<int>{2, 1, 1, 2});
    CHECK(semistandard_tableaux(Partition{2, 2}, Partition{3, 1}).empty());
    CHECK(semistandard_tableaux(Partition{2, 1}, Partition{1, 1, 1}).size() == 2);
}

TEST_CASE("known Kostka-Foulkes polynomials")
{
    const QPoly t = t_power(1);
    CHECK(kostka_foulkes(Partition{2}, Partition{1, 1}) == t);
    CHECK(kostka_foulkes(Partition{1, 1}, Partition{1, 1}) == QPoly(1));
    CHECK(kostka_foulkes(Partition{3, 1}, Partition{2, 1, 1}) == t + t * t);
    CHECK(kostka_foulkes(Partition{3, 1}, Partition{2, 2}) == t);
    CHECK(kostka_foulkes(Partition{2, 2}, Partition{2, 1, 1}) == t);
    CHECK(kostka_foulkes(Partition{2, 1}, Partition{1, 1, 1}) == t + t * t);
    CHECK(kostka_foulkes(Partition{2, 2}, Partition{3, 1}) == QPoly());
    CHECK_THROWS_AS(kostka_foulkes(Partition{2}, Partition{1}), std::invalid_argument);
}

TEST_CASE("standard content gives the fake degree")
{
    for (int n = 1; n <= 7; ++n) {
        const Partition ones = Partition::from_multiplicities({{1, n}});
        for (const auto& lambda : enumerate_partitions(n)) {
            CHECK(kostka_foulkes(lambda, ones) == fake_degree(lambda));
        }
    }
}

TEST_CASE("K(1) counts tableaux")
{
    for (int n = 0; n <= 6; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) {
            for (const auto& mu : enumerate_partitions(n)) {
                const Rational at_one = kostka_foulkes(lambda, mu).evaluate(Rational(1));
                CHECK(at_one == oracle::kostka_number_brute(lambda.parts(), mu.parts()));
            }
        }
    }
}

TEST_CASE("structure of the Kostka-Foulkes matrix")
{
    for (int n = 1; n <= 7; ++n) {
        const auto all = enumerate_partitions(n);
        const auto& k = kostka_foulkes_matrix(n);
        CHECK(is_upper_unitriangular(k, QPoly(1)));
        for (std::size_t i = 0; i < all.size(); ++i) {
            for (std::size_t j = 0; j < all.size(); ++j) {
                const QPoly& entry = k(i, j);
                CHECK(entry == kostka_foulkes(all[i], all[j]));
                if (!dominates(all[i], all[j])) {
                    CHECK(entry.is_zero());
                    continue;
                }
                for (const auto& c : entry.coeffs()) {
                    CHECK(c >= 0);
                }
                // monic of degree n(mu) - n(lambda)
                CHECK(entry.degree() == n_of(all[j]) - n_of(all[i]));
                CHECK(entry.leading() == 1);
            }
            CHECK(k(0, i) == t_power(n_of(all[i])));
        }
        const auto& inv = inverse_kostka_foulkes_matrix(n);
        CHECK(multiply(k, inv, QPoly()) == Matrix<QPoly>::identity(all.size(), QPoly(), QPoly(1)));
    }
}
