#include "doctest.h"

#include "oracles.hpp"
#include "regpart/series.hpp"
#include "regpart/statistics.hpp"

#include <random>

using namespace regpart;

namespace {

const std::vector<ModulusTuple>& sweep_tuples()
{
    static const std::vector<ModulusTuple> tuples = {{2},    {3},    {5},       {2, 3},    {2, 5}, {3, 5},
                                                     {3, 4}, {4, 9}, {2, 3, 5}, {5, 3, 2}, {3, 2}};
    return tuples;
}

TruncatedSeries random_series(std::mt19937& rng, int degree, bool unit_constant)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<Rational> c;
    for (int i = 0; i <= degree; ++i) {
        Rational x(num(rng), den(rng));
        x.canonicalize();
        c.push_back(x);
    }
    if (unit_constant && is_zero(c[0])) {
        c[0] = 1;
    }
    return TruncatedSeries(degree, c);
}

} // namespace

TEST_CASE("series arithmetic basics")
{
    const int N = 12;
    for (int k = 1; k <= N + 2; ++k) {
        CHECK(TruncatedSeries::one_minus(N, k) * TruncatedSeries::geometric(N, k) == TruncatedSeries::one(N));
        CHECK(TruncatedSeries::one_minus(N, k).inverse() == TruncatedSeries::geometric(N, k));
    }
    CHECK(TruncatedSeries::lambert(N, 3)[9] == 1);
    CHECK(TruncatedSeries::lambert(N, 3)[10] == 0);
    CHECK(TruncatedSeries::lambert(N, 3)[0] == 0);
    CHECK_THROWS_AS(TruncatedSeries(N) * TruncatedSeries(N + 1), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedSeries(N).inverse(), std::domain_error);
    CHECK_THROWS_AS(TruncatedSeries(-1), std::invalid_argument);
    TruncatedSeries half(3, {Rational(1, 2)});
    CHECK_THROWS_AS(half.integer_coefficient(0), std::domain_error);
}

TEST_CASE("series multiplication is associative and commutative on retained degrees")
{
    std::mt19937 rng(20261019);
    for (int trial = 0; trial < 50; ++trial) {
        const int N = 10;
        auto a = random_series(rng, N, false);
        auto b = random_series(rng, N, false);
        auto c = random_series(rng, N, true);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(c * c.inverse() == TruncatedSeries::one(N));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("phi coefficients")
{
    CHECK(phi(ModulusTuple{2, 3}, 10).integer_coefficient(10) == 4);
    CHECK(phi(ModulusTuple{3}, 7).integer_coefficient(7) == 9);
    for (const auto& r : sweep_tuples()) {
        CHECK(phi(r, 20)[0] == 1);
    }
}

TEST_CASE("phi matches enumeration and the alternating-product form")
{
    for (const auto& r : sweep_tuples()) {
        const int N = 20;
        const auto direct = phi(r, N);
        CHECK(direct == phi_alternating(r, N));
        CHECK(direct == series_RP(r, N));
        for (int n = 0; n <= N; ++n) {
            CHECK(direct.integer_coefficient(n) == enumerate_class_regular(r, n).size());
            CHECK(series_RP(r, N).integer_coefficient(n) == enumerate_regular(r, n).size());
        }
    }
    // p(n) when no constraint binds below N
    const auto p = oracle::partition_numbers(10);
    const auto loose = phi(ModulusTuple{11}, 10);
    for (int n = 0; n <= 10; ++n) {
        CHECK(loose.integer_coefficient(n) == p[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("series_V and series_W at n=10")
{
    const ModulusTuple r{2, 3};
    CHECK(series_V(r, 1, 10).integer_coefficient(10) == 18);
    CHECK(series_V(r, 7, 10).integer_coefficient(10) == 1);
    CHECK(series_W(r, 2, 10).integer_coefficient(10) == 4);
    CHECK(series_W(r, 10, 10).integer_coefficient(10) == 1);
    CHECK_THROWS_AS(series_V(r, 6, 10), std::invalid_argument);
    CHECK_THROWS_AS(series_V(r, 4, 10), std::invalid_argument);
    CHECK_THROWS_AS(series_W(r, 0, 10), std::invalid_argument);
    CHECK(series_W(r, 11, 10) == TruncatedSeries(10));
    // j = N: only the partition (N) contributes
    CHECK(series_V(r, 11, 11).integer_coefficient(11) == 1);
    CHECK(series_V(ModulusTuple{3}, 7, 7).integer_coefficient(7) == 1);
}

TEST_CASE("series_W closed form equals the direct sum over l coprime to the moduli")
{
    for (const auto& r : sweep_tuples()) {
        const int N = 20;
        for (int j = 1; j <= N; ++j) {
            TruncatedSeries direct(N);
            for (int l = 1; l * j <= N; ++l) {
                if (r.coprime_to_all(l)) {
                    direct += TruncatedSeries::monomial(N, l * j);
                }
            }
            CHECK(series_W(r, j, N) == phi(r, N) * direct);
        }
    }
}

TEST_CASE("V and W series coefficients match enumeration")
{
    for (const auto& r : sweep_tuples()) {
        const int N = 20;
        for (int j = 1; j <= N; ++j) {
            const auto w = series_W(r, j, N);
            for (int n = 0; n <= N; ++n) {
                CHECK(w.integer_coefficient(n) == stat_W(r, j, n));
            }
            if (r.coprime_to_all(j)) {
                const auto v = series_V(r, j, N);
                for (int n = 0; n <= N; ++n) {
                    CHECK(v.integer_coefficient(n) == stat_V(r, j, n));
                }
            }
        }
    }
}

TEST_CASE("sum of W series over modulus powers equals the V series")
{
    for (const auto& r : sweep_tuples()) {
        const int N = 20;
        for (int j = 1; j <= N; ++j) {
            if (!r.coprime_to_all(j)) {
                continue;
            }
            TruncatedSeries sum(N);
            for_each_modulus_power(r, N / j, [&](long long p, const std::vector<int>&) {
                sum += series_W(r, static_cast<int>(p * j), N);
            });
            CHECK(sum == series_V(r, j, N));
        }
    }
}

TEST_CASE("series_c reproduces the r=3 coefficients")
{
    const auto c = series_c(ModulusTuple{3}, 1, 10);
    const std::vector<int> expected = {0, 0, 0, 1, 1, 2, 4, 6, 9, 13, 19};
    for (int n = 0; n <= 10; ++n) {
        CHECK(c.integer_coefficient(n) == expected[static_cast<std::size_t>(n)]);
    }
    CHECK_THROWS_AS(series_c(ModulusTuple{3}, 2, 10), std::invalid_argument);
}

TEST_CASE("series_c forms agree with the weighted W sum")
{
    for (const auto& r : sweep_tuples()) {
        const int N = 20;
        for (std::size_t i = 1; i <= r.size(); ++i) {
            const auto c = series_c(r, static_cast<int>(i), N);
            CHECK(c == series_c_alternating(r, static_cast<int>(i), N));
            for (int n = 0; n <= N; ++n) {
                CHECK(c.integer_coefficient(n) == stat_c(r, static_cast<int>(i), n));
            }
        }
    }
}

TEST_CASE("X and Y series match enumeration")
{
    for (int r = 2; r <= 5; ++r) {
        const int N = 15;
        for (int j = 1; j < r; ++j) {
            const auto x = series_X(r, j, N);
            const auto y = series_Y(r, j, N);
            const auto c = series_c(ModulusTuple{r}, 1, N);
            CHECK(x - y == c);
            for (int n = 0; n <= N; ++n) {
                CHECK(x.integer_coefficient(n) == stat_X(r, j, n));
                CHECK(y.integer_coefficient(n) == stat_Y(r, j, n));
            }
        }
    }
}
