#include "regpart/cli/verify.hpp"

#include "regpart/chartable.hpp"
#include "regpart/glaisher.hpp"
#include "regpart/kostka.hpp"
#include "regpart/series.hpp"
#include "regpart/statistics.hpp"
#include "regpart/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace regpart::cli {

namespace {

Integer integer_power(long base, const Integer& exponent)
{
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), exponent.get_ui());
    return out;
}

class Recorder {
public:
    explicit Recorder(VerifyReport& report) : report_(report) {}

    void check(bool ok, json row, const std::string& what)
    {
        ++report_.checked;
        row["ok"] = ok;
        report_.rows.push_back(std::move(row));
        if (!ok && report_.passed) {
            report_.passed = false;
            report_.counterexample = what;
        }
    }

private:
    VerifyReport& report_;
};

std::string at(int n) { return "n=" + std::to_string(n); }

void thm21(const VerifyParams& p, Recorder& rec)
{
    const auto& r = p.moduli;
    for (int n = p.min_n; n <= p.max_n; ++n) {
        const auto v = table_V(r, n).values;
        const auto w = table_W(r, n).values;
        for (int j = 1; j <= n; ++j) {
            if (!r.coprime_to_all(j)) {
                continue;
            }
            Integer sum = 0;
            for_each_modulus_power(r, n / j, [&](long long q, const std::vector<int>&) {
                sum += w.at(static_cast<int>(q * j));
            });
            rec.check(v.at(j) == sum, {{"n", n}, {"j", j}, {"V", v.at(j)}, {"sum_W", sum}},
                      "V != sum W at " + at(n) + ", j=" + std::to_string(j));
        }
    }
    const int N = p.max_n;
    for (int j = 1; j <= N; ++j) {
        if (!r.coprime_to_all(j)) {
            continue;
        }
        TruncatedSeries sum(N);
        for_each_modulus_power(r, N / j, [&](long long q, const std::vector<int>&) {
            sum += series_W(r, static_cast<int>(q * j), N);
        });
        rec.check(sum == series_V(r, j, N), {{"series_degree", N}, {"j", j}},
                  "series identity fails at j=" + std::to_string(j));
    }
}

void thm22(const VerifyParams& p, Recorder& rec)
{
    const auto& r = p.moduli;
    for (int n = p.min_n; n <= p.max_n; ++n) {
        const Integer a = stat_a(r, n);
        const Integer b = stat_b(r, n);
        Integer factor = 1;
        json cs = json::array();
        for (std::size_t i = 0; i < r.size(); ++i) {
            const Integer c = stat_c(r, static_cast<int>(i) + 1, n);
            cs.push_back(c);
            factor *= integer_power(r[i], c);
        }
        rec.check(b == factor * a, {{"n", n}, {"a", a}, {"b", b}, {"c", cs}}, "b != prod r^c a at " + at(n));
    }
}

void thm23(const VerifyParams& p, Recorder& rec)
{
    const auto& r = p.moduli;
    for (std::size_t i = 1; i <= r.size(); ++i) {
        const int index = static_cast<int>(i);
        const auto series = series_c(r, index, p.max_n);
        const auto alternating = series_c_alternating(r, index, p.max_n);
        for (int n = p.min_n; n <= p.max_n; ++n) {
            const Integer direct = stat_c(r, index, n);
            const Integer coeff = series.integer_coefficient(n);
            rec.check(direct == coeff && coeff == alternating.integer_coefficient(n),
                      {{"n", n}, {"index", index}, {"sum", direct}, {"series", coeff}},
                      "c series mismatch at " + at(n) + ", i=" + std::to_string(index));
        }
    }
}

void thm41(const VerifyParams& p, Recorder& rec)
{
    for (int n = p.min_n; n <= p.max_n; ++n) {
        const Integer c = stat_c(ModulusTuple{p.r}, 1, n);
        for (int j = 1; j < p.r; ++j) {
            const Integer x = stat_X(p.r, j, n);
            const Integer y = stat_Y(p.r, j, n);
            rec.check(x - y == c, {{"n", n}, {"j", j}, {"X", x}, {"Y", y}, {"c", c}},
                      "X - Y != c at " + at(n) + ", j=" + std::to_string(j));
        }
    }
}

void prop31(const VerifyParams& p, Recorder& rec)
{
    auto base = p.moduli.moduli();
    std::sort(base.begin(), base.end());
    for (int n = p.min_n; n <= p.max_n; ++n) {
        const auto reference = enumerate_class_regular(p.moduli, n).size();
        auto perm = base;
        bool ok = true;
        do {
            ok = ok && enumerate_regular(ModulusTuple(perm), n).size() == reference;
        } while (std::next_permutation(perm.begin(), perm.end()));
        rec.check(ok, {{"n", n}, {"count", reference}}, "|RP| depends on the order at " + at(n));
    }
}

void prop32(const VerifyParams& p, Recorder& rec)
{
    for (int n = p.min_n; n <= p.max_n; ++n) {
        const auto c = c_three_ways(p.moduli, n);
        rec.check(c.agree(), {{"n", n}, {"sum", c.weighted_w_sum}, {"series", c.series}, {"glaisher", c.glaisher}},
                  "Glaisher step total differs from c at " + at(n));
    }
}

void lem44(const VerifyParams& p, Recorder& rec)
{
    const ModulusTuple modulus{p.r};
    for (int n = std::max(p.min_n, 1); n <= p.max_n; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) {
            const bool vanishes = qprime_reduced_at_root(lambda, p.r).is_zero();
            const bool regular = is_regular(lambda, modulus);
            rec.check(vanishes != regular, {{"n", n}, {"lambda", lambda}, {"regular", regular}, {"vanishes", vanishes}},
                      "reduced Q' misbehaves at " + lambda.to_string());
        }
    }
}

void prop45(const VerifyParams& p, Recorder& rec)
{
    const ModulusTuple modulus{p.r};
    const int r = p.r;
    for (int n = std::max(p.min_n, 1); n <= p.max_n; ++n) {
        const auto cp = enumerate_class_regular(modulus, n);
        for (const auto& lambda : enumerate_regular(modulus, n)) {
            const auto q = specialize_t(hl_Q(lambda), r);
            const auto qp = qprime_reduced_at_root(lambda, r);
            bool ok = true;
            for (const auto& rho : cp) {
                auto factor = CyclotomicNumber::one(r);
                for (int part : rho.parts()) {
                    factor *= CyclotomicNumber::one(r) - CyclotomicNumber::zeta(r, part);
                }
                const auto zero = CyclotomicNumber::zero(r);
                ok = ok && qp.coefficient(rho, zero) * factor == q.coefficient(rho, zero);
            }
            rec.check(ok, {{"n", n}, {"lambda", lambda}}, "coefficient relation fails at " + lambda.to_string());
        }
    }
}

void prop43(const VerifyParams& p, Recorder& rec)
{
    const int r = p.r;
    for (int n = std::max(p.min_n, 1); n <= p.max_n; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) {
            for (const auto& [i, m] : lambda.multiplicities()) {
                if (m < r) {
                    continue;
                }
                const auto full = specialize_t(hl_Qprime(lambda), r);
                const auto rest = specialize_t(hl_Qprime(lambda.remove_parts(i, r)), r);
                const auto h = lift_to_root(plethysm_pr(complete_h(i), r), r);
                const long sign = (static_cast<long>(i) * (r - 1)) % 2 == 0 ? 1 : -1;
                rec.check(full == rest * h * CyclotomicNumber(r, Rational(sign)),
                          {{"n", n}, {"lambda", lambda}, {"i", i}},
                          "factorization fails at " + lambda.to_string() + ", i=" + std::to_string(i));
            }
        }
    }
}

void prop48(const VerifyParams& p, Recorder& rec)
{
    const int r = p.r;
    const ModulusTuple modulus{r};
    for (int n = std::max(p.min_n, 1); n <= p.max_n; ++n) {
        const auto all = enumerate_partitions(n);
        const auto rp = enumerate_regular(modulus, n);
        const auto& kinv = inverse_kostka_foulkes_matrix(n);
        auto index = [&](const Partition& x) {
            return static_cast<std::size_t>(std::find(all.begin(), all.end(), x) - all.begin());
        };
        for (const auto& lambda : all) {
            SymFunc<CyclotomicNumber> sum(n);
            for (const auto& mu : rp) {
                sum += qprime_reduced_at_root(mu, r) * evaluate_at_root(kinv(index(mu), index(lambda)), r);
            }
            rec.check(schur_reduced_at_root(lambda, r) == sum, {{"n", n}, {"lambda", lambda}},
                      "reduced Schur expansion fails at " + lambda.to_string());
        }
        const auto m = transition_matrix(ReducedFamily::schur, ReducedFamily::qprime, n, r);
        rec.check(is_lower_unitriangular(m.entries, CyclotomicNumber::one(r)), {{"n", n}, {"lower_unitriangular", true}},
                  "M(s, Q') is not lower unitriangular at " + at(n));
    }
}

void thm49(const VerifyParams& p, Recorder& rec)
{
    for (int n = std::max(p.min_n, 1); n <= p.max_n; ++n) {
        const auto report = verify_qprime_determinant(p.r, n);
        json row = {{"n", n}, {"c", report.c.weighted_w_sum}, {"predicted_magnitude", report.predicted_magnitude},
                    {"is_real", report.is_real}};
        row["determinant"] = report.rational_value ? json(*report.rational_value) : json(report.determinant);
        rec.check(report.holds, row, "determinant mismatch at " + at(n));
    }
}

void thm410(const VerifyParams& p, Recorder& rec)
{
    for (int n = p.min_n; n <= p.max_n; ++n) {
        const auto report = verify_olsson(p.r, n);
        rec.check(report.holds, {{"n", n}, {"determinant", report.determinant}, {"predicted", report.predicted_magnitude}},
                  "regular table determinant mismatch at " + at(n));
        const auto ordinary = verify_ordinary_determinant(n);
        rec.check(ordinary.holds,
                  {{"n", n}, {"ordinary_determinant", ordinary.determinant}, {"predicted_square", ordinary.predicted_square}},
                  "ordinary table determinant mismatch at " + at(n));
    }
}

void detchain(const VerifyParams& p, Recorder& rec)
{
    for (int n = std::max(p.min_n, 1); n <= p.max_n; ++n) {
        const auto report = verify_detchain(p.r, n);
        rec.check(report.holds(),
                  {{"n", n},
                   {"det_table", report.det_table},
                   {"det_s_qprime", report.det_s_qprime},
                   {"det_qprime_p", report.det_qprime_p},
                   {"det_s_p", report.det_s_p}},
                  "determinant chain breaks at " + at(n));
    }
}

using Suite = std::function<void(const VerifyParams&, Recorder&)>;

const std::map<std::string, Suite>& suites()
{
    static const std::map<std::string, Suite> table = {
        {"thm21", thm21},   {"thm22", thm22}, {"thm23", thm23}, {"thm41", thm41},   {"prop31", prop31},
        {"prop32", prop32}, {"lem44", lem44}, {"prop45", prop45}, {"prop43", prop43}, {"prop48", prop48},
        {"thm49", thm49},   {"thm410", thm410}, {"detchain", detchain}};
    return table;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : suites()) {
            out.push_back(name);
        }
        return out;
    }();
    return names;
}

VerifyReport run_suite(const std::string& suite, const VerifyParams& params)
{
    auto it = suites().find(suite);
    if (it == suites().end()) {
        throw std::invalid_argument("unknown suite: " + suite);
    }
    VerifyReport report;
    report.suite = suite;
    report.params = {{"moduli", params.moduli}, {"r", params.r}, {"min_n", params.min_n}, {"max_n", params.max_n}};
    Recorder rec(report);
    it->second(params, rec);
    return report;
}

} // namespace regpart::cli
