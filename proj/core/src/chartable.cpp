#include "regpart/chartable.hpp"

#include "regpart/characters.hpp"
#include "regpart/glaisher.hpp"
#include "regpart/series.hpp"
#include "regpart/statistics.hpp"
#include "regpart/symfunc.hpp"

#include <stdexcept>

namespace regpart {

namespace {

CharacterTable build_table(int n, std::vector<Partition> rows, std::vector<Partition> cols)
{
    Matrix<Integer> entries(rows.size(), cols.size(), Integer(0));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            entries(i, j) = static_cast<long>(mn_character(rows[i], cols[j]));
        }
    }
    return {n, std::move(rows), std::move(cols), std::move(entries)};
}

Integer integer_power(long base, unsigned long exponent)
{
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), exponent);
    return out;
}

int sign_of(const Rational& x)
{
    return sgn(x);
}

} // namespace

CharacterTable character_table(int n)
{
    if (n < 0) {
        throw std::invalid_argument("n must be nonnegative");
    }
    auto partitions = enumerate_partitions(n);
    return build_table(n, partitions, partitions);
}

CharacterTable regular_character_table(int r, int n)
{
    if (r < 2) {
        throw std::invalid_argument("r must be at least 2");
    }
    const ModulusTuple modulus{r};
    return build_table(n, enumerate_regular(modulus, n), enumerate_class_regular(modulus, n));
}

Integer table_determinant(const CharacterTable& table)
{
    if (table.rows.size() != table.cols.size()) {
        throw std::invalid_argument("character table block is not square");
    }
    return determinant(table.entries, Integer(1));
}

Integer product_of_parts(const std::vector<Partition>& partitions)
{
    Integer product = 1;
    for (const auto& rho : partitions) {
        for (int part : rho.parts()) {
            product *= part;
        }
    }
    return product;
}

CRoutes c_three_ways(const ModulusTuple& moduli, int n)
{
    return {stat_c(moduli, 1, n), series_c(moduli, 1, n).integer_coefficient(n), glaisher_step_total(moduli, n)};
}

OrdinaryDeterminantReport verify_ordinary_determinant(int n)
{
    OrdinaryDeterminantReport report;
    report.n = n;
    const auto table = character_table(n);
    report.determinant = table_determinant(table);
    const Integer a = product_of_parts(table.cols);
    report.predicted_square = a * a;
    report.holds = report.determinant * report.determinant == report.predicted_square;
    return report;
}

OlssonReport verify_olsson(int r, int n)
{
    OlssonReport report;
    report.r = r;
    report.n = n;
    const auto table = regular_character_table(r, n);
    report.determinant = table_determinant(table);
    report.predicted_magnitude = product_of_parts(table.cols);
    report.sign = sgn(report.determinant);
    report.holds = abs(report.determinant) == report.predicted_magnitude;
    return report;
}

QprimeDeterminantReport verify_qprime_determinant(int r, int n)
{
    QprimeDeterminantReport report;
    report.r = r;
    report.n = n;
    const ModulusTuple modulus{r};
    report.c = c_three_ways(modulus, n);
    report.determinant = det_exact(transition_matrix(ReducedFamily::qprime, ReducedFamily::power_sum, n, r));
    report.is_real = report.determinant.is_real();
    report.rational_value = report.determinant.as_rational();
    const Integer denominator = integer_power(r, report.c.weighted_w_sum.get_ui()) *
                                product_of_parts(enumerate_class_regular(modulus, n));
    report.predicted_magnitude = make_rational(1, denominator);
    if (report.rational_value) {
        report.sign = sign_of(*report.rational_value);
        report.holds = report.c.agree() && abs(*report.rational_value) == report.predicted_magnitude;
    }
    return report;
}

DetChainReport verify_detchain(int r, int n)
{
    DetChainReport report;
    report.r = r;
    report.n = n;
    const ModulusTuple modulus{r};
    report.c = c_three_ways(modulus, n);

    const auto m_s_q = transition_matrix(ReducedFamily::schur, ReducedFamily::qprime, n, r);
    const auto m_q_p = transition_matrix(ReducedFamily::qprime, ReducedFamily::power_sum, n, r);
    const auto m_s_p = transition_matrix(ReducedFamily::schur, ReducedFamily::power_sum, n, r);
    report.det_s_qprime = det_exact(m_s_q);
    report.det_qprime_p = det_exact(m_q_p);
    report.det_s_p = det_exact(m_s_p);

    const auto one = CyclotomicNumber::one(r);
    report.s_qprime_square_is_one = report.det_s_qprime * report.det_s_qprime == one;

    const auto cp = enumerate_class_regular(modulus, n);
    const Integer a = product_of_parts(cp);
    const Integer rc = integer_power(r, report.c.weighted_w_sum.get_ui());
    const Rational predicted_square = make_rational(1, rc * rc * a * a);
    report.qprime_p_square_matches =
        report.det_qprime_p * report.det_qprime_p == CyclotomicNumber(r, predicted_square);

    const auto table = regular_character_table(r, n);
    report.det_table = table_determinant(table);
    report.s_p_entries_match_table = m_s_p.rows == table.rows && m_s_p.cols == table.cols;
    report.z_product = 1;
    for (std::size_t j = 0; j < table.cols.size(); ++j) {
        const Integer z = z_factor(table.cols[j]);
        report.z_product *= z;
        for (std::size_t i = 0; i < table.rows.size() && report.s_p_entries_match_table; ++i) {
            const CyclotomicNumber expected(r, make_rational(table.entries(i, j), z));
            report.s_p_entries_match_table = m_s_p.entries(i, j) == expected;
        }
    }

    report.product_rule_holds = report.det_s_p == report.det_s_qprime * report.det_qprime_p;
    const Rational table_square =
        make_rational(report.det_table * report.det_table, report.z_product * report.z_product);
    report.table_relation_holds = report.det_s_p * report.det_s_p == CyclotomicNumber(r, table_square);
    return report;
}

} // namespace regpart
