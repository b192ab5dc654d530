#include "regpart/symfunc.hpp"

#include "regpart/characters.hpp"
#include "regpart/kostka.hpp"

#include <stdexcept>

namespace regpart {

Integer z_factor(const Partition& rho)
{
    Integer z = 1;
    for (const auto& [part, mult] : rho.multiplicities()) {
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(mult));
        z *= power * factorial(static_cast<unsigned long>(mult));
    }
    return z;
}

RationalFunction z_factor_t(const Partition& rho)
{
    QPoly den(1);
    for (int part : rho.parts()) {
        den *= QPoly(1) - QPoly::monomial(1, static_cast<std::size_t>(part));
    }
    return RationalFunction(QPoly(Rational(z_factor(rho))), den);
}

CyclotomicNumber z_factor_at_root(const Partition& rho, int r)
{
    auto den = CyclotomicNumber::one(r);
    for (int part : rho.parts()) {
        if (part % r == 0) {
            throw std::domain_error("z_rho(zeta) has a pole: part " + std::to_string(part) +
                                    " of " + rho.to_string() + " is divisible by " + std::to_string(r));
        }
        den *= CyclotomicNumber::one(r) - CyclotomicNumber::zeta(r, part);
    }
    return CyclotomicNumber(r, Rational(z_factor(rho))) / den;
}

SymFunc<Rational> power_sum(const Partition& rho)
{
    SymFunc<Rational> f(rho.weight());
    f.add_term(rho, 1);
    return f;
}

SymFunc<Rational> schur_in_p(const Partition& lambda)
{
    SymFunc<Rational> f(lambda.weight());
    for (const auto& rho : enumerate_partitions(lambda.weight())) {
        const auto chi = mn_character(lambda, rho);
        if (chi != 0) {
            f.add_term(rho, make_rational(static_cast<long>(chi), z_factor(rho)));
        }
    }
    return f;
}

SymFunc<Rational> complete_h(int n)
{
    SymFunc<Rational> f(n);
    for (const auto& rho : enumerate_partitions(n)) {
        f.add_term(rho, make_rational(1, z_factor(rho)));
    }
    return f;
}

SymFunc<Rational> elementary_e(int n)
{
    SymFunc<Rational> f(n);
    for (const auto& rho : enumerate_partitions(n)) {
        const int sign = (n - static_cast<int>(rho.length())) % 2 == 0 ? 1 : -1;
        f.add_term(rho, make_rational(sign, z_factor(rho)));
    }
    return f;
}

SymFunc<QPoly> lift_to_t(const SymFunc<Rational>& f)
{
    return f.map_coefficients([](const Rational& c) { return QPoly(c); });
}

SymFunc<CyclotomicNumber> lift_to_root(const SymFunc<Rational>& f, int r)
{
    return f.map_coefficients([r](const Rational& c) { return CyclotomicNumber(r, c); });
}

QPoly b_lambda(const Partition& lambda)
{
    QPoly result(1);
    for (const auto& [part, mult] : lambda.multiplicities()) {
        for (int i = 1; i <= mult; ++i) {
            result *= QPoly(1) - QPoly::monomial(1, static_cast<std::size_t>(i));
        }
    }
    return result;
}

namespace {

std::size_t index_of(const std::vector<Partition>& partitions, const Partition& lambda)
{
    for (std::size_t i = 0; i < partitions.size(); ++i) {
        if (partitions[i] == lambda) {
            return i;
        }
    }
    throw std::invalid_argument("partition not found: " + lambda.to_string());
}

} // namespace

SymFunc<QPoly> hl_Qprime(const Partition& mu)
{
    const int n = mu.weight();
    const auto partitions = enumerate_partitions(n);
    const auto& k = kostka_foulkes_matrix(n);
    const std::size_t col = index_of(partitions, mu);
    SymFunc<QPoly> out(n);
    for (std::size_t row = 0; row < partitions.size(); ++row) {
        if (!k(row, col).is_zero()) {
            out += lift_to_t(schur_in_p(partitions[row])) * k(row, col);
        }
    }
    return out;
}

SymFunc<QPoly> hl_P(const Partition& lambda)
{
    const int n = lambda.weight();
    const auto partitions = enumerate_partitions(n);
    const auto& kinv = inverse_kostka_foulkes_matrix(n);
    const std::size_t row = index_of(partitions, lambda);
    SymFunc<QPoly> out(n);
    for (std::size_t col = 0; col < partitions.size(); ++col) {
        if (!kinv(row, col).is_zero()) {
            out += lift_to_t(schur_in_p(partitions[col])) * kinv(row, col);
        }
    }
    return out;
}

SymFunc<QPoly> hl_Q(const Partition& lambda)
{
    return hl_P(lambda) * b_lambda(lambda);
}

SymFunc<CyclotomicNumber> specialize_t(const SymFunc<QPoly>& f, int r)
{
    return f.map_coefficients([r](const QPoly& c) { return evaluate_at_root(c, r); });
}

RationalFunction hall_inner_generic(const SymFunc<QPoly>& f, const SymFunc<QPoly>& g)
{
    if (f.degree() != g.degree()) {
        throw std::invalid_argument("inner product of different degrees");
    }
    RationalFunction acc;
    for (const auto& [rho, a] : f.terms()) {
        auto it = g.terms().find(rho);
        if (it != g.terms().end()) {
            acc = acc + RationalFunction(a * it->second) * z_factor_t(rho);
        }
    }
    return acc;
}

CyclotomicNumber hall_inner_root(const SymFunc<CyclotomicNumber>& f, const SymFunc<CyclotomicNumber>& g)
{
    if (f.degree() != g.degree()) {
        throw std::invalid_argument("inner product of different degrees");
    }
    if (f.is_zero() || g.is_zero()) {
        throw std::invalid_argument("hall_inner_root needs nonzero operands to fix the field order");
    }
    const int r = f.terms().begin()->second.order();
    auto acc = CyclotomicNumber::zero(r);
    for (const auto& [rho, a] : f.terms()) {
        auto it = g.terms().find(rho);
        if (it != g.terms().end()) {
            acc += a * it->second * z_factor_at_root(rho, r);
        }
    }
    return acc;
}

std::string to_string(ReducedFamily family)
{
    switch (family) {
    case ReducedFamily::schur: return "s";
    case ReducedFamily::qprime: return "qprime";
    case ReducedFamily::power_sum: return "p";
    }
    return "?";
}

SymFunc<CyclotomicNumber> qprime_reduced_at_root(const Partition& mu, int r)
{
    return r_reduce(specialize_t(hl_Qprime(mu), r), r);
}

SymFunc<CyclotomicNumber> schur_reduced_at_root(const Partition& lambda, int r)
{
    return r_reduce(lift_to_root(schur_in_p(lambda), r), r);
}

std::vector<Partition> family_index(ReducedFamily family, int n, int r)
{
    const ModulusTuple modulus{r};
    return family == ReducedFamily::power_sum ? enumerate_class_regular(modulus, n)
                                              : enumerate_regular(modulus, n);
}

TransitionMatrix expansion_in_power_sums(ReducedFamily family, int n, int r)
{
    auto rows = family_index(family, n, r);
    auto cols = enumerate_class_regular(ModulusTuple{r}, n);
    const auto zero = CyclotomicNumber::zero(r);
    Matrix<CyclotomicNumber> entries(rows.size(), cols.size(), zero);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        SymFunc<CyclotomicNumber> f(n);
        switch (family) {
        case ReducedFamily::schur: f = schur_reduced_at_root(rows[i], r); break;
        case ReducedFamily::qprime: f = qprime_reduced_at_root(rows[i], r); break;
        case ReducedFamily::power_sum: f = lift_to_root(power_sum(rows[i]), r); break;
        }
        for (std::size_t j = 0; j < cols.size(); ++j) {
            entries(i, j) = f.coefficient(cols[j], zero);
        }
    }
    return {std::move(rows), std::move(cols), std::move(entries)};
}

TransitionMatrix transition_matrix(ReducedFamily u, ReducedFamily v, int n, int r)
{
    auto a_u = expansion_in_power_sums(u, n, r);
    auto a_v = expansion_in_power_sums(v, n, r);
    const auto zero = CyclotomicNumber::zero(r);
    const auto one = CyclotomicNumber::one(r);
    auto entries = multiply(a_u.entries, inverse(a_v.entries, zero, one), zero);
    return {std::move(a_u.rows), std::move(a_v.rows), std::move(entries)};
}

std::vector<CyclotomicNumber> coordinates_in_reduced_qprime(const SymFunc<CyclotomicNumber>& f, int r)
{
    const int n = f.degree();
    auto basis = expansion_in_power_sums(ReducedFamily::qprime, n, r);
    const auto zero = CyclotomicNumber::zero(r);
    const auto one = CyclotomicNumber::one(r);
    for (const auto& [rho, c] : f.terms()) {
        if (!is_class_regular(rho, ModulusTuple{r})) {
            throw std::invalid_argument("element is not in the reduced subspace: p" + rho.to_string());
        }
    }
    Matrix<CyclotomicNumber> row(1, basis.cols.size(), zero);
    for (std::size_t j = 0; j < basis.cols.size(); ++j) {
        row(0, j) = f.coefficient(basis.cols[j], zero);
    }
    auto coords = multiply(row, inverse(basis.entries, zero, one), zero);
    std::vector<CyclotomicNumber> out;
    for (std::size_t j = 0; j < coords.cols(); ++j) {
        out.push_back(coords(0, j));
    }
    return out;
}

CyclotomicNumber det_exact(const TransitionMatrix& m)
{
    if (m.rows.size() != m.cols.size()) {
        throw std::invalid_argument("determinant of a non-square transition matrix");
    }
    if (m.rows.empty()) {
        throw std::invalid_argument("empty transition matrix has no field order");
    }
    return determinant(m.entries, CyclotomicNumber::one(m.entries(0, 0).order()));
}

} // namespace regpart
