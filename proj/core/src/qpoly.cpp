#include "regpart/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace regpart {

QPoly::QPoly(const Rational& c)
{
    if (!regpart::is_zero(c)) {
        coeffs_.push_back(c);
    }
}

QPoly::QPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs)
{
    trim();
}

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

QPoly QPoly::monomial(const Rational& c, std::size_t k)
{
    if (regpart::is_zero(c)) {
        return {};
    }
    std::vector<Rational> coeffs(k + 1, Rational(0));
    coeffs[k] = c;
    return QPoly(std::move(coeffs));
}

void QPoly::trim()
{
    while (!coeffs_.empty() && regpart::is_zero(coeffs_.back())) {
        coeffs_.pop_back();
    }
}

Rational QPoly::coeff(std::size_t k) const
{
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

const Rational& QPoly::leading() const
{
    if (coeffs_.empty()) {
        throw std::domain_error("zero polynomial has no leading coefficient");
    }
    return coeffs_.back();
}

QPoly QPoly::operator-() const
{
    QPoly out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

QPoly& QPoly::operator+=(const QPoly& other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size(), Rational(0));
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size(), Rational(0));
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (regpart::is_zero(a.coeffs_[i])) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& other)
{
    *this = *this * other;
    return *this;
}

QPoly& QPoly::operator*=(const Rational& c)
{
    if (regpart::is_zero(c)) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) {
        x *= c;
    }
    return *this;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& divisor) const
{
    if (divisor.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    std::vector<Rational> rem = coeffs_;
    const std::size_t dsize = divisor.coeffs_.size();
    if (rem.size() < dsize) {
        return {QPoly(), *this};
    }
    std::vector<Rational> quot(rem.size() - dsize + 1, Rational(0));
    const Rational& lead = divisor.coeffs_.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Rational factor = rem[k + dsize - 1] / lead;
        quot[k] = factor;
        if (regpart::is_zero(factor)) {
            continue;
        }
        for (std::size_t i = 0; i < dsize; ++i) {
            rem[k + i] -= factor * divisor.coeffs_[i];
        }
    }
    return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly operator/(const QPoly& a, const QPoly& b)
{
    auto [q, r] = a.divmod(b);
    if (!r.is_zero()) {
        throw std::domain_error("inexact polynomial division");
    }
    return q;
}

QPoly QPoly::pow(unsigned exponent) const
{
    QPoly result(1);
    QPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1u) {
            result *= base;
        }
        exponent >>= 1u;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

QPoly QPoly::monic() const
{
    if (is_zero()) {
        return {};
    }
    return *this * Rational(1 / leading());
}

Rational QPoly::evaluate(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

std::string QPoly::to_string(const std::string& var) const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (regpart::is_zero(c)) {
            continue;
        }
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) {
                out << '-';
            }
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1) {
            out << mag.get_str() << '*';
        }
        out << var;
        if (k > 1) {
            out << '^' << k;
        }
    }
    return out.str();
}

QPoly gcd(QPoly a, QPoly b)
{
    while (!b.is_zero()) {
        QPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ExtendedGcd extended_gcd(const QPoly& a, const QPoly& b)
{
    QPoly r0 = a, r1 = b;
    QPoly s0(1), s1;
    QPoly u0, u1(1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::exchange(r1, std::move(r));
        s0 = std::exchange(s1, s0 - q * s1);
        u0 = std::exchange(u1, u0 - q * u1);
    }
    if (r0.is_zero()) {
        return {QPoly(), QPoly(), QPoly()};
    }
    const Rational scale = 1 / r0.leading();
    return {r0 * scale, s0 * scale, u0 * scale};
}

RationalFunction::RationalFunction(QPoly num, QPoly den)
{
    if (den.is_zero()) {
        throw std::domain_error("rational function with zero denominator");
    }
    if (num.is_zero()) {
        num_ = QPoly();
        den_ = QPoly(1);
        return;
    }
    const QPoly g = gcd(num, den);
    num = num / g;
    den = den / g;
    const Rational scale = 1 / den.leading();
    num_ = num * scale;
    den_ = den * scale;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
{
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b)
{
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
{
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
{
    if (b.is_zero()) {
        throw std::domain_error("division by zero rational function");
    }
    return {a.num_ * b.den_, a.den_ * b.num_};
}

std::string RationalFunction::to_string(const std::string& var) const
{
    if (is_polynomial()) {
        return num_.to_string(var);
    }
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

} // namespace regpart
