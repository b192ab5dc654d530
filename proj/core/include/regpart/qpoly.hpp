#pragma once

#include "regpart/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace regpart {

/// Univariate polynomial with rational coefficients, constant term first.
///
/// Always trimmed: the zero polynomial has no coefficients. Serves both as the
/// t-polynomials of the symmetric-function layer and as the representation
/// ring behind CyclotomicNumber.
class QPoly {
public:
    QPoly() = default;
    QPoly(long c) : QPoly(Rational(c)) {}
    QPoly(const Rational& c);
    QPoly(std::initializer_list<Rational> coeffs);
    explicit QPoly(std::vector<Rational> coeffs);

    /// c * t^k
    static QPoly monomial(const Rational& c, std::size_t k);

    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Coefficient of t^k (zero beyond the degree).
    Rational coeff(std::size_t k) const;
    const Rational& leading() const;

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& other);
    QPoly& operator-=(const QPoly& other);
    QPoly& operator*=(const QPoly& other);
    QPoly& operator*=(const Rational& c);

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(QPoly a, const Rational& c) { return a *= c; }
    /// Exact division; throws std::domain_error when the remainder is nonzero.
    friend QPoly operator/(const QPoly& a, const QPoly& b);
    friend bool operator==(const QPoly&, const QPoly&) = default;

    /// Euclidean division: {quotient, remainder}. Throws on a zero divisor.
    std::pair<QPoly, QPoly> divmod(const QPoly& divisor) const;
    QPoly pow(unsigned exponent) const;
    /// Scales to a monic polynomial (zero stays zero).
    QPoly monic() const;

    /// Horner evaluation in any ring that accepts rational scalars.
    template <typename T>
    T evaluate(const T& x, const T& zero) const
    {
        T acc = zero;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }
    Rational evaluate(const Rational& x) const;

    /// "1 + 2*t - 1/2*t^3" style rendering.
    std::string to_string(const std::string& var = "t") const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

inline bool is_zero(const QPoly& p) { return p.is_zero(); }

/// Monic greatest common divisor.
QPoly gcd(QPoly a, QPoly b);

/// {g, s, u} with s*a + u*b = g = gcd(a, b) (monic).
struct ExtendedGcd {
    QPoly g;
    QPoly s;
    QPoly u;
};
ExtendedGcd extended_gcd(const QPoly& a, const QPoly& b);

/// Quotient of two t-polynomials kept in lowest terms with a monic denominator.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(QPoly num) : num_(std::move(num)), den_(1) {}
    RationalFunction(QPoly num, QPoly den);

    const QPoly& numerator() const noexcept { return num_; }
    const QPoly& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    /// True when the denominator is 1.
    bool is_polynomial() const { return den_ == QPoly(1); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    std::string to_string(const std::string& var = "t") const;

private:
    QPoly num_;
    QPoly den_;
};

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }

} // namespace regpart
