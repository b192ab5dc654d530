#pragma once

#include "regpart/numeric.hpp"
#include "regpart/qpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace regpart {

/// The r-th cyclotomic polynomial, built by dividing x^r - 1 by every
/// Phi_d with d a proper divisor of r. Memoized; safe to call concurrently.
const QPoly& cyclotomic_polynomial(int r);

int euler_phi(int r);

/// An element of Q(zeta_r), zeta a primitive r-th root of unity.
///
/// Stored as a rational polynomial in zeta of degree < phi(r), reduced modulo
/// the r-th cyclotomic polynomial, so equality is coefficientwise. Operands of
/// a binary operation must share the same order.
class CyclotomicNumber {
public:
    explicit CyclotomicNumber(int order, const Rational& value = 0);
    CyclotomicNumber(int order, const QPoly& poly);

    static CyclotomicNumber zero(int order) { return CyclotomicNumber(order); }
    static CyclotomicNumber one(int order) { return CyclotomicNumber(order, Rational(1)); }
    /// zeta^k for any integer k.
    static CyclotomicNumber zeta(int order, long long k = 1);

    int order() const noexcept { return order_; }
    const QPoly& polynomial() const noexcept { return value_; }
    /// The phi(r) coefficients of 1, zeta, ..., zeta^{phi(r)-1}.
    std::vector<Rational> coefficients() const;
    bool is_zero() const noexcept { return value_.is_zero(); }

    CyclotomicNumber operator-() const;
    CyclotomicNumber& operator+=(const CyclotomicNumber& other);
    CyclotomicNumber& operator-=(const CyclotomicNumber& other);
    CyclotomicNumber& operator*=(const CyclotomicNumber& other);
    CyclotomicNumber& operator/=(const CyclotomicNumber& other);

    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
    friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
    friend CyclotomicNumber operator+(CyclotomicNumber a, const Rational& c);
    friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& c);
    friend bool operator==(const CyclotomicNumber&, const CyclotomicNumber&) = default;

    /// Multiplicative inverse by the extended Euclidean algorithm.
    /// Throws std::domain_error for zero.
    CyclotomicNumber inverse() const;
    /// Integer powers; negative exponents invert.
    CyclotomicNumber pow(long long exponent) const;
    /// Complex conjugation zeta -> zeta^{r-1}.
    CyclotomicNumber conjugate() const;
    bool is_real() const;
    /// The rational value if this element lies in Q.
    std::optional<Rational> as_rational() const;

    /// "a0 + a1*zeta + a2*zeta^2" rendering.
    std::string to_string() const;

private:
    void require_same_order(const CyclotomicNumber& other) const;

    int order_;
    QPoly value_;
};

inline bool is_zero(const CyclotomicNumber& x) { return x.is_zero(); }

/// (a;t)_n = (1-a)(1-at)...(1-at^{n-1}); 1 for n = 0.
CyclotomicNumber t_shifted_factorial(const CyclotomicNumber& a, const CyclotomicNumber& t, int n);

/// Evaluates a t-polynomial at zeta_r.
CyclotomicNumber evaluate_at_root(const QPoly& p, int order);

} // namespace regpart
