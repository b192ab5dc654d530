#include "regpart/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace regpart {

const QPoly& cyclotomic_polynomial(int r)
{
    if (r < 1) {
        throw std::invalid_argument("cyclotomic polynomial order must be positive");
    }
    static std::mutex mutex;
    static std::map<int, QPoly> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(r); it != cache.end()) {
            return it->second;
        }
    }
    QPoly poly = QPoly::monomial(1, static_cast<std::size_t>(r)) - QPoly(1);
    for (int d = 1; d < r; ++d) {
        if (r % d == 0) {
            poly = poly / cyclotomic_polynomial(d);
        }
    }
    std::lock_guard lock(mutex);
    // std::map never invalidates references, so concurrent first calls simply
    // agree on the same value.
    return cache.emplace(r, std::move(poly)).first->second;
}

int euler_phi(int r)
{
    if (r < 1) {
        throw std::invalid_argument("euler_phi requires a positive argument");
    }
    int result = r;
    int n = r;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) {
                n /= p;
            }
            result -= result / p;
        }
    }
    if (n > 1) {
        result -= result / n;
    }
    return result;
}

namespace {

void require_order(int order)
{
    if (order < 2) {
        throw std::invalid_argument("cyclotomic order must be at least 2");
    }
}

} // namespace

CyclotomicNumber::CyclotomicNumber(int order, const Rational& value) : order_(order), value_(value)
{
    require_order(order);
}

CyclotomicNumber::CyclotomicNumber(int order, const QPoly& poly) : order_(order)
{
    require_order(order);
    value_ = poly.divmod(cyclotomic_polynomial(order)).second;
}

CyclotomicNumber CyclotomicNumber::zeta(int order, long long k)
{
    require_order(order);
    long long e = k % order;
    if (e < 0) {
        e += order;
    }
    return CyclotomicNumber(order, QPoly::monomial(1, static_cast<std::size_t>(e)));
}

std::vector<Rational> CyclotomicNumber::coefficients() const
{
    std::vector<Rational> out(static_cast<std::size_t>(euler_phi(order_)), Rational(0));
    for (std::size_t i = 0; i < value_.coeffs().size(); ++i) {
        out[i] = value_.coeffs()[i];
    }
    return out;
}

void CyclotomicNumber::require_same_order(const CyclotomicNumber& other) const
{
    if (order_ != other.order_) {
        throw std::invalid_argument("cyclotomic numbers of different orders");
    }
}

CyclotomicNumber CyclotomicNumber::operator-() const
{
    CyclotomicNumber out = *this;
    out.value_ = -out.value_;
    return out;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& other)
{
    require_same_order(other);
    value_ += other.value_;
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& other)
{
    require_same_order(other);
    value_ -= other.value_;
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& other)
{
    require_same_order(other);
    value_ = (value_ * other.value_).divmod(cyclotomic_polynomial(order_)).second;
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& other)
{
    require_same_order(other);
    return *this *= other.inverse();
}

CyclotomicNumber operator+(CyclotomicNumber a, const Rational& c)
{
    a.value_ += QPoly(c);
    return a;
}

CyclotomicNumber operator*(CyclotomicNumber a, const Rational& c)
{
    a.value_ *= c;
    return a;
}

CyclotomicNumber CyclotomicNumber::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("inverse of zero in a cyclotomic field");
    }
    // Phi_r is irreducible, so gcd(value, Phi_r) = 1 and s*value = 1 mod Phi_r.
    const auto eg = extended_gcd(value_, cyclotomic_polynomial(order_));
    if (eg.g != QPoly(1)) {
        throw std::logic_error("cyclotomic polynomial is not coprime to a nonzero residue");
    }
    return CyclotomicNumber(order_, eg.s);
}

CyclotomicNumber CyclotomicNumber::pow(long long exponent) const
{
    CyclotomicNumber base = exponent < 0 ? inverse() : *this;
    unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-exponent)
                                        : static_cast<unsigned long long>(exponent);
    CyclotomicNumber result = one(order_);
    while (e > 0) {
        if (e & 1ull) {
            result *= base;
        }
        e >>= 1ull;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

CyclotomicNumber CyclotomicNumber::conjugate() const
{
    return value_.evaluate(zeta(order_, order_ - 1), zero(order_));
}

bool CyclotomicNumber::is_real() const
{
    return conjugate() == *this;
}

std::optional<Rational> CyclotomicNumber::as_rational() const
{
    if (value_.degree() <= 0) {
        return value_.coeff(0);
    }
    return std::nullopt;
}

std::string CyclotomicNumber::to_string() const
{
    return value_.to_string("zeta");
}

CyclotomicNumber t_shifted_factorial(const CyclotomicNumber& a, const CyclotomicNumber& t, int n)
{
    if (n < 0) {
        throw std::invalid_argument("shifted factorial length must be nonnegative");
    }
    auto result = CyclotomicNumber::one(a.order());
    auto term = a;
    for (int i = 0; i < n; ++i) {
        result *= CyclotomicNumber::one(a.order()) - term;
        term *= t;
    }
    return result;
}

CyclotomicNumber evaluate_at_root(const QPoly& p, int order)
{
    return p.evaluate(CyclotomicNumber::zeta(order), CyclotomicNumber::zero(order));
}

} // namespace regpart
