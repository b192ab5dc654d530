#include "regpart/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace regpart {

namespace {

void require_degree(int degree)
{
    if (degree < 0) {
        throw std::invalid_argument("truncation degree must be nonnegative");
    }
}

// Products of the moduli over every subset, tagged by subset size.
struct SubsetProduct {
    long long product;
    int size;
};

std::vector<SubsetProduct> subset_products(const std::vector<int>& moduli)
{
    std::vector<SubsetProduct> out{{1, 0}};
    for (int r : moduli) {
        const std::size_t count = out.size();
        for (std::size_t i = 0; i < count; ++i) {
            out.push_back({out[i].product * r, out[i].size + 1});
        }
    }
    return out;
}

} // namespace

TruncatedSeries::TruncatedSeries(int degree) : degree_(degree)
{
    require_degree(degree);
    coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(int degree, std::vector<Rational> coeffs) : TruncatedSeries(degree)
{
    for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) {
        coeffs_[i] = std::move(coeffs[i]);
    }
}

TruncatedSeries TruncatedSeries::one(int degree)
{
    return monomial(degree, 0);
}

TruncatedSeries TruncatedSeries::monomial(int degree, int k, const Rational& c)
{
    if (k < 0) {
        throw std::invalid_argument("negative exponent");
    }
    TruncatedSeries s(degree);
    if (k <= degree) {
        s.coeffs_[static_cast<std::size_t>(k)] = c;
    }
    return s;
}

TruncatedSeries TruncatedSeries::one_minus(int degree, int k)
{
    return one(degree).multiply_one_minus(k);
}

TruncatedSeries TruncatedSeries::geometric(int degree, int k)
{
    return one(degree).divide_one_minus(k);
}

TruncatedSeries TruncatedSeries::lambert(int degree, int k)
{
    return monomial(degree, k).divide_one_minus(k);
}

const Rational& TruncatedSeries::operator[](int n) const
{
    if (n < 0 || n > degree_) {
        throw std::out_of_range("series coefficient index beyond truncation degree");
    }
    return coeffs_[static_cast<std::size_t>(n)];
}

Integer TruncatedSeries::integer_coefficient(int n) const
{
    const Rational& c = (*this)[n];
    if (c.get_den() != 1) {
        throw std::domain_error("series coefficient is not an integer: " + c.get_str());
    }
    return c.get_num();
}

std::vector<Integer> TruncatedSeries::integer_coefficients() const
{
    std::vector<Integer> out;
    out.reserve(coeffs_.size());
    for (int n = 0; n <= degree_; ++n) {
        out.push_back(integer_coefficient(n));
    }
    return out;
}

void TruncatedSeries::require_same_degree(const TruncatedSeries& other) const
{
    if (degree_ != other.degree_) {
        throw std::invalid_argument("series truncation degrees differ");
    }
}

TruncatedSeries TruncatedSeries::operator-() const
{
    TruncatedSeries out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other)
{
    require_same_degree(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other)
{
    require_same_degree(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c)
{
    for (auto& x : coeffs_) {
        x *= c;
    }
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    a.require_same_degree(b);
    TruncatedSeries out(a.degree_);
    const std::size_t size = a.coeffs_.size();
    for (std::size_t i = 0; i < size; ++i) {
        if (is_zero(a.coeffs_[i])) {
            continue;
        }
        for (std::size_t j = 0; i + j < size; ++j) {
            if (!is_zero(b.coeffs_[j])) {
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::inverse() const
{
    if (is_zero(coeffs_[0])) {
        throw std::domain_error("series with zero constant term is not invertible");
    }
    TruncatedSeries out(degree_);
    const Rational inv0 = 1 / coeffs_[0];
    out.coeffs_[0] = inv0;
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            if (!is_zero(coeffs_[k])) {
                acc += coeffs_[k] * out.coeffs_[n - k];
            }
        }
        out.coeffs_[n] = -acc * inv0;
    }
    return out;
}

TruncatedSeries& TruncatedSeries::multiply_one_minus(int k)
{
    if (k < 1) {
        throw std::invalid_argument("exponent must be positive");
    }
    for (int n = degree_; n >= k; --n) {
        coeffs_[static_cast<std::size_t>(n)] -= coeffs_[static_cast<std::size_t>(n - k)];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::divide_one_minus(int k)
{
    if (k < 1) {
        throw std::invalid_argument("exponent must be positive");
    }
    for (int n = k; n <= degree_; ++n) {
        coeffs_[static_cast<std::size_t>(n)] += coeffs_[static_cast<std::size_t>(n - k)];
    }
    return *this;
}

TruncatedSeries phi(const ModulusTuple& moduli, int degree)
{
    auto s = TruncatedSeries::one(degree);
    for (int n = 1; n <= degree; ++n) {
        if (moduli.coprime_to_all(n)) {
            s.divide_one_minus(n);
        }
    }
    return s;
}

TruncatedSeries phi_alternating(const ModulusTuple& moduli, int degree)
{
    const auto subsets = subset_products(moduli.moduli());
    auto s = TruncatedSeries::one(degree);
    for (int n = 1; n <= degree; ++n) {
        // pi_odd(q^n) in the numerator, pi_even(q^n) in the denominator.
        auto numerator = TruncatedSeries::one(degree);
        auto denominator = TruncatedSeries::one(degree);
        for (const auto& [product, size] : subsets) {
            if (size == 0 || product * n > degree) {
                continue;
            }
            const auto factor = TruncatedSeries::one_minus(degree, static_cast<int>(product * n));
            if (size % 2 == 1) {
                numerator = numerator * factor;
            } else {
                denominator = denominator * factor;
            }
        }
        denominator = denominator * TruncatedSeries::one_minus(degree, n);
        s = s * numerator * denominator.inverse();
    }
    return s;
}

TruncatedSeries series_V(const ModulusTuple& moduli, int j, int degree)
{
    if (j < 1 || !moduli.coprime_to_all(j)) {
        throw std::invalid_argument("j must be positive and not divisible by any modulus");
    }
    return phi(moduli, degree) * TruncatedSeries::lambert(degree, j);
}

TruncatedSeries series_W(const ModulusTuple& moduli, int j, int degree)
{
    if (j < 1) {
        throw std::invalid_argument("j must be at least 1");
    }
    TruncatedSeries sum(degree);
    for (const auto& [product, size] : subset_products(moduli.moduli())) {
        const long long k = product * j;
        if (k > degree) {
            continue;
        }
        const auto term = TruncatedSeries::lambert(degree, static_cast<int>(k));
        if (size % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return phi(moduli, degree) * sum;
}

namespace {

void require_index(const ModulusTuple& moduli, int index)
{
    if (index < 1 || static_cast<std::size_t>(index) > moduli.size()) {
        throw std::invalid_argument("modulus index out of range");
    }
}

} // namespace

TruncatedSeries series_c(const ModulusTuple& moduli, int index, int degree)
{
    require_index(moduli, index);
    const std::size_t pos = static_cast<std::size_t>(index - 1);
    const int ri = moduli[pos];
    const auto others = moduli.without(pos);
    TruncatedSeries sum(degree);
    for (int n = 1; static_cast<long long>(ri) * n <= degree; ++n) {
        const bool excluded = std::any_of(others.begin(), others.end(), [n](int r) { return n % r == 0; });
        if (!excluded) {
            sum += TruncatedSeries::lambert(degree, ri * n);
        }
    }
    return phi(moduli, degree) * sum;
}

TruncatedSeries series_c_alternating(const ModulusTuple& moduli, int index, int degree)
{
    require_index(moduli, index);
    const std::size_t pos = static_cast<std::size_t>(index - 1);
    const int ri = moduli[pos];
    TruncatedSeries sum(degree);
    for (const auto& [product, size] : subset_products(moduli.without(pos))) {
        const long long step = product * ri;
        for (long long k = step; k <= degree; k += step) {
            const auto term = TruncatedSeries::lambert(degree, static_cast<int>(k));
            if (size % 2 == 0) {
                sum += term;
            } else {
                sum -= term;
            }
        }
    }
    return phi(moduli, degree) * sum;
}

TruncatedSeries series_RP(const ModulusTuple& moduli, int degree)
{
    const int r1 = moduli.first();
    std::vector<int> rest(moduli.moduli().begin() + 1, moduli.moduli().end());
    const auto subsets = subset_products(rest);

    // 1 + x + ... + x^{r1-1} evaluated at x = q^k.
    auto truncated_geometric = [&](long long k) {
        TruncatedSeries g(degree);
        for (long long e = 0; e < r1 && e * k <= degree; ++e) {
            g = g + TruncatedSeries::monomial(degree, static_cast<int>(e * k));
        }
        return g;
    };

    auto s = TruncatedSeries::one(degree);
    for (int n = 1; n <= degree; ++n) {
        for (const auto& [product, size] : subsets) {
            if (product * n > degree) {
                continue;
            }
            const auto g = truncated_geometric(product * n);
            s = size % 2 == 0 ? s * g : s * g.inverse();
        }
    }
    return s;
}

TruncatedSeries series_X(int r, int j, int degree)
{
    if (r < 2 || j < 1 || j >= r) {
        throw std::invalid_argument("series_X requires r >= 2 and 1 <= j < r");
    }
    TruncatedSeries sum(degree);
    for (int part = j; part <= degree; part += r) {
        sum += TruncatedSeries::lambert(degree, part);
    }
    return phi(ModulusTuple{r}, degree) * sum;
}

TruncatedSeries series_Y(int r, int j, int degree)
{
    if (r < 2 || j < 1 || j >= r) {
        throw std::invalid_argument("series_Y requires r >= 2 and 1 <= j < r");
    }
    // (q^{jk} - q^{rk}) / (1 - q^{rk}) summed over k >= 1.
    TruncatedSeries sum(degree);
    for (int k = 1; j * k <= degree; ++k) {
        auto term = TruncatedSeries::monomial(degree, j * k) - TruncatedSeries::monomial(degree, r * k);
        sum += term.divide_one_minus(r * k);
    }
    return phi(ModulusTuple{r}, degree) * sum;
}

} // namespace regpart
