#pragma once

#include "regpart/numeric.hpp"
#include "regpart/partition.hpp"

#include <vector>

namespace regpart {

/// Power series in q with exact rational coefficients c_0..c_N.
///
/// All arithmetic is exact on the retained degrees; binary operations require
/// equal truncation degrees.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int degree);
    TruncatedSeries(int degree, std::vector<Rational> coeffs);

    static TruncatedSeries one(int degree);
    /// c q^k (zero if k exceeds the degree).
    static TruncatedSeries monomial(int degree, int k, const Rational& c = 1);
    /// 1 - q^k, k >= 1.
    static TruncatedSeries one_minus(int degree, int k);
    /// 1 / (1 - q^k) = sum_{m>=0} q^{km}, k >= 1.
    static TruncatedSeries geometric(int degree, int k);
    /// q^k / (1 - q^k) = sum_{m>=1} q^{km}, k >= 1.
    static TruncatedSeries lambert(int degree, int k);

    int degree() const noexcept { return degree_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const Rational& operator[](int n) const;
    /// Coefficient of q^n as an integer; throws std::domain_error if it is not one.
    Integer integer_coefficient(int n) const;
    std::vector<Integer> integer_coefficients() const;

    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& other);
    TruncatedSeries& operator-=(const TruncatedSeries& other);
    TruncatedSeries& operator*=(const Rational& c);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    /// Multiplicative inverse; requires a nonzero constant term.
    TruncatedSeries inverse() const;

    /// In-place multiplication by (1 - q^k) in O(N).
    TruncatedSeries& multiply_one_minus(int k);
    /// In-place division by (1 - q^k) in O(N).
    TruncatedSeries& divide_one_minus(int k);

private:
    void require_same_degree(const TruncatedSeries& other) const;

    int degree_;
    std::vector<Rational> coeffs_;
};

/// Product over n not divisible by any modulus of 1/(1-q^n): counts CP_{r,n}.
TruncatedSeries phi(const ModulusTuple& moduli, int degree);
/// Same series through the alternating products pi_k(q^n) of subset products.
TruncatedSeries phi_alternating(const ModulusTuple& moduli, int degree);

/// Generating function of V_{r,j,n}; j must be coprime to every modulus.
TruncatedSeries series_V(const ModulusTuple& moduli, int j, int degree);
/// Generating function of W_{r,j,n} via the inclusion-exclusion closed form.
TruncatedSeries series_W(const ModulusTuple& moduli, int j, int degree);
/// Generating function of c_{r_i,n}; `index` is 1-based.
TruncatedSeries series_c(const ModulusTuple& moduli, int index, int degree);
/// The same generating function through the signed sum over subsets of the
/// other moduli.
TruncatedSeries series_c_alternating(const ModulusTuple& moduli, int index, int degree);
/// Generating function of |RP_{r,n}| from the product of truncated geometric
/// sums and their inverses.
TruncatedSeries series_RP(const ModulusTuple& moduli, int degree);

/// Generating functions of X_{r,j,n} and Y_{r,j,n} (single modulus, 1 <= j < r).
TruncatedSeries series_X(int r, int j, int degree);
TruncatedSeries series_Y(int r, int j, int degree);

} // namespace regpart
