#pragma once

#include "regpart/cyclotomic.hpp"
#include "regpart/matrix.hpp"
#include "regpart/numeric.hpp"
#include "regpart/partition.hpp"
#include "regpart/qpoly.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <stdexcept>
#include <vector>

namespace regpart {

/// Homogeneous symmetric function of fixed degree, stored in the power-sum
/// basis as rho -> coefficient of p_rho. Zero coefficients are never stored.
///
/// Coeff is Rational, QPoly (coefficients in Q[t]) or CyclotomicNumber.
template <typename Coeff>
class SymFunc {
public:
    using Terms = std::map<Partition, Coeff, CanonicalOrder>;

    explicit SymFunc(int degree) : degree_(degree)
    {
        if (degree < 0) {
            throw std::invalid_argument("symmetric function degree must be nonnegative");
        }
    }

    int degree() const noexcept { return degree_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Adds c * p_rho.
    void add_term(const Partition& rho, const Coeff& c)
    {
        if (rho.weight() != degree_) {
            throw std::invalid_argument("power-sum index " + rho.to_string() + " has the wrong weight");
        }
        if (regpart::is_zero(c)) {
            return;
        }
        auto it = terms_.find(rho);
        if (it == terms_.end()) {
            terms_.emplace(rho, c);
            return;
        }
        it->second = it->second + c;
        if (regpart::is_zero(it->second)) {
            terms_.erase(it);
        }
    }

    /// Coefficient of p_rho, or `zero` when absent.
    Coeff coefficient(const Partition& rho, const Coeff& zero) const
    {
        auto it = terms_.find(rho);
        return it == terms_.end() ? zero : it->second;
    }

    SymFunc& operator+=(const SymFunc& other)
    {
        require_same_degree(other);
        for (const auto& [rho, c] : other.terms_) {
            add_term(rho, c);
        }
        return *this;
    }

    SymFunc& operator-=(const SymFunc& other)
    {
        require_same_degree(other);
        for (const auto& [rho, c] : other.terms_) {
            add_term(rho, -c);
        }
        return *this;
    }

    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }

    /// Scalar multiple.
    friend SymFunc operator*(const SymFunc& f, const Coeff& c)
    {
        SymFunc out(f.degree_);
        for (const auto& [rho, x] : f.terms_) {
            out.add_term(rho, x * c);
        }
        return out;
    }

    /// Product in the power-sum basis: p_rho * p_sigma = p_{rho u sigma}.
    friend SymFunc operator*(const SymFunc& f, const SymFunc& g)
    {
        SymFunc out(f.degree_ + g.degree_);
        for (const auto& [rho, a] : f.terms_) {
            for (const auto& [sigma, b] : g.terms_) {
                out.add_term(rho.merged(sigma), a * b);
            }
        }
        return out;
    }

    friend bool operator==(const SymFunc&, const SymFunc&) = default;

    /// Applies fn to every coefficient (e.g. lifting or specializing).
    template <typename F>
    auto map_coefficients(F&& fn) const -> SymFunc<decltype(fn(std::declval<const Coeff&>()))>
    {
        SymFunc<decltype(fn(std::declval<const Coeff&>()))> out(degree_);
        for (const auto& [rho, c] : terms_) {
            out.add_term(rho, fn(c));
        }
        return out;
    }

private:
    void require_same_degree(const SymFunc& other) const
    {
        if (degree_ != other.degree_) {
            throw std::invalid_argument("symmetric functions of different degrees");
        }
    }

    int degree_;
    Terms terms_;
};

/// f^{(r)}: drops every p_rho with a part divisible by r.
template <typename Coeff>
SymFunc<Coeff> r_reduce(const SymFunc<Coeff>& f, int r)
{
    if (r < 1) {
        throw std::invalid_argument("reduction modulus must be positive");
    }
    SymFunc<Coeff> out(f.degree());
    for (const auto& [rho, c] : f.terms()) {
        const bool divisible = std::any_of(rho.parts().begin(), rho.parts().end(),
                                           [r](int part) { return part % r == 0; });
        if (!divisible) {
            out.add_term(rho, c);
        }
    }
    return out;
}

/// f(x^r): substitutes p_k -> p_{kr}.
template <typename Coeff>
SymFunc<Coeff> plethysm_pr(const SymFunc<Coeff>& f, int r)
{
    if (r < 1) {
        throw std::invalid_argument("plethysm exponent must be positive");
    }
    SymFunc<Coeff> out(f.degree() * r);
    for (const auto& [rho, c] : f.terms()) {
        out.add_term(rho.scaled(r), c);
    }
    return out;
}

/// z_rho = prod_i i^{m_i} m_i!
Integer z_factor(const Partition& rho);
/// z_rho(t) = z_rho / prod_i (1 - t^{rho_i}).
RationalFunction z_factor_t(const Partition& rho);
/// z_rho(zeta); throws std::domain_error (pole) if some part is divisible by r.
CyclotomicNumber z_factor_at_root(const Partition& rho, int r);

/// p_rho itself.
SymFunc<Rational> power_sum(const Partition& rho);
/// s_lambda = sum_rho chi^lambda_rho / z_rho p_rho.
SymFunc<Rational> schur_in_p(const Partition& lambda);
/// Complete homogeneous h_n = sum_rho p_rho / z_rho.
SymFunc<Rational> complete_h(int n);
/// Elementary e_n = sum_rho sign(rho) p_rho / z_rho.
SymFunc<Rational> elementary_e(int n);

SymFunc<QPoly> lift_to_t(const SymFunc<Rational>& f);
SymFunc<CyclotomicNumber> lift_to_root(const SymFunc<Rational>& f, int r);

/// b_lambda(t) = prod_i (t;t)_{m_i(lambda)}.
QPoly b_lambda(const Partition& lambda);

/// Q'_mu(x;t) = sum_lambda K_{lambda,mu}(t) s_lambda.
SymFunc<QPoly> hl_Qprime(const Partition& mu);
/// P_lambda(x;t) = sum_nu K(t)^{-1}_{lambda,nu} s_nu.
SymFunc<QPoly> hl_P(const Partition& lambda);
/// Q_lambda(x;t) = b_lambda(t) P_lambda(x;t).
SymFunc<QPoly> hl_Q(const Partition& lambda);

/// Evaluates every t-coefficient at a primitive r-th root of unity.
SymFunc<CyclotomicNumber> specialize_t(const SymFunc<QPoly>& f, int r);

/// <f, g>_0 = sum_rho f_rho g_rho z_rho (Hall inner product).
template <typename Coeff>
Coeff hall_inner_zero(const SymFunc<Coeff>& f, const SymFunc<Coeff>& g, const Coeff& zero)
{
    if (f.degree() != g.degree()) {
        throw std::invalid_argument("inner product of different degrees");
    }
    Coeff acc = zero;
    for (const auto& [rho, a] : f.terms()) {
        auto it = g.terms().find(rho);
        if (it != g.terms().end()) {
            acc = acc + a * it->second * Rational(z_factor(rho));
        }
    }
    return acc;
}

/// <f, g>_t with z_rho(t), for generic t.
RationalFunction hall_inner_generic(const SymFunc<QPoly>& f, const SymFunc<QPoly>& g);
/// <f, g>_zeta; throws std::domain_error if a shared index has a part
/// divisible by the order.
CyclotomicNumber hall_inner_root(const SymFunc<CyclotomicNumber>& f, const SymFunc<CyclotomicNumber>& g);

/// The three reduced families indexed by RP_{r,n} (Schur, Q') or CP_{r,n}
/// (power sums).
enum class ReducedFamily { schur, qprime, power_sum };

std::string to_string(ReducedFamily family);

/// Q'^{(r)}_mu(x; zeta).
SymFunc<CyclotomicNumber> qprime_reduced_at_root(const Partition& mu, int r);
/// s^{(r)}_lambda with coefficients in Q(zeta_r).
SymFunc<CyclotomicNumber> schur_reduced_at_root(const Partition& lambda, int r);

/// Rows express the row-family elements in the column family:
/// u_row = sum_col entries(row, col) v_col.
struct TransitionMatrix {
    std::vector<Partition> rows;
    std::vector<Partition> cols;
    Matrix<CyclotomicNumber> entries;
};

/// Index set of a family: RP_{r,n} for Schur and Q', CP_{r,n} for power sums.
std::vector<Partition> family_index(ReducedFamily family, int n, int r);
/// Coefficients of a family in p^{(r)}: rows = family index, cols = CP_{r,n}.
TransitionMatrix expansion_in_power_sums(ReducedFamily family, int n, int r);
/// M(u, v) at t = zeta_r.
TransitionMatrix transition_matrix(ReducedFamily u, ReducedFamily v, int n, int r);

/// Coordinates of an element of Lambda^{(r)} (degree n) in the basis
/// Q'^{(r)}_mu, mu in RP_{r,n}; canonical order. Throws if f has support
/// outside CP_{r,n}.
std::vector<CyclotomicNumber> coordinates_in_reduced_qprime(const SymFunc<CyclotomicNumber>& f, int r);

/// Exact determinant of a square transition matrix.
CyclotomicNumber det_exact(const TransitionMatrix& m);

} // namespace regpart
