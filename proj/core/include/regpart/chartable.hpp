#pragma once

#include "regpart/cyclotomic.hpp"
#include "regpart/matrix.hpp"
#include "regpart/numeric.hpp"
#include "regpart/partition.hpp"

#include <optional>
#include <vector>

namespace regpart {

/// Irreducible characters chi^lambda_rho of S_n on a chosen block of rows
/// (lambda) and columns (rho), both in canonical order.
struct CharacterTable {
    int n = 0;
    std::vector<Partition> rows;
    std::vector<Partition> cols;
    Matrix<Integer> entries{0, 0, Integer(0)};

    friend bool operator==(const CharacterTable&, const CharacterTable&) = default;
};

/// Full table over P_n x P_n.
CharacterTable character_table(int n);
/// RP_{r,n} rows and CP_{r,n} columns.
CharacterTable regular_character_table(int r, int n);

Integer table_determinant(const CharacterTable& table);

/// Product of all parts of all partitions in the list.
Integer product_of_parts(const std::vector<Partition>& partitions);

/// c_{r_1,n} computed three independent ways.
struct CRoutes {
    Integer weighted_w_sum; ///< weighted double sum over W
    Integer series;         ///< coefficient of the generating function
    Integer glaisher;       ///< sum of Glaisher step counts G(rho)
    bool agree() const { return weighted_w_sum == series && series == glaisher; }
};
CRoutes c_three_ways(const ModulusTuple& moduli, int n);

struct OrdinaryDeterminantReport {
    int n = 0;
    Integer determinant;
    Integer predicted_square; ///< prod over P_n of prod rho_i^2
    bool holds = false;
};
OrdinaryDeterminantReport verify_ordinary_determinant(int n);

struct OlssonReport {
    int r = 0;
    int n = 0;
    Integer determinant;
    Integer predicted_magnitude; ///< prod over CP_{r,n} of prod rho_i
    int sign = 0;                ///< sign of the determinant in canonical order
    bool holds = false;
};
OlssonReport verify_olsson(int r, int n);

/// det M(Q'^{(r)}, p^{(r)}) against 1/(r^c prod prod rho_i).
struct QprimeDeterminantReport {
    int r = 0;
    int n = 0;
    CyclotomicNumber determinant{2};
    bool is_real = false;
    std::optional<Rational> rational_value;
    CRoutes c;
    Rational predicted_magnitude;
    int sign = 0;
    bool holds = false;
};
QprimeDeterminantReport verify_qprime_determinant(int r, int n);

/// The factorization chain through the Q' basis.
struct DetChainReport {
    int r = 0;
    int n = 0;
    CRoutes c;
    CyclotomicNumber det_s_qprime{2};
    CyclotomicNumber det_qprime_p{2};
    CyclotomicNumber det_s_p{2};
    Integer det_table;
    Integer z_product; ///< prod over CP_{r,n} of z_rho
    bool s_qprime_square_is_one = false;
    bool qprime_p_square_matches = false;
    bool s_p_entries_match_table = false;
    bool product_rule_holds = false;
    bool table_relation_holds = false;
    bool holds() const
    {
        return c.agree() && s_qprime_square_is_one && qprime_p_square_matches && s_p_entries_match_table &&
               product_rule_holds && table_relation_holds;
    }
};
DetChainReport verify_detchain(int r, int n);

} // namespace regpart
