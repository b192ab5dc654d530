#pragma once

#include "regpart/matrix.hpp"
#include "regpart/partition.hpp"
#include "regpart/qpoly.hpp"

#include <vector>

namespace regpart {

/// Rows of a semistandard tableau, top row first (English convention).
using Tableau = std::vector<std::vector<int>>;

/// Every semistandard tableau of the given shape and content, built as a
/// chain of horizontal strips.
std::vector<Tableau> semistandard_tableaux(const Partition& shape, const Partition& content);

/// Rows read bottom to top, each left to right.
std::vector<int> reading_word(const Tableau& tableau);

/// Lascoux-Schutzenberger charge of a word whose content is a partition.
/// The word is split into standard subwords by cyclic right-to-left scans.
int charge(const std::vector<int>& word);

/// K_{lambda,mu}(t): sum of t^charge over SSYT of shape lambda, content mu.
/// Memoized; safe for concurrent callers.
QPoly kostka_foulkes(const Partition& lambda, const Partition& mu);

/// (K_{lambda,mu}(t)) over P_n in canonical order; upper unitriangular.
const Matrix<QPoly>& kostka_foulkes_matrix(int n);
/// K(t)^{-1}, again upper unitriangular with polynomial entries.
const Matrix<QPoly>& inverse_kostka_foulkes_matrix(int n);

} // namespace regpart
