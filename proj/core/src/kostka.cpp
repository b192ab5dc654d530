#include "regpart/kostka.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace regpart {

namespace {

void add_strips(const Partition& shape, const Partition& content, std::size_t letter,
                Tableau& current, std::vector<Tableau>& out)
{
    if (letter == content.length()) {
        out.push_back(current);
        return;
    }
    const int value = static_cast<int>(letter) + 1;
    const int count = content[letter];
    const std::size_t rows = shape.length();
    if (current.size() < rows) {
        current.resize(rows);
    }
    std::vector<int> old_lengths(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        old_lengths[i] = static_cast<int>(current[i].size());
    }

    // Place `left` copies of `value` in rows >= row, at most one per column.
    auto place = [&](auto&& self, std::size_t row, int left) -> void {
        if (left == 0) {
            add_strips(shape, content, letter + 1, current, out);
            return;
        }
        if (row == rows) {
            return;
        }
        const int cap_shape = shape[row] - old_lengths[row];
        const int cap_strip = row == 0 ? cap_shape : old_lengths[row - 1] - old_lengths[row];
        const int cap = std::min({cap_shape, cap_strip, left});
        for (int k = cap; k >= 0; --k) {
            current[row].insert(current[row].end(), static_cast<std::size_t>(k), value);
            self(self, row + 1, left - k);
            current[row].resize(current[row].size() - static_cast<std::size_t>(k));
        }
    };
    place(place, 0, count);
}

using Key = std::pair<std::vector<int>, std::vector<int>>;

std::mutex kf_mutex;
std::map<Key, QPoly> kf_memo;

std::mutex matrix_mutex;
std::map<int, Matrix<QPoly>> matrix_memo;
std::map<int, Matrix<QPoly>> inverse_memo;

} // namespace

std::vector<Tableau> semistandard_tableaux(const Partition& shape, const Partition& content)
{
    std::vector<Tableau> out;
    if (shape.weight() != content.weight()) {
        return out;
    }
    Tableau current(shape.length());
    add_strips(shape, content, 0, current, out);
    for (auto& t : out) {
        while (!t.empty() && t.back().empty()) {
            t.pop_back();
        }
    }
    return out;
}

std::vector<int> reading_word(const Tableau& tableau)
{
    std::vector<int> word;
    for (auto row = tableau.rbegin(); row != tableau.rend(); ++row) {
        word.insert(word.end(), row->begin(), row->end());
    }
    return word;
}

int charge(const std::vector<int>& word)
{
    const std::size_t n = word.size();
    if (n == 0) {
        return 0;
    }
    const int max_letter = *std::max_element(word.begin(), word.end());
    std::vector<int> counts(static_cast<std::size_t>(max_letter) + 1, 0);
    for (int letter : word) {
        if (letter < 1) {
            throw std::invalid_argument("charge: letters must be positive");
        }
        ++counts[static_cast<std::size_t>(letter)];
    }
    for (int a = 2; a <= max_letter; ++a) {
        if (counts[static_cast<std::size_t>(a)] > counts[static_cast<std::size_t>(a) - 1]) {
            throw std::invalid_argument("charge: word content must be a partition");
        }
    }

    std::vector<bool> used(n, false);
    std::size_t remaining = n;
    int total = 0;
    while (remaining > 0) {
        int letters = 0;
        while (letters < max_letter && counts[static_cast<std::size_t>(letters) + 1] > 0) {
            ++letters;
        }
        std::size_t cursor = n; // one past the right end
        std::size_t previous = 0;
        int index = 0;
        for (int a = 1; a <= letters; ++a) {
            // Scan leftward from cursor, wrapping to the right end.
            std::size_t pos = cursor;
            do {
                pos = pos == 0 ? n - 1 : pos - 1;
            } while (used[pos] || word[pos] != a);
            if (a > 1 && pos > previous) {
                ++index;
            }
            total += index;
            used[pos] = true;
            previous = pos;
            cursor = pos;
            --counts[static_cast<std::size_t>(a)];
            --remaining;
        }
    }
    return total;
}

QPoly kostka_foulkes(const Partition& lambda, const Partition& mu)
{
    if (lambda.weight() != mu.weight()) {
        throw std::invalid_argument("Kostka-Foulkes polynomial needs partitions of equal weight");
    }
    Key key{lambda.parts(), mu.parts()};
    {
        std::lock_guard lock(kf_mutex);
        if (auto it = kf_memo.find(key); it != kf_memo.end()) {
            return it->second;
        }
    }
    std::map<int, long> by_charge;
    for (const auto& tableau : semistandard_tableaux(lambda, mu)) {
        ++by_charge[charge(reading_word(tableau))];
    }
    QPoly result;
    for (const auto& [exponent, count] : by_charge) {
        result += QPoly::monomial(Rational(count), static_cast<std::size_t>(exponent));
    }
    std::lock_guard lock(kf_mutex);
    kf_memo.emplace(std::move(key), result);
    return result;
}

const Matrix<QPoly>& kostka_foulkes_matrix(int n)
{
    {
        std::lock_guard lock(matrix_mutex);
        if (auto it = matrix_memo.find(n); it != matrix_memo.end()) {
            return it->second;
        }
    }
    const auto partitions = enumerate_partitions(n);
    Matrix<QPoly> k(partitions.size(), partitions.size(), QPoly());
    for (std::size_t i = 0; i < partitions.size(); ++i) {
        for (std::size_t j = 0; j < partitions.size(); ++j) {
            k(i, j) = kostka_foulkes(partitions[i], partitions[j]);
        }
    }
    std::lock_guard lock(matrix_mutex);
    return matrix_memo.emplace(n, std::move(k)).first->second;
}

const Matrix<QPoly>& inverse_kostka_foulkes_matrix(int n)
{
    {
        std::lock_guard lock(matrix_mutex);
        if (auto it = inverse_memo.find(n); it != inverse_memo.end()) {
            return it->second;
        }
    }
    auto inv = inverse_upper_unitriangular(kostka_foulkes_matrix(n), QPoly(), QPoly(1));
    std::lock_guard lock(matrix_mutex);
    return inverse_memo.emplace(n, std::move(inv)).first->second;
}

} // namespace regpart
