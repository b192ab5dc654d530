#include "regpart/partition.hpp"
#include "regpart/numeric.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace regpart {

Rational parse_rational(const std::string& text)
{
    if (text.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    Rational value;
    if (value.set_str(text, 10) != 0) {
        throw std::invalid_argument("malformed rational literal: " + text);
    }
    if (sgn(value.get_den()) == 0) {
        throw std::invalid_argument("zero denominator: " + text);
    }
    value.canonicalize();
    return value;
}

Integer factorial(unsigned long n)
{
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        weight_ += parts_[i];
    }
}

Partition Partition::from_unsorted(std::vector<int> parts)
{
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::from_multiplicities(const std::map<int, int>& mult)
{
    std::vector<int> parts;
    for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
        if (it->second < 0) {
            throw std::invalid_argument("negative multiplicity");
        }
        parts.insert(parts.end(), static_cast<std::size_t>(it->second), it->first);
    }
    return Partition(std::move(parts));
}

int Partition::multiplicity(int part) const
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::map<int, int> Partition::multiplicities() const
{
    std::map<int, int> mult;
    for (int part : parts_) {
        ++mult[part];
    }
    return mult;
}

int Partition::distinct_parts() const
{
    int count = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i == 0 || parts_[i] != parts_[i - 1]) {
            ++count;
        }
    }
    return count;
}

Partition Partition::conjugate() const
{
    if (parts_.empty()) {
        return {};
    }
    std::vector<int> conj(static_cast<std::size_t>(parts_.front()), 0);
    for (int part : parts_) {
        for (int c = 0; c < part; ++c) {
            ++conj[static_cast<std::size_t>(c)];
        }
    }
    return Partition(std::move(conj));
}

Partition Partition::remove_parts(int part, int count) const
{
    if (multiplicity(part) < count) {
        throw std::invalid_argument("not enough parts to remove");
    }
    std::vector<int> rest;
    int skipped = 0;
    for (int p : parts_) {
        if (p == part && skipped < count) {
            ++skipped;
            continue;
        }
        rest.push_back(p);
    }
    return Partition(std::move(rest));
}

Partition Partition::scaled(int k) const
{
    if (k <= 0) {
        throw std::invalid_argument("scale factor must be positive");
    }
    std::vector<int> parts = parts_;
    for (int& p : parts) {
        p *= k;
    }
    return Partition(std::move(parts));
}

Partition Partition::merged(const Partition& other) const
{
    std::vector<int> parts;
    parts.reserve(parts_.size() + other.parts_.size());
    std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
               std::back_inserter(parts), std::greater<>());
    return Partition(std::move(parts));
}

std::string Partition::to_string() const
{
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        out << (i ? "," : "") << parts_[i];
    }
    out << ')';
    return out.str();
}

std::string Partition::to_compact_string() const
{
    if (parts_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (auto it = parts_.begin(); it != parts_.end();) {
        auto end = std::find_if(it, parts_.end(), [&](int p) { return p != *it; });
        out << (first ? "" : " ") << *it;
        if (end - it > 1) {
            out << '^' << (end - it);
        }
        first = false;
        it = end;
    }
    return out.str();
}

bool dominates(const Partition& lambda, const Partition& mu)
{
    if (lambda.weight() != mu.weight()) {
        throw std::invalid_argument("dominance requires equal weights");
    }
    long long sum_lambda = 0;
    long long sum_mu = 0;
    const std::size_t len = std::max(lambda.length(), mu.length());
    for (std::size_t i = 0; i < len; ++i) {
        sum_lambda += i < lambda.length() ? lambda[i] : 0;
        sum_mu += i < mu.length() ? mu[i] : 0;
        if (sum_lambda < sum_mu) {
            return false;
        }
    }
    return true;
}

ModulusTuple::ModulusTuple(std::initializer_list<int> moduli) : ModulusTuple(std::vector<int>(moduli)) {}

ModulusTuple::ModulusTuple(std::vector<int> moduli) : moduli_(std::move(moduli))
{
    if (moduli_.empty()) {
        throw std::invalid_argument("modulus tuple must have at least one entry");
    }
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        if (moduli_[i] < 2) {
            throw std::invalid_argument("moduli must be at least 2");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (std::gcd(moduli_[i], moduli_[j]) != 1) {
                throw std::invalid_argument("moduli must be pairwise coprime");
            }
        }
    }
}

bool ModulusTuple::coprime_to_all(long long k) const
{
    return std::none_of(moduli_.begin(), moduli_.end(), [k](int r) { return k % r == 0; });
}

std::vector<int> ModulusTuple::without(std::size_t i) const
{
    std::vector<int> rest = moduli_;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    return rest;
}

std::string ModulusTuple::to_string() const
{
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        out << (i ? "," : "") << moduli_[i];
    }
    out << ')';
    return out.str();
}

namespace {

void require_nonnegative(int n)
{
    if (n < 0) {
        throw std::invalid_argument("n must be nonnegative");
    }
}

// Emits partitions of `remaining` with parts <= max_part in lexicographically
// decreasing order. `allowed` filters part values; `max_mult` bounds every
// multiplicity (0 = unbounded).
template <typename Allowed>
void generate(int remaining, int max_part, int max_mult, const Allowed& allowed,
              std::vector<int>& current, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        if (!allowed(part)) {
            continue;
        }
        const int cap = max_mult > 0 ? std::min(max_mult, remaining / part) : remaining / part;
        // Largest multiplicity first keeps the output lexicographically decreasing.
        for (int mult = cap; mult >= 1; --mult) {
            current.insert(current.end(), static_cast<std::size_t>(mult), part);
            generate(remaining - mult * part, part - 1, max_mult, allowed, current, out);
            current.resize(current.size() - static_cast<std::size_t>(mult));
        }
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n)
{
    require_nonnegative(n);
    std::vector<Partition> out;
    std::vector<int> current;
    generate(n, n, 0, [](int) { return true; }, current, out);
    return out;
}

bool is_class_regular(const Partition& lambda, const ModulusTuple& moduli)
{
    return std::all_of(lambda.parts().begin(), lambda.parts().end(),
                       [&](int part) { return moduli.coprime_to_all(part); });
}

bool is_regular(const Partition& lambda, const ModulusTuple& moduli)
{
    for (const auto& [part, mult] : lambda.multiplicities()) {
        if (mult >= moduli.first()) {
            return false;
        }
        for (std::size_t i = 1; i < moduli.size(); ++i) {
            if (part % moduli[i] == 0) {
                return false;
            }
        }
    }
    return true;
}

std::vector<Partition> enumerate_class_regular(const ModulusTuple& moduli, int n)
{
    require_nonnegative(n);
    std::vector<Partition> out;
    std::vector<int> current;
    generate(n, n, 0, [&](int part) { return moduli.coprime_to_all(part); }, current, out);
    return out;
}

std::vector<Partition> enumerate_regular(const ModulusTuple& moduli, int n)
{
    require_nonnegative(n);
    std::vector<Partition> out;
    std::vector<int> current;
    auto allowed = [&](int part) {
        for (std::size_t i = 1; i < moduli.size(); ++i) {
            if (part % moduli[i] == 0) {
                return false;
            }
        }
        return true;
    };
    generate(n, n, moduli.first() - 1, allowed, current, out);
    return out;
}

} // namespace regpart
