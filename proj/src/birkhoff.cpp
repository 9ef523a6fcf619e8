#include "stochpoly/birkhoff.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace stochpoly {

DoublyStochasticMatrix::DoublyStochasticMatrix(int n, std::vector<Rational> entries)
    : n_(n), entries_(std::move(entries))
{
    if (n < 1) {
        throw std::invalid_argument("matrix order must be positive");
    }
    const auto nn = static_cast<std::size_t>(n);
    if (entries_.size() != nn * nn) {
        throw std::invalid_argument("matrix of order " + std::to_string(n) + " needs " + std::to_string(nn * nn) +
                                    " entries");
    }
    for (auto& e : entries_) {
        e.canonicalize();
        if (sgn(e) < 0) {
            throw NotDoublyStochasticError("negative entry " + to_string(e));
        }
    }
    for (int a = 0; a < n; ++a) {
        Rational row = 0;
        Rational col = 0;
        for (int b = 0; b < n; ++b) {
            row += (*this)(a, b);
            col += (*this)(b, a);
        }
        if (row != 1) {
            throw NotDoublyStochasticError("row " + std::to_string(a + 1) + " sums to " + to_string(row));
        }
        if (col != 1) {
            throw NotDoublyStochasticError("column " + std::to_string(a + 1) + " sums to " + to_string(col));
        }
    }
}

std::vector<Rational> Decomposition::reconstruct() const
{
    const auto nn = static_cast<std::size_t>(n);
    std::vector<Rational> out(nn * nn, Rational(0));
    for (const auto& term : terms) {
        for (std::size_t r = 0; r < nn; ++r) {
            out[r * nn + static_cast<std::size_t>(term.perm[r])] += term.weight;
        }
    }
    return out;
}

std::size_t caratheodory_bound(int n)
{
    const auto nn = static_cast<std::size_t>(n);
    return nn * nn - 2 * nn + 2;
}

namespace {

class Matcher {
public:
    Matcher(int n, std::span<const Rational> entries) : n_(n), entries_(entries), owner_(n, -1) {}

    // Any perfect matching first, then each row in turn is moved to its
    // least usable column, re-matching only the rows below it.
    std::optional<Permutation> run()
    {
        for (int row = 0; row < n_; ++row) {
            std::vector<bool> seen(n_, false);
            if (!augment(row, seen)) {
                return std::nullopt;
            }
        }
        std::vector<int> match(n_, -1);
        for (int col = 0; col < n_; ++col) {
            match[owner_[col]] = col;
        }
        for (int row = 0; row < n_; ++row) {
            for (int col = 0; col < match[row]; ++col) {
                if (!positive(row, col) || owner_[col] < row) {
                    continue;
                }
                const std::vector<int> saved = owner_;
                const int displaced = owner_[col];
                owner_[match[row]] = -1;
                owner_[col] = row;
                std::vector<bool> seen(n_, false);
                for (int r = 0; r <= row; ++r) {
                    seen[r == row ? col : match[r]] = true;
                }
                if (augment(displaced, seen)) {
                    for (int c = 0; c < n_; ++c) {
                        match[owner_[c]] = c;
                    }
                    break;
                }
                owner_ = saved;
            }
        }
        return match;
    }

private:
    bool positive(int row, int col) const { return sgn(entries_[static_cast<std::size_t>(row) * n_ + col]) > 0; }

    bool augment(int row, std::vector<bool>& seen)
    {
        for (int col = 0; col < n_; ++col) {
            if (!positive(row, col) || seen[col]) {
                continue;
            }
            seen[col] = true;
            if (owner_[col] < 0 || augment(owner_[col], seen)) {
                owner_[col] = row;
                return true;
            }
        }
        return false;
    }

    int n_;
    std::span<const Rational> entries_;
    std::vector<int> owner_;
};

}  // namespace

std::optional<Permutation> find_positive_matching(int n, std::span<const Rational> entries)
{
    if (entries.size() != static_cast<std::size_t>(n) * n) {
        throw std::invalid_argument("find_positive_matching: wrong number of entries");
    }
    return Matcher(n, entries).run();
}

Permutation find_positive_matching(const DoublyStochasticMatrix& m)
{
    auto perm = find_positive_matching(m.order(), m.entries());
    if (!perm) {
        throw std::logic_error("doubly stochastic matrix without a positive perfect matching");
    }
    return *perm;
}

Decomposition decompose(const DoublyStochasticMatrix& m)
{
    const int n = m.order();
    const auto nn = static_cast<std::size_t>(n);
    std::vector<Rational> rest(m.entries().begin(), m.entries().end());
    Rational remaining = 1;  // common row/column sum of `rest`
    Decomposition d;
    d.n = n;
    while (remaining != 0) {
        auto perm = find_positive_matching(n, rest);
        if (!perm) {
            throw std::logic_error("remainder lost its positive perfect matching");
        }
        Rational weight = rest[static_cast<std::size_t>((*perm)[0])];
        for (std::size_t r = 1; r < nn; ++r) {
            weight = std::min(weight, rest[r * nn + static_cast<std::size_t>((*perm)[r])]);
        }
        for (std::size_t r = 0; r < nn; ++r) {
            rest[r * nn + static_cast<std::size_t>((*perm)[r])] -= weight;
        }
        remaining -= weight;
        d.terms.push_back({std::move(weight), std::move(*perm)});
        if (d.terms.size() > caratheodory_bound(n)) {
            throw std::logic_error("greedy decomposition exceeded the Caratheodory bound");
        }
    }
    return d;
}

}  // namespace stochpoly
