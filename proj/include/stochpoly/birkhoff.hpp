#pragma once

// Birkhoff-von Neumann decomposition of doubly stochastic matrices into
// permutation matrices by the greedy matching algorithm.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "stochpoly/numerics.hpp"

namespace stochpoly {

/// Column assigned to each row.
using Permutation = std::vector<int>;

/// Raised for well-formed input that violates double stochasticity.
class NotDoublyStochasticError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DoublyStochasticMatrix {
public:
    /// Row-major entries. Throws NotDoublyStochasticError unless every entry
    /// is nonnegative and every row and column sums to exactly 1, and
    /// std::invalid_argument for a bad order or entry count.
    DoublyStochasticMatrix(int n, std::vector<Rational> entries);

    int order() const noexcept { return n_; }
    const Rational& operator()(int row, int col) const { return entries_[static_cast<std::size_t>(row) * n_ + col]; }
    std::span<const Rational> entries() const noexcept { return entries_; }

private:
    int n_;
    std::vector<Rational> entries_;
};

struct DecompositionTerm {
    Rational weight;
    Permutation perm;
};

struct Decomposition {
    int n = 0;
    std::vector<DecompositionTerm> terms;

    /// sum of weight * P(perm), row-major.
    std::vector<Rational> reconstruct() const;
};

/// n^2 - 2n + 2, the Caratheodory bound on the number of terms.
std::size_t caratheodory_bound(int n);

/// The lexicographically least perfect matching (row 0's column smallest,
/// then row 1's, ...) on the positive entries of an n x n row-major matrix,
/// found with augmenting paths. Returns nullopt when none exists.
std::optional<Permutation> find_positive_matching(int n, std::span<const Rational> entries);
Permutation find_positive_matching(const DoublyStochasticMatrix& m);

/// Repeatedly subtracts (minimum matched entry) x (a positive matching) until
/// the matrix vanishes. Each step zeroes at least one entry and the minimal
/// face containing the remainder shrinks, so at most n^2 - 2n + 2 terms.
Decomposition decompose(const DoublyStochasticMatrix& m);

}  // namespace stochpoly
