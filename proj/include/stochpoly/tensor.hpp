#pragma once

// Order-3 cubical tensors over the rationals, line-stochasticity, and the
// correspondence between Latin squares and (0,1) line-stochastic tensors.
//
// Indices are 0-based throughout the C++ API. The JSON layer converts to the
// 1-based convention used in reports (line descriptors, index triples).

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "stochpoly/numerics.hpp"

namespace stochpoly {

using Index3 = std::array<int, 3>;

class Tensor3 {
public:
    /// The n x n x n zero tensor. Throws std::invalid_argument if n < 1.
    explicit Tensor3(int n);

    /// Entries in flattened order, entry (i,j,k) at ((i*n)+j)*n+k.
    Tensor3(int n, std::vector<Rational> entries);

    int dim() const noexcept { return n_; }
    std::size_t size() const noexcept { return entries_.size(); }

    const Rational& operator()(int i, int j, int k) const { return entries_[flat_index(n_, i, j, k)]; }
    const Rational& operator[](std::size_t flat) const { return entries_[flat]; }
    std::span<const Rational> flat() const noexcept { return entries_; }

    static std::size_t flat_index(int n, int i, int j, int k) noexcept
    {
        return (static_cast<std::size_t>(i) * n + j) * n + k;
    }
    static Index3 unflatten(int n, std::size_t flat) noexcept
    {
        const auto nn = static_cast<std::size_t>(n);
        return {static_cast<int>(flat / (nn * nn)), static_cast<int>((flat / nn) % nn), static_cast<int>(flat % nn)};
    }

    bool is_zero_one() const;

    friend bool operator==(const Tensor3& a, const Tensor3& b);
    /// Dimension first, then lexicographic on the flattened entries.
    friend bool operator<(const Tensor3& a, const Tensor3& b);

private:
    int n_;
    std::vector<Rational> entries_;
};

/// A line fixes two indices and lets the summed one vary. Axis 0 sums over i
/// (fixed j,k), axis 1 over j (fixed i,k), axis 2 over k (fixed i,j).
struct Line {
    int axis = 0;
    int first = 0;
    int second = 0;

    /// The n flattened positions on this line, in order of the varying index.
    std::vector<std::size_t> positions(int n) const;

    friend bool operator==(const Line&, const Line&) = default;
};

/// The 3n^2 lines of an n x n x n tensor: all axis-0 lines, then axis 1,
/// then axis 2, each in lexicographic order of the fixed pair.
std::vector<Line> all_lines(int n);

struct NegativeEntry {
    Index3 index;
    Rational value;
};

struct LineSumMismatch {
    Line line;
    Rational sum;
};

using StochasticityViolation = std::variant<NegativeEntry, LineSumMismatch>;

struct StochasticityVerdict {
    bool ok = true;
    std::optional<StochasticityViolation> violation;

    explicit operator bool() const noexcept { return ok; }
};

/// Checks entries >= 0 (in flattened order) and then every line sum == 1.
/// The first failure found is reported.
StochasticityVerdict is_line_stochastic(const Tensor3& t);

class LatinSquare {
public:
    /// Cells row-major, symbols 1..n. Throws std::invalid_argument unless every
    /// row and column is a permutation of 1..n.
    LatinSquare(int n, std::vector<int> cells);

    int order() const noexcept { return n_; }
    int operator()(int row, int col) const { return cells_[static_cast<std::size_t>(row) * n_ + col]; }
    std::span<const int> cells() const noexcept { return cells_; }

    friend bool operator==(const LatinSquare&, const LatinSquare&) = default;
    friend auto operator<=>(const LatinSquare&, const LatinSquare&) = default;

private:
    int n_;
    std::vector<int> cells_;
};

/// t(i,j,k) = 1 iff s(i,j) = k+1.
Tensor3 latin_to_tensor(const LatinSquare& s);

/// Inverse of latin_to_tensor. Throws std::invalid_argument when t has an
/// entry outside {0,1} or is not line-stochastic.
LatinSquare tensor_to_latin(const Tensor3& t);

/// Positions of the nonzero entries, in flattened order.
std::vector<Index3> support(const Tensor3& t);
std::vector<std::size_t> support_flat(const Tensor3& t);

/// sum_i weights[i] * tensors[i]. Weights must be nonnegative and sum to 1;
/// every tensor must share one dimension. Throws std::invalid_argument.
Tensor3 convex_combine(std::span<const Rational> weights, std::span<const Tensor3> tensors);

/// The 3 x 3 x 3 line-stochastic vertex with entries in {0, 1/2, 1}: layer k
/// (third index) holds, row by row, half of
///   k=1: 0 1 1 / 1 1 0 / 1 0 1
///   k=2: 1 1 0 / 0 1 1 / 1 0 1
///   k=3: 1 0 1 / 1 0 1 / 0 2 0
/// It is not a convex combination of permutation tensors.
Tensor3 example_q();

/// Every entry equal to 1/n.
Tensor3 uniform_tensor(int n);

}  // namespace stochpoly
