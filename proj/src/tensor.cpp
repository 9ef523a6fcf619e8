#include "stochpoly/tensor.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace stochpoly {

namespace {

std::size_t cube(int n)
{
    const auto nn = static_cast<std::size_t>(n);
    return nn * nn * nn;
}

}  // namespace

Tensor3::Tensor3(int n) : n_(n)
{
    if (n < 1) {
        throw std::invalid_argument("tensor dimension must be positive");
    }
    entries_.assign(cube(n), Rational(0));
}

Tensor3::Tensor3(int n, std::vector<Rational> entries) : n_(n), entries_(std::move(entries))
{
    if (n < 1) {
        throw std::invalid_argument("tensor dimension must be positive");
    }
    if (entries_.size() != cube(n)) {
        throw std::invalid_argument("tensor of dimension " + std::to_string(n) + " needs " +
                                    std::to_string(cube(n)) + " entries, got " + std::to_string(entries_.size()));
    }
    for (auto& e : entries_) {
        e.canonicalize();
    }
}

bool Tensor3::is_zero_one() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& e) { return e == 0 || e == 1; });
}

bool operator==(const Tensor3& a, const Tensor3& b)
{
    return a.n_ == b.n_ && a.entries_ == b.entries_;
}

bool operator<(const Tensor3& a, const Tensor3& b)
{
    if (a.n_ != b.n_) {
        return a.n_ < b.n_;
    }
    return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end());
}

std::vector<std::size_t> Line::positions(int n) const
{
    std::vector<std::size_t> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        switch (axis) {
        case 0: out.push_back(Tensor3::flat_index(n, v, first, second)); break;
        case 1: out.push_back(Tensor3::flat_index(n, first, v, second)); break;
        default: out.push_back(Tensor3::flat_index(n, first, second, v)); break;
        }
    }
    return out;
}

std::vector<Line> all_lines(int n)
{
    std::vector<Line> lines;
    lines.reserve(3 * static_cast<std::size_t>(n) * n);
    for (int axis = 0; axis < 3; ++axis) {
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                lines.push_back(Line{axis, a, b});
            }
        }
    }
    return lines;
}

StochasticityVerdict is_line_stochastic(const Tensor3& t)
{
    const int n = t.dim();
    for (std::size_t f = 0; f < t.size(); ++f) {
        if (sgn(t[f]) < 0) {
            return {false, NegativeEntry{Tensor3::unflatten(n, f), t[f]}};
        }
    }
    for (const Line& line : all_lines(n)) {
        Rational sum = 0;
        for (std::size_t f : line.positions(n)) {
            sum += t[f];
        }
        if (sum != 1) {
            return {false, LineSumMismatch{line, sum}};
        }
    }
    return {true, std::nullopt};
}

LatinSquare::LatinSquare(int n, std::vector<int> cells) : n_(n), cells_(std::move(cells))
{
    if (n < 1) {
        throw std::invalid_argument("Latin square order must be positive");
    }
    const auto nn = static_cast<std::size_t>(n);
    if (cells_.size() != nn * nn) {
        throw std::invalid_argument("Latin square of order " + std::to_string(n) + " needs " +
                                    std::to_string(nn * nn) + " cells");
    }
    for (int v : cells_) {
        if (v < 1 || v > n) {
            throw std::invalid_argument("Latin square symbol out of range 1.." + std::to_string(n));
        }
    }
    for (int r = 0; r < n; ++r) {
        std::vector<bool> in_row(nn + 1), in_col(nn + 1);
        for (int c = 0; c < n; ++c) {
            const int rv = (*this)(r, c);
            const int cv = (*this)(c, r);
            if (in_row[rv]) {
                throw std::invalid_argument("symbol " + std::to_string(rv) + " repeated in row " + std::to_string(r + 1));
            }
            if (in_col[cv]) {
                throw std::invalid_argument("symbol " + std::to_string(cv) + " repeated in column " +
                                            std::to_string(r + 1));
            }
            in_row[rv] = true;
            in_col[cv] = true;
        }
    }
}

Tensor3 latin_to_tensor(const LatinSquare& s)
{
    const int n = s.order();
    std::vector<Rational> entries(cube(n), Rational(0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            entries[Tensor3::flat_index(n, i, j, s(i, j) - 1)] = 1;
        }
    }
    return Tensor3(n, std::move(entries));
}

LatinSquare tensor_to_latin(const Tensor3& t)
{
    if (!t.is_zero_one()) {
        throw std::invalid_argument("tensor has entries outside {0,1}");
    }
    if (!is_line_stochastic(t)) {
        throw std::invalid_argument("tensor is not line-stochastic");
    }
    const int n = t.dim();
    std::vector<int> cells(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                if (t(i, j, k) == 1) {
                    cells[static_cast<std::size_t>(i) * n + j] = k + 1;
                }
            }
        }
    }
    return LatinSquare(n, std::move(cells));
}

std::vector<std::size_t> support_flat(const Tensor3& t)
{
    std::vector<std::size_t> out;
    for (std::size_t f = 0; f < t.size(); ++f) {
        if (t[f] != 0) {
            out.push_back(f);
        }
    }
    return out;
}

std::vector<Index3> support(const Tensor3& t)
{
    std::vector<Index3> out;
    for (std::size_t f : support_flat(t)) {
        out.push_back(Tensor3::unflatten(t.dim(), f));
    }
    return out;
}

Tensor3 convex_combine(std::span<const Rational> weights, std::span<const Tensor3> tensors)
{
    if (weights.size() != tensors.size() || tensors.empty()) {
        throw std::invalid_argument("convex_combine: need one weight per tensor and at least one tensor");
    }
    Rational total = 0;
    for (const Rational& w : weights) {
        if (sgn(w) < 0) {
            throw std::invalid_argument("convex_combine: negative weight " + to_string(w));
        }
        total += w;
    }
    if (total != 1) {
        throw std::invalid_argument("convex_combine: weights sum to " + to_string(total) + ", not 1");
    }
    const int n = tensors.front().dim();
    std::vector<Rational> entries(cube(n), Rational(0));
    for (std::size_t m = 0; m < tensors.size(); ++m) {
        if (tensors[m].dim() != n) {
            throw std::invalid_argument("convex_combine: mismatched tensor dimensions");
        }
        if (weights[m] == 0) {
            continue;
        }
        for (std::size_t f = 0; f < entries.size(); ++f) {
            entries[f] += weights[m] * tensors[m][f];
        }
    }
    return Tensor3(n, std::move(entries));
}

Tensor3 example_q()
{
    // layers[k][i][j], doubled
    constexpr int layers[3][3][3] = {
        {{0, 1, 1}, {1, 1, 0}, {1, 0, 1}},
        {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}},
        {{1, 0, 1}, {1, 0, 1}, {0, 2, 0}},
    };
    std::vector<Rational> entries(27);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) {
                entries[Tensor3::flat_index(3, i, j, k)] = make_rational(layers[k][i][j], 2);
            }
        }
    }
    return Tensor3(3, std::move(entries));
}

Tensor3 uniform_tensor(int n)
{
    return Tensor3(n, std::vector<Rational>(cube(n), make_rational(1, n)));
}

}  // namespace stochpoly
