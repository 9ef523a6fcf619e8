#pragma once

// Test-only reference computations. Each one takes a different route from the
// library code it checks: Pascal's rule instead of the multiplicative binomial,
// plain rational Gauss-Jordan instead of Bareiss, basic-solution enumeration
// instead of simplex.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "stochpoly/birkhoff.hpp"
#include "stochpoly/numerics.hpp"

namespace oracle {

using stochpoly::BigInt;
using stochpoly::Rational;

/// Rows 0..max_n of Pascal's triangle by repeated addition.
inline std::vector<std::vector<BigInt>> pascal(int max_n)
{
    std::vector<std::vector<BigInt>> rows{{BigInt(1)}};
    for (int n = 1; n <= max_n; ++n) {
        std::vector<BigInt> row(static_cast<std::size_t>(n) + 1, BigInt(1));
        for (int k = 1; k < n; ++k) {
            row[k] = rows[n - 1][k - 1] + rows[n - 1][k];
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Rank by Gauss-Jordan over the rationals.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> m)
{
    if (m.empty()) {
        return 0;
    }
    std::size_t rank = 0;
    const std::size_t cols = m.front().size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        auto it = std::find_if(m.begin() + static_cast<std::ptrdiff_t>(rank), m.end(),
                               [c](const auto& row) { return row[c] != 0; });
        if (it == m.end()) {
            continue;
        }
        std::iter_swap(it, m.begin() + static_cast<std::ptrdiff_t>(rank));
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r != rank && m[r][c] != 0) {
                const Rational f = m[r][c] / m[rank][c];
                for (std::size_t j = 0; j < cols; ++j) {
                    m[r][j] -= f * m[rank][j];
                }
            }
        }
        ++rank;
    }
    return rank;
}

/// Unique solution of the square system, or nullopt when singular.
inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
{
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) {
            ++p;
        }
        if (p == n) {
            return std::nullopt;
        }
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r != c && a[r][c] != 0) {
                const Rational f = a[r][c] / a[c][c];
                for (std::size_t j = 0; j < n; ++j) {
                    a[r][j] -= f * a[c][j];
                }
                b[r] -= f * b[c];
            }
        }
    }
    for (std::size_t r = 0; r < n; ++r) {
        b[r] /= a[r][r];
    }
    return b;
}

/// Feasibility of {M x = b, x >= 0} by enumerating basic solutions: the
/// system is feasible iff some set of linearly independent columns admits a
/// nonnegative solution using only those columns. Exponential, small inputs only.
inline bool lp_feasible_by_bases(const std::vector<std::vector<Rational>>& m, const std::vector<Rational>& b)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m.front().size();
    if (std::all_of(b.begin(), b.end(), [](const Rational& v) { return v == 0; })) {
        return true;
    }
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << cols); ++mask) {
        std::vector<std::size_t> cs;
        for (std::size_t c = 0; c < cols; ++c) {
            if ((mask >> c) & 1u) {
                cs.push_back(c);
            }
        }
        std::vector<std::vector<Rational>> sub(rows, std::vector<Rational>(cs.size()));
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t i = 0; i < cs.size(); ++i) {
                sub[r][i] = m[r][cs[i]];
            }
        }
        if (rational_rank(sub) != cs.size()) {
            continue;
        }
        // Pick cs.size() independent rows and solve; then confirm every row.
        std::vector<std::size_t> picked;
        std::vector<std::vector<Rational>> acc;
        for (std::size_t r = 0; r < rows && picked.size() < cs.size(); ++r) {
            acc.push_back(sub[r]);
            if (rational_rank(acc) == acc.size()) {
                picked.push_back(r);
            } else {
                acc.pop_back();
            }
        }
        std::vector<Rational> rhs;
        for (std::size_t r : picked) {
            rhs.push_back(b[r]);
        }
        auto x = solve_square(acc, rhs);
        if (!x || std::any_of(x->begin(), x->end(), [](const Rational& v) { return sgn(v) < 0; })) {
            continue;
        }
        bool ok = true;
        for (std::size_t r = 0; r < rows && ok; ++r) {
            Rational lhs = 0;
            for (std::size_t i = 0; i < cs.size(); ++i) {
                lhs += sub[r][i] * (*x)[i];
            }
            ok = lhs == b[r];
        }
        if (ok) {
            return true;
        }
    }
    return false;
}

/// A doubly stochastic matrix built as a random convex combination of
/// `terms` random permutation matrices with small integer weights.
inline std::vector<Rational> random_doubly_stochastic(int n, int terms, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> weight(1, 9);
    std::vector<int> ws(static_cast<std::size_t>(terms));
    for (int& w : ws) {
        w = weight(rng);
    }
    const int total = std::accumulate(ws.begin(), ws.end(), 0);
    std::vector<Rational> out(static_cast<std::size_t>(n) * n, Rational(0));
    for (int w : ws) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int r = 0; r < n; ++r) {
            out[static_cast<std::size_t>(r) * n + perm[r]] += stochpoly::make_rational(w, total);
        }
    }
    return out;
}

}  // namespace oracle
