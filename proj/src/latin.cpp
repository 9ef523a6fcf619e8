#include <algorithm>
#include <cstdlib>
#include <string>

#include "stochpoly/enumeration.hpp"

namespace stochpoly {

std::uint64_t max_cells_from_env()
{
    const char* raw = std::getenv("STOCHPOLY_MAX_CELLS");
    if (raw == nullptr || *raw == '\0') {
        return kDefaultMaxCells;
    }
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0') {
        throw std::invalid_argument(std::string("STOCHPOLY_MAX_CELLS is not a number: ") + raw);
    }
    return value;
}

namespace {

// Row-major cell-by-cell backtracking with row/column symbol masks.
class LatinBacktracker {
public:
    explicit LatinBacktracker(int n)
        : n_(n), cells_(static_cast<std::size_t>(n) * n, 0), row_used_(n, 0), col_used_(n, 0)
    {
        if (n < 1) {
            throw std::invalid_argument("Latin square order must be positive");
        }
        if (n > kMaxLatinOrder) {
            throw ResourceLimitError("Latin square enumeration is capped at order " + std::to_string(kMaxLatinOrder));
        }
    }

    template <typename Visit>
    void run(Visit&& visit)
    {
        step(0, visit);
    }

private:
    template <typename Visit>
    void step(std::size_t cell, Visit& visit)
    {
        if (cell == cells_.size()) {
            visit(cells_);
            return;
        }
        const auto row = cell / n_;
        const auto col = cell % n_;
        const unsigned blocked = row_used_[row] | col_used_[col];
        for (int symbol = 0; symbol < static_cast<int>(n_); ++symbol) {
            const unsigned bit = 1u << symbol;
            if (blocked & bit) {
                continue;
            }
            row_used_[row] |= bit;
            col_used_[col] |= bit;
            cells_[cell] = symbol + 1;
            step(cell + 1, visit);
            row_used_[row] &= ~bit;
            col_used_[col] &= ~bit;
        }
    }

    std::size_t n_;
    std::vector<int> cells_;
    std::vector<unsigned> row_used_;
    std::vector<unsigned> col_used_;
};

}  // namespace

std::vector<LatinSquare> enumerate_latin_squares(int n)
{
    std::vector<LatinSquare> out;
    LatinBacktracker(n).run([&](const std::vector<int>& cells) { out.emplace_back(n, cells); });
    return out;
}

BigInt count_latin_squares(int n)
{
    std::uint64_t count = 0;
    LatinBacktracker(n).run([&](const std::vector<int>&) { ++count; });
    return BigInt(static_cast<unsigned long>(count));
}

bool VertexSet::contains(const Tensor3& t) const
{
    return std::binary_search(vertices.begin(), vertices.end(), t);
}

VertexSet VertexSet::from_points(std::vector<Tensor3> points)
{
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    VertexSet set;
    set.vertices = std::move(points);
    for (const Tensor3& v : set.vertices) {
        if (v.is_zero_one()) {
            ++set.zero_one;
        } else {
            ++set.fractional;
        }
    }
    return set;
}

}  // namespace stochpoly
