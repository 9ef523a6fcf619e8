#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <string>
#include <thread>

#include "stochpoly/enumeration.hpp"
#include "stochpoly/polytope.hpp"

namespace stochpoly {

namespace {

// Exact vertex candidate: x_v = numerators[v] / numerators.back(), reduced.
using Key = std::vector<std::int64_t>;

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("brute-force elimination overflowed 64-bit integers");
    }
    return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out)) {
        throw std::overflow_error("brute-force elimination overflowed 64-bit integers");
    }
    return out;
}

struct Pivot {
    std::size_t col;
    std::size_t row;
};

// State of a partially chosen basis. Columns are decided in increasing order;
// every chosen column has been pivoted with fraction-free Gauss-Jordan, so all
// pivot entries equal `det` and the right-hand side holds det * x.
struct Node {
    std::size_t col = 0;
    std::size_t chosen = 0;
    std::size_t excluded = 0;
    std::int64_t det = 1;
    std::uint64_t used_rows = 0;
    std::vector<Pivot> pivots;
    std::vector<std::int64_t> m;
};

class BasisSearch {
public:
    BasisSearch(std::size_t rows, std::size_t vars, std::size_t zeros)
        : rows_(rows), vars_(vars), zeros_(zeros), width_(vars + 1)
    {
    }

    // Applies the decision "column node.col joins the basis". Returns false
    // when the column is dependent on the columns already chosen.
    bool include(const Node& node, Node& out) const
    {
        const std::size_t c = node.col;
        std::size_t r = 0;
        while (r < rows_ && ((node.used_rows >> r) & 1u || node.m[r * width_ + c] == 0)) {
            ++r;
        }
        if (r == rows_) {
            return false;
        }
        const std::int64_t p = node.m[r * width_ + c];
        out.col = c + 1;
        out.chosen = node.chosen + 1;
        out.excluded = node.excluded;
        out.det = p;
        out.used_rows = node.used_rows | (std::uint64_t{1} << r);
        out.pivots = node.pivots;
        out.pivots.push_back({c, r});
        out.m.resize(node.m.size());
        const std::int64_t* pivot_row = &node.m[r * width_];
        for (std::size_t i = 0; i < rows_; ++i) {
            const std::int64_t* src = &node.m[i * width_];
            std::int64_t* dst = &out.m[i * width_];
            if (i == r) {
                std::copy(src + c + 1, src + width_, dst + c + 1);
                continue;
            }
            const std::int64_t f = src[c];
            for (std::size_t j = c + 1; j < width_; ++j) {
                const std::int64_t v = checked_sub(checked_mul(p, src[j]), checked_mul(f, pivot_row[j]));
                dst[j] = v / node.det;
            }
        }
        return true;
    }

    void exclude(const Node& node, Node& out) const
    {
        out = node;
        ++out.col;
        ++out.excluded;
    }

    bool can_include(const Node& node) const { return node.chosen < rows_; }
    bool can_exclude(const Node& node) const { return node.excluded < zeros_; }
    bool complete(const Node& node) const { return node.chosen == rows_; }

    // Depth-first over the remaining decisions. Buffers are indexed by the
    // number of chosen columns, which strictly increases along a path.
    void search(const Node& root, std::set<Key>& found, BruteStats& stats) const
    {
        std::vector<Node> frames(rows_ + 2);
        Node start = root;
        walk(start, frames, found, stats);
    }

    void leaf(const Node& node, std::set<Key>& found, BruteStats& stats) const
    {
        ++stats.bases;
        const int det_sign = node.det > 0 ? 1 : -1;
        for (const Pivot& pv : node.pivots) {
            const std::int64_t rhs = node.m[pv.row * width_ + vars_];
            if (rhs != 0 && (rhs > 0 ? 1 : -1) != det_sign) {
                return;
            }
        }
        ++stats.feasible_bases;
        Key key(vars_ + 1, 0);
        std::int64_t g = 0;
        for (const Pivot& pv : node.pivots) {
            const std::int64_t v = node.m[pv.row * width_ + vars_] * det_sign;
            key[pv.col] = v;
            g = std::gcd(g, v);
        }
        const std::int64_t den = node.det * det_sign;
        g = std::gcd(g, den);
        for (auto& v : key) {
            v /= g;
        }
        key[vars_] = den / g;
        found.insert(std::move(key));
    }

private:
    void walk(Node& node, std::vector<Node>& frames, std::set<Key>& found, BruteStats& stats) const
    {
        if (complete(node)) {
            leaf(node, found, stats);
            return;
        }
        Node& next = frames[node.chosen + 1];
        if (can_include(node) && include(node, next)) {
            walk(next, frames, found, stats);
        }
        if (can_exclude(node)) {
            // Excluding a column leaves the matrix untouched.
            ++node.col;
            ++node.excluded;
            walk(node, frames, found, stats);
            --node.col;
            --node.excluded;
        }
    }

    std::size_t rows_;
    std::size_t vars_;
    std::size_t zeros_;
    std::size_t width_;
};

// Greedy choice of rank(A) rows of A spanning its row space.
std::vector<std::size_t> independent_rows(const HPolytope& poly)
{
    std::vector<std::size_t> picked;
    std::vector<std::vector<BigInt>> current;
    for (std::size_t r = 0; r < poly.num_rows() && picked.size() < poly.rank(); ++r) {
        std::vector<BigInt> row(poly.num_vars());
        for (std::size_t c = 0; c < poly.num_vars(); ++c) {
            row[c] = poly.coeff(r, c);
        }
        current.push_back(row);
        if (rank_exact(current) == current.size()) {
            picked.push_back(r);
        } else {
            current.pop_back();
        }
    }
    return picked;
}

}  // namespace

VertexSet enumerate_vertices_bruteforce(int n, const BruteOptions& options, BruteStats* stats)
{
    const HPolytope poly(n);
    const std::size_t vars = poly.num_vars();
    const std::size_t rank = poly.rank();
    const std::size_t zeros = vars - rank;

    const BigInt candidates = binomial(static_cast<std::int64_t>(vars), static_cast<std::int64_t>(zeros));
    const std::uint64_t budget = options.max_cells.value_or(max_cells_from_env());
    if (candidates > BigInt(std::to_string(budget))) {
        throw ResourceLimitError("brute-force vertex search needs C(" + std::to_string(vars) + "," +
                                 std::to_string(zeros) + ") = " + to_string(candidates) +
                                 " candidate active sets, over the budget of " + std::to_string(budget));
    }
    if (rank > 64) {
        throw ResourceLimitError("brute-force vertex search supports at most 64 independent rows");
    }

    const auto rows = independent_rows(poly);
    Node root;
    root.m.assign(rank * (vars + 1), 0);
    for (std::size_t i = 0; i < rank; ++i) {
        for (std::size_t c = 0; c < vars; ++c) {
            root.m[i * (vars + 1) + c] = poly.coeff(rows[i], c);
        }
        root.m[i * (vars + 1) + vars] = 1;
    }
    const BasisSearch search(rank, vars, zeros);

    // Expand a few levels breadth-first to get independent subtrees.
    std::vector<Node> tasks{root};
    const std::size_t split_depth = std::min<std::size_t>(vars, 8);
    for (std::size_t depth = 0; depth < split_depth; ++depth) {
        std::vector<Node> expanded;
        for (const Node& node : tasks) {
            if (search.complete(node)) {
                expanded.push_back(node);
                continue;
            }
            Node next;
            if (search.can_include(node) && search.include(node, next)) {
                expanded.push_back(std::move(next));
            }
            if (search.can_exclude(node)) {
                search.exclude(node, next);
                expanded.push_back(std::move(next));
            }
        }
        tasks = std::move(expanded);
    }

    unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(tasks.size()));
    std::vector<std::set<Key>> found(threads);
    std::vector<BruteStats> partial(threads);
    std::atomic<std::size_t> next_task{0};
    auto worker = [&](unsigned id) {
        for (std::size_t t = next_task++; t < tasks.size(); t = next_task++) {
            search.search(tasks[t], found[id], partial[id]);
        }
    };
    if (threads <= 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned id = 0; id < threads; ++id) {
            pool.emplace_back(worker, id);
        }
    }

    std::set<Key> merged;
    BruteStats total;
    total.candidate_sets = candidates.get_ui();
    for (unsigned id = 0; id < threads; ++id) {
        merged.insert(found[id].begin(), found[id].end());
        total.bases += partial[id].bases;
        total.feasible_bases += partial[id].feasible_bases;
    }
    if (stats != nullptr) {
        *stats = total;
    }

    std::vector<Tensor3> points;
    for (const Key& key : merged) {
        std::vector<Rational> x(vars);
        for (std::size_t v = 0; v < vars; ++v) {
            x[v] = make_rational(BigInt(static_cast<long>(key[v])), BigInt(static_cast<long>(key[vars])));
        }
        Tensor3 point(n, std::move(x));
        // The reduced row set spans A's row space; confirm against every line.
        if (!is_line_stochastic(point)) {
            throw std::logic_error("brute-force candidate violates a line constraint");
        }
        points.push_back(std::move(point));
    }
    return VertexSet::from_points(std::move(points));
}

}  // namespace stochpoly
