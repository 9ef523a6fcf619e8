#include "stochpoly/polytope.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace stochpoly {

HPolytope::HPolytope(int n) : n_(n)
{
    if (n < 1) {
        throw std::invalid_argument("polytope dimension n must be positive");
    }
    const auto nn = static_cast<std::size_t>(n);
    num_vars_ = nn * nn * nn;
    lines_ = all_lines(n);
    matrix_.assign(lines_.size() * num_vars_, 0);
    for (std::size_t r = 0; r < lines_.size(); ++r) {
        for (std::size_t col : lines_[r].positions(n)) {
            matrix_[r * num_vars_ + col] = 1;
        }
    }
    rhs_.assign(lines_.size(), Rational(1));

    std::vector<std::size_t> all(num_vars_);
    for (std::size_t c = 0; c < num_vars_; ++c) {
        all[c] = c;
    }
    rank_ = column_rank(all);
    const std::size_t expected = 3 * nn * nn - 3 * nn + 1;
    if (rank_ != expected) {
        throw std::logic_error("constraint matrix rank " + std::to_string(rank_) + " != " + std::to_string(expected));
    }
}

std::vector<Rational> HPolytope::apply(std::span<const Rational> x) const
{
    if (x.size() != num_vars_) {
        throw std::invalid_argument("point has wrong length for this polytope");
    }
    std::vector<Rational> out(num_rows(), Rational(0));
    for (std::size_t r = 0; r < num_rows(); ++r) {
        for (std::size_t c = 0; c < num_vars_; ++c) {
            if (coeff(r, c) != 0) {
                out[r] += x[c];
            }
        }
    }
    return out;
}

std::size_t HPolytope::column_rank(std::span<const std::size_t> columns) const
{
    std::vector<std::vector<BigInt>> rows(num_rows(), std::vector<BigInt>(columns.size()));
    for (std::size_t r = 0; r < num_rows(); ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            rows[r][c] = coeff(r, columns[c]);
        }
    }
    return rank_exact(std::move(rows));
}

std::size_t rank_exact(std::vector<std::vector<BigInt>> m)
{
    if (m.empty() || m.front().empty()) {
        return 0;
    }
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    BigInt prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        std::swap(m[pivot], m[rank]);
        const BigInt& p = m[rank][c];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m[r][j] = p * m[r][j] - m[r][c] * m[rank][j];
                mpz_divexact(m[r][j].get_mpz_t(), m[r][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[r][c] = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

std::size_t rank_exact(const HPolytope& p, std::span<const std::size_t> columns)
{
    return p.column_rank(columns);
}

VertexCertificate is_vertex(const HPolytope& p, const Tensor3& t)
{
    if (t.dim() != p.dim_n()) {
        throw std::invalid_argument("tensor dimension does not match the polytope");
    }
    VertexCertificate cert;
    const auto cols = support_flat(t);
    cert.support_size = cols.size();
    cert.rank = p.column_rank(cols);
    auto feasible = is_line_stochastic(t);
    if (!feasible) {
        cert.verdict = VertexVerdict::infeasible;
        cert.violated = std::move(feasible.violation);
    } else {
        cert.verdict = cert.rank == cert.support_size ? VertexVerdict::vertex : VertexVerdict::not_vertex;
    }
    return cert;
}

VertexCertificate is_vertex(const Tensor3& t)
{
    return is_vertex(HPolytope(t.dim()), t);
}

int polytope_dimension(int n)
{
    const HPolytope p(n);
    const auto computed = static_cast<long long>(p.num_vars()) - static_cast<long long>(p.rank());
    const long long formula = static_cast<long long>(n - 1) * (n - 1) * (n - 1);
    if (computed != formula) {
        throw std::logic_error("dimension mismatch: n^3 - rank(A) = " + std::to_string(computed));
    }
    return static_cast<int>(formula);
}

}  // namespace stochpoly
