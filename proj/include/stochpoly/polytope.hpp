#pragma once

// H-representation of the polytope of n x n x n line-stochastic tensors,
// {x in R^{n^3} : A x = 1, x >= 0}, and exact vertex certification.
//
// Variable order matches Tensor3's flattening: column ((i*n)+j)*n+k holds
// entry (i,j,k) (0-based). Row r of A is line all_lines(n)[r].

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stochpoly/numerics.hpp"
#include "stochpoly/tensor.hpp"

namespace stochpoly {

class HPolytope {
public:
    /// Builds A and b and verifies rank(A) == 3n^2 - 3n + 1 by exact
    /// elimination; throws std::logic_error if that ever fails.
    explicit HPolytope(int n);

    int dim_n() const noexcept { return n_; }
    std::size_t num_rows() const noexcept { return lines_.size(); }
    std::size_t num_vars() const noexcept { return num_vars_; }

    /// A(row, col) in {0,1}.
    int coeff(std::size_t row, std::size_t col) const { return matrix_[row * num_vars_ + col]; }
    const std::vector<Line>& lines() const noexcept { return lines_; }
    /// Right-hand side; every entry is 1.
    const std::vector<Rational>& rhs() const noexcept { return rhs_; }
    std::size_t rank() const noexcept { return rank_; }

    /// A * x for a flattened point.
    std::vector<Rational> apply(std::span<const Rational> x) const;

    /// Exact rank of the submatrix of A formed by the given columns.
    std::size_t column_rank(std::span<const std::size_t> columns) const;

private:
    int n_;
    std::size_t num_vars_;
    std::vector<Line> lines_;
    std::vector<std::int8_t> matrix_;
    std::vector<Rational> rhs_;
    std::size_t rank_ = 0;
};

/// Rank over the rationals of an integer matrix, by fraction-free (Bareiss)
/// elimination. Rows may be ragged only if empty; an empty matrix has rank 0.
std::size_t rank_exact(std::vector<std::vector<BigInt>> rows);

/// Convenience: rank of the selected columns of the polytope's A.
std::size_t rank_exact(const HPolytope& p, std::span<const std::size_t> columns);

inline HPolytope build_lp_polytope(int n) { return HPolytope(n); }

enum class VertexVerdict { vertex, not_vertex, infeasible };

struct VertexCertificate {
    VertexVerdict verdict = VertexVerdict::infeasible;
    std::size_t support_size = 0;
    std::size_t rank = 0;
    std::optional<StochasticityViolation> violated;
};

/// Vertex iff t is line-stochastic and its support columns of A are
/// linearly independent. The rank is reported for every verdict.
VertexCertificate is_vertex(const HPolytope& p, const Tensor3& t);
VertexCertificate is_vertex(const Tensor3& t);

/// (n-1)^3, checked against n^3 - rank(A).
int polytope_dimension(int n);

}  // namespace stochpoly
