#pragma once

// Exact feasibility of {lambda : M lambda = rhs, lambda >= 0} by phase-1
// simplex over the rationals. Both outcomes carry a checkable certificate.

#include <cstddef>
#include <span>
#include <vector>

#include "stochpoly/numerics.hpp"
#include "stochpoly/tensor.hpp"

namespace stochpoly {

class LPProblem {
public:
    /// Throws std::invalid_argument on ragged rows or a rhs of the wrong length.
    LPProblem(std::vector<std::vector<Rational>> matrix, std::vector<Rational> rhs);

    std::size_t rows() const noexcept { return matrix_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    const Rational& at(std::size_t r, std::size_t c) const { return matrix_[r][c]; }
    const std::vector<std::vector<Rational>>& matrix() const noexcept { return matrix_; }
    const std::vector<Rational>& rhs() const noexcept { return rhs_; }

private:
    std::vector<std::vector<Rational>> matrix_;
    std::vector<Rational> rhs_;
    std::size_t cols_ = 0;
};

enum class Feasibility { feasible, infeasible };

struct FeasibilityResult {
    Feasibility status = Feasibility::infeasible;
    /// feasible: lambda >= 0 with M lambda = rhs.
    std::vector<Rational> witness;
    /// infeasible: y with y^T M >= 0 componentwise and y^T rhs < 0.
    std::vector<Rational> certificate;
    std::size_t pivots = 0;

    bool feasible() const noexcept { return status == Feasibility::feasible; }
};

/// Phase-1 simplex with Bland's least-index rule. Deterministic; the returned
/// witness or certificate has already been re-verified exactly.
FeasibilityResult solve_feasibility(const LPProblem& problem);

bool verify_witness(const LPProblem& problem, std::span<const Rational> lambda);
bool verify_farkas(const LPProblem& problem, std::span<const Rational> y);

/// Builds the system sum_m lambda_m G_m = t (entrywise, n^3 rows) plus
/// sum_m lambda_m = 1, and solves it. Generators must be (0,1)
/// line-stochastic tensors of t's dimension; throws std::invalid_argument
/// otherwise.
LPProblem permutation_hull_system(const Tensor3& t, std::span<const Tensor3> generators);
FeasibilityResult in_permutation_hull(const Tensor3& t, std::span<const Tensor3> generators);

}  // namespace stochpoly
