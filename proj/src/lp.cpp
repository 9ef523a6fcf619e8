#include "stochpoly/lp.hpp"

#include <optional>
#include <stdexcept>

namespace stochpoly {

LPProblem::LPProblem(std::vector<std::vector<Rational>> matrix, std::vector<Rational> rhs)
    : matrix_(std::move(matrix)), rhs_(std::move(rhs))
{
    if (matrix_.size() != rhs_.size()) {
        throw std::invalid_argument("LPProblem: rhs length differs from row count");
    }
    cols_ = matrix_.empty() ? 0 : matrix_.front().size();
    for (const auto& row : matrix_) {
        if (row.size() != cols_) {
            throw std::invalid_argument("LPProblem: ragged constraint matrix");
        }
    }
}

namespace {

// Dense tableau for min sum(artificials) s.t. [M' | I] z = b', z >= 0, where
// row r of M' and b' is row r of M and rhs negated when rhs_r < 0.
class PhaseOne {
public:
    explicit PhaseOne(const LPProblem& p) : m_(p.rows()), n_(p.cols()), flip_(m_, 1)
    {
        const std::size_t width = n_ + m_ + 1;
        tab_.assign(m_, std::vector<Rational>(width, Rational(0)));
        basis_.resize(m_);
        for (std::size_t r = 0; r < m_; ++r) {
            flip_[r] = sgn(p.rhs()[r]) < 0 ? -1 : 1;
            for (std::size_t c = 0; c < n_; ++c) {
                tab_[r][c] = flip_[r] * p.at(r, c);
            }
            tab_[r][n_ + r] = 1;
            tab_[r][width - 1] = flip_[r] * p.rhs()[r];
            basis_[r] = n_ + r;
        }
    }

    std::size_t run()
    {
        std::size_t pivots = 0;
        while (true) {
            const auto entering = entering_column();
            if (!entering) {
                return pivots;
            }
            const auto leaving = leaving_row(*entering);
            // Phase 1 is bounded below by 0, so a ratio test always succeeds.
            if (!leaving) {
                throw std::logic_error("phase-1 simplex reported an unbounded direction");
            }
            pivot(*leaving, *entering);
            ++pivots;
        }
    }

    Rational objective() const
    {
        Rational value = 0;
        for (std::size_t r = 0; r < m_; ++r) {
            if (is_artificial(basis_[r])) {
                value += rhs(r);
            }
        }
        return value;
    }

    std::vector<Rational> primal() const
    {
        std::vector<Rational> x(n_, Rational(0));
        for (std::size_t r = 0; r < m_; ++r) {
            if (!is_artificial(basis_[r])) {
                x[basis_[r]] = rhs(r);
            }
        }
        return x;
    }

    // Simplex multipliers y = c_B^T B^{-1}; B^{-1} sits in the artificial
    // columns because they started as the identity.
    std::vector<Rational> duals() const
    {
        std::vector<Rational> y(m_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t r = 0; r < m_; ++r) {
                if (is_artificial(basis_[r])) {
                    y[i] += tab_[r][n_ + i];
                }
            }
        }
        return y;
    }

    int flip(std::size_t r) const { return flip_[r]; }

private:
    bool is_artificial(std::size_t col) const { return col >= n_; }
    const Rational& rhs(std::size_t r) const { return tab_[r].back(); }

    Rational reduced_cost(std::size_t col) const
    {
        Rational cost = is_artificial(col) ? 1 : 0;
        for (std::size_t r = 0; r < m_; ++r) {
            if (is_artificial(basis_[r])) {
                cost -= tab_[r][col];
            }
        }
        return cost;
    }

    std::optional<std::size_t> entering_column() const
    {
        std::vector<bool> basic(n_ + m_, false);
        for (std::size_t b : basis_) {
            basic[b] = true;
        }
        for (std::size_t col = 0; col < n_ + m_; ++col) {
            if (!basic[col] && sgn(reduced_cost(col)) < 0) {
                return col;
            }
        }
        return std::nullopt;
    }

    std::optional<std::size_t> leaving_row(std::size_t col) const
    {
        std::optional<std::size_t> best;
        Rational best_ratio;
        for (std::size_t r = 0; r < m_; ++r) {
            if (sgn(tab_[r][col]) <= 0) {
                continue;
            }
            Rational ratio = rhs(r) / tab_[r][col];
            if (!best || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[*best])) {
                best = r;
                best_ratio = std::move(ratio);
            }
        }
        return best;
    }

    void pivot(std::size_t row, std::size_t col)
    {
        const Rational p = tab_[row][col];
        for (auto& v : tab_[row]) {
            v /= p;
        }
        for (std::size_t r = 0; r < m_; ++r) {
            if (r == row || tab_[r][col] == 0) {
                continue;
            }
            const Rational factor = tab_[r][col];
            for (std::size_t c = 0; c < tab_[r].size(); ++c) {
                if (tab_[row][c] != 0) {
                    tab_[r][c] -= factor * tab_[row][c];
                }
            }
        }
        basis_[row] = col;
    }

    std::size_t m_;
    std::size_t n_;
    std::vector<int> flip_;
    std::vector<std::vector<Rational>> tab_;
    std::vector<std::size_t> basis_;
};

}  // namespace

FeasibilityResult solve_feasibility(const LPProblem& problem)
{
    PhaseOne lp(problem);
    FeasibilityResult result;
    result.pivots = lp.run();
    if (lp.objective() == 0) {
        result.status = Feasibility::feasible;
        result.witness = lp.primal();
        if (!verify_witness(problem, result.witness)) {
            throw std::logic_error("simplex witness failed re-verification");
        }
    } else {
        result.status = Feasibility::infeasible;
        auto y = lp.duals();
        // Optimality gives y^T M' <= 0 and y^T b' > 0; negate and undo the row flips.
        for (std::size_t r = 0; r < y.size(); ++r) {
            y[r] = -lp.flip(r) * y[r];
        }
        result.certificate = std::move(y);
        if (!verify_farkas(problem, result.certificate)) {
            throw std::logic_error("Farkas certificate failed re-verification");
        }
    }
    return result;
}

bool verify_witness(const LPProblem& problem, std::span<const Rational> lambda)
{
    if (lambda.size() != problem.cols()) {
        return false;
    }
    for (const Rational& v : lambda) {
        if (sgn(v) < 0) {
            return false;
        }
    }
    for (std::size_t r = 0; r < problem.rows(); ++r) {
        Rational lhs = 0;
        for (std::size_t c = 0; c < problem.cols(); ++c) {
            lhs += problem.at(r, c) * lambda[c];
        }
        if (lhs != problem.rhs()[r]) {
            return false;
        }
    }
    return true;
}

bool verify_farkas(const LPProblem& problem, std::span<const Rational> y)
{
    if (y.size() != problem.rows()) {
        return false;
    }
    for (std::size_t c = 0; c < problem.cols(); ++c) {
        Rational combo = 0;
        for (std::size_t r = 0; r < problem.rows(); ++r) {
            combo += y[r] * problem.at(r, c);
        }
        if (sgn(combo) < 0) {
            return false;
        }
    }
    Rational value = 0;
    for (std::size_t r = 0; r < problem.rows(); ++r) {
        value += y[r] * problem.rhs()[r];
    }
    return sgn(value) < 0;
}

LPProblem permutation_hull_system(const Tensor3& t, std::span<const Tensor3> generators)
{
    for (const Tensor3& g : generators) {
        if (g.dim() != t.dim()) {
            throw std::invalid_argument("generator dimension does not match the tensor");
        }
        if (!g.is_zero_one() || !is_line_stochastic(g)) {
            throw std::invalid_argument("generators must be (0,1) line-stochastic tensors");
        }
    }
    const std::size_t cells = t.size();
    std::vector<std::vector<Rational>> matrix(cells + 1, std::vector<Rational>(generators.size()));
    std::vector<Rational> rhs(cells + 1);
    for (std::size_t f = 0; f < cells; ++f) {
        for (std::size_t m = 0; m < generators.size(); ++m) {
            matrix[f][m] = generators[m][f];
        }
        rhs[f] = t[f];
    }
    for (std::size_t m = 0; m < generators.size(); ++m) {
        matrix[cells][m] = 1;
    }
    rhs[cells] = 1;
    return LPProblem(std::move(matrix), std::move(rhs));
}

FeasibilityResult in_permutation_hull(const Tensor3& t, std::span<const Tensor3> generators)
{
    return solve_feasibility(permutation_hull_system(t, generators));
}

}  // namespace stochpoly
