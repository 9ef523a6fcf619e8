#pragma once

// Latin square enumeration and two independent vertex enumerators for the
// line-stochastic polytope:
//
//  * enumerate_vertices_dd: double description on the (n-1)^3-dimensional
//    affine parameterization of {A x = 1}, inserting the n^3 nonnegativity
//    half-spaces one at a time.
//  * enumerate_vertices_bruteforce: every choice of (n-1)^3 variables forced
//    to zero whose complementary columns of A form a basis; the unique
//    solution is kept when it is nonnegative.
//
// Both return the vertex set in canonical (lexicographic) order.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stochpoly/numerics.hpp"
#include "stochpoly/tensor.hpp"

namespace stochpoly {

/// Thrown when a request exceeds a documented size cap or the work budget.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kMaxLatinOrder = 5;
inline constexpr std::uint64_t kDefaultMaxCells = 50'000'000;

/// Work budget from STOCHPOLY_MAX_CELLS, or kDefaultMaxCells when unset.
/// Brute force is charged its number of candidate active sets up front;
/// double description is charged as it runs (see DdStats::work).
std::uint64_t max_cells_from_env();

/// All Latin squares of order n in lexicographic row-major order.
std::vector<LatinSquare> enumerate_latin_squares(int n);
BigInt count_latin_squares(int n);

struct VertexSet {
    std::vector<Tensor3> vertices;
    std::size_t zero_one = 0;
    std::size_t fractional = 0;

    std::size_t total() const noexcept { return vertices.size(); }
    bool contains(const Tensor3& t) const;

    /// Sorts, removes exact duplicates and recounts.
    static VertexSet from_points(std::vector<Tensor3> points);

    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.vertices == b.vertices; }
};

/// x = origin + directions * y, with y ranging over R^dim. free_vars are the
/// coordinates used as parameters (directions restricted to them is I).
struct AffineParameterization {
    std::size_t dim = 0;
    std::vector<std::size_t> free_vars;
    std::vector<Rational> origin;
    std::vector<std::vector<Rational>> directions;  // one row per variable
};

/// Exact reduced row echelon form of [A | 1] for the order-n polytope.
AffineParameterization parameterize(int n);

struct DdOptions {
    /// Explicit constraint order (a permutation of 0..n^3, where index n^3
    /// is the homogenizing t >= 0). Empty selects the greedy rule: at each
    /// step, the remaining constraint that cuts the fewest current rays.
    std::vector<std::size_t> insertion_order;
    std::optional<std::uint64_t> max_cells;
};

struct DdStats {
    std::size_t max_rays = 0;
    std::size_t steps = 0;
    std::uint64_t work = 0;
};

VertexSet enumerate_vertices_dd(int n, const DdOptions& options = {}, DdStats* stats = nullptr);

struct BruteOptions {
    std::optional<std::uint64_t> max_cells;
    /// 0 means std::thread::hardware_concurrency().
    unsigned threads = 0;
};

struct BruteStats {
    std::uint64_t candidate_sets = 0;
    std::uint64_t bases = 0;
    std::uint64_t feasible_bases = 0;
};

VertexSet enumerate_vertices_bruteforce(int n, const BruteOptions& options = {}, BruteStats* stats = nullptr);

}  // namespace stochpoly
