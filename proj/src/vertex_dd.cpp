#include <algorithm>
#include <numeric>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "stochpoly/enumeration.hpp"
#include "stochpoly/polytope.hpp"

namespace stochpoly {

AffineParameterization parameterize(int n)
{
    const HPolytope poly(n);
    const std::size_t rows = poly.num_rows();
    const std::size_t vars = poly.num_vars();

    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(vars + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < vars; ++c) {
            m[r][c] = poly.coeff(r, c);
        }
        m[r][vars] = poly.rhs()[r];
    }

    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < vars && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && m[p][c] == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(m[p], m[rank]);
        const Rational pivot = m[rank][c];
        for (auto& v : m[rank]) {
            v /= pivot;
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) {
                continue;
            }
            const Rational factor = m[r][c];
            for (std::size_t j = c; j <= vars; ++j) {
                m[r][j] -= factor * m[rank][j];
            }
        }
        pivot_cols.push_back(c);
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r) {
        if (m[r][vars] != 0) {
            throw std::logic_error("line-sum system is inconsistent");
        }
    }

    AffineParameterization param;
    std::vector<bool> is_pivot(vars, false);
    for (std::size_t c : pivot_cols) {
        is_pivot[c] = true;
    }
    std::vector<std::size_t> free_slot(vars, 0);
    for (std::size_t c = 0; c < vars; ++c) {
        if (!is_pivot[c]) {
            free_slot[c] = param.free_vars.size();
            param.free_vars.push_back(c);
        }
    }
    param.dim = param.free_vars.size();
    param.origin.assign(vars, Rational(0));
    param.directions.assign(vars, std::vector<Rational>(param.dim, Rational(0)));
    for (std::size_t f : param.free_vars) {
        param.directions[f][free_slot[f]] = 1;
    }
    for (std::size_t r = 0; r < rank; ++r) {
        const std::size_t pc = pivot_cols[r];
        param.origin[pc] = m[r][vars];
        for (std::size_t f : param.free_vars) {
            param.directions[pc][free_slot[f]] = -m[r][f];
        }
    }
    return param;
}

namespace {

using Bits = boost::dynamic_bitset<>;
using IntVec = std::vector<BigInt>;

struct Ray {
    IntVec coords;  // (t, y_1, ..., y_d)
    Bits tight;     // processed constraints satisfied with equality
};

BigInt dot(const IntVec& a, const IntVec& b)
{
    BigInt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && b[i] != 0) {
            s += a[i] * b[i];
        }
    }
    return s;
}

void make_primitive(IntVec& v)
{
    BigInt g = 0;
    for (const auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    if (g > 1) {
        for (auto& x : v) {
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        }
    }
}

IntVec scaled_to_integers(const std::vector<Rational>& v)
{
    BigInt l = 1;
    for (const auto& x : v) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i].get_num() * (l / v[i].get_den());
    }
    make_primitive(out);
    return out;
}

// Homogenized constraint rows: (origin_v, directions_v) . (t, y) >= 0 for each
// variable v, then t >= 0 as the last row.
std::vector<IntVec> homogenized_constraints(const AffineParameterization& p)
{
    std::vector<IntVec> rows;
    for (std::size_t v = 0; v < p.origin.size(); ++v) {
        std::vector<Rational> row;
        row.reserve(p.dim + 1);
        row.push_back(p.origin[v]);
        row.insert(row.end(), p.directions[v].begin(), p.directions[v].end());
        rows.push_back(scaled_to_integers(row));
    }
    IntVec t_row(p.dim + 1, 0);
    t_row[0] = 1;
    rows.push_back(std::move(t_row));
    return rows;
}

class DoubleDescription {
public:
    DoubleDescription(std::vector<IntVec> constraints, std::size_t space_dim, std::uint64_t max_cells)
        : constraints_(std::move(constraints)), space_dim_(space_dim), max_cells_(max_cells)
    {
    }

    // Picks the first space_dim independent constraints in `order` as the
    // initial simplicial cone; returns the rest in their original order.
    std::vector<std::size_t> initialize(const std::vector<std::size_t>& order)
    {
        std::vector<std::size_t> basis;
        std::vector<std::size_t> rest;
        std::vector<std::vector<Rational>> echelon;  // reduced copies of accepted rows
        std::vector<std::size_t> echelon_pivot;
        for (std::size_t idx : order) {
            if (basis.size() == space_dim_) {
                rest.push_back(idx);
                continue;
            }
            std::vector<Rational> row(constraints_[idx].begin(), constraints_[idx].end());
            for (std::size_t e = 0; e < echelon.size(); ++e) {
                const std::size_t pc = echelon_pivot[e];
                if (row[pc] != 0) {
                    const Rational factor = row[pc] / echelon[e][pc];
                    for (std::size_t j = 0; j < space_dim_; ++j) {
                        row[j] -= factor * echelon[e][j];
                    }
                }
            }
            const auto nz = std::find_if(row.begin(), row.end(), [](const Rational& x) { return x != 0; });
            if (nz == row.end()) {
                rest.push_back(idx);
                continue;
            }
            echelon_pivot.push_back(static_cast<std::size_t>(nz - row.begin()));
            echelon.push_back(std::move(row));
            basis.push_back(idx);
        }
        if (basis.size() != space_dim_) {
            throw std::logic_error("constraint system does not define a pointed cone");
        }

        // Rays are the columns of B^{-1}: B r_j = e_j.
        std::vector<std::vector<Rational>> aug(space_dim_, std::vector<Rational>(2 * space_dim_, Rational(0)));
        for (std::size_t r = 0; r < space_dim_; ++r) {
            for (std::size_t c = 0; c < space_dim_; ++c) {
                aug[r][c] = constraints_[basis[r]][c];
            }
            aug[r][space_dim_ + r] = 1;
        }
        for (std::size_t c = 0; c < space_dim_; ++c) {
            std::size_t p = c;
            while (aug[p][c] == 0) {
                ++p;
            }
            std::swap(aug[p], aug[c]);
            const Rational pivot = aug[c][c];
            for (auto& v : aug[c]) {
                v /= pivot;
            }
            for (std::size_t r = 0; r < space_dim_; ++r) {
                if (r != c && aug[r][c] != 0) {
                    const Rational factor = aug[r][c];
                    for (std::size_t j = 0; j < 2 * space_dim_; ++j) {
                        aug[r][j] -= factor * aug[c][j];
                    }
                }
            }
        }
        for (std::size_t j = 0; j < space_dim_; ++j) {
            std::vector<Rational> col(space_dim_);
            for (std::size_t r = 0; r < space_dim_; ++r) {
                col[r] = aug[r][space_dim_ + j];
            }
            Ray ray{scaled_to_integers(col), Bits(constraints_.size())};
            for (std::size_t b = 0; b < space_dim_; ++b) {
                if (b != j) {
                    ray.tight.set(basis[b]);
                }
            }
            rays_.push_back(std::move(ray));
        }
        return rest;
    }

    void insert(std::size_t h)
    {
        const IntVec& g = constraints_[h];
        std::vector<std::size_t> pos;
        std::vector<std::size_t> neg;
        std::vector<Ray> next;
        for (std::size_t r = 0; r < rays_.size(); ++r) {
            const int s = sgn(dot(g, rays_[r].coords));
            if (s > 0) {
                pos.push_back(r);
            } else if (s < 0) {
                neg.push_back(r);
            }
            if (s >= 0) {
                Ray kept = rays_[r];
                if (s == 0) {
                    kept.tight.set(h);
                }
                next.push_back(std::move(kept));
            }
        }
        std::vector<BigInt> value(rays_.size());
        for (std::size_t r : pos) {
            value[r] = dot(g, rays_[r].coords);
        }
        for (std::size_t r : neg) {
            value[r] = dot(g, rays_[r].coords);
        }
        for (std::size_t p : pos) {
            for (std::size_t q : neg) {
                charge(1);
                Bits common = rays_[p].tight & rays_[q].tight;
                if (!adjacent(common, p, q)) {
                    continue;
                }
                IntVec coords(space_dim_);
                for (std::size_t i = 0; i < space_dim_; ++i) {
                    coords[i] = value[p] * rays_[q].coords[i] - value[q] * rays_[p].coords[i];
                }
                make_primitive(coords);
                common.set(h);
                next.push_back(Ray{std::move(coords), std::move(common)});
                charge(constraints_.size());
            }
        }
        rays_ = std::move(next);
    }

    std::uint64_t work() const noexcept { return work_; }

    std::size_t count_cut(std::size_t h) const
    {
        std::size_t cut = 0;
        for (const Ray& r : rays_) {
            if (sgn(dot(constraints_[h], r.coords)) < 0) {
                ++cut;
            }
        }
        return cut;
    }

    const std::vector<Ray>& rays() const noexcept { return rays_; }

private:
    // Combinatorial adjacency: no third ray is tight on every constraint p and
    // q share. The cardinality check is a necessary condition that skips most
    // pairs early.
    bool adjacent(const Bits& common, std::size_t p, std::size_t q)
    {
        if (common.count() + 2 < space_dim_) {
            return false;
        }
        charge(rays_.size());
        for (std::size_t r = 0; r < rays_.size(); ++r) {
            if (r != p && r != q && common.is_subset_of(rays_[r].tight)) {
                return false;
            }
        }
        return true;
    }

    // Work is counted in ray-constraint cells: one per pair considered, one
    // per ray scanned in an adjacency test, and one per stored tight bit.
    void charge(std::uint64_t cells)
    {
        work_ += cells;
        if (work_ > max_cells_) {
            throw ResourceLimitError("double description exceeded the work budget of " + std::to_string(max_cells_) +
                                     " cells with " + std::to_string(rays_.size()) +
                                     " live rays; raise STOCHPOLY_MAX_CELLS to continue");
        }
    }

    std::vector<IntVec> constraints_;
    std::size_t space_dim_;
    std::uint64_t max_cells_;
    std::uint64_t work_ = 0;
    std::vector<Ray> rays_;
};

}  // namespace

VertexSet enumerate_vertices_dd(int n, const DdOptions& options, DdStats* stats)
{
    const AffineParameterization param = parameterize(n);
    auto constraints = homogenized_constraints(param);
    const std::size_t count = constraints.size();

    std::vector<std::size_t> order = options.insertion_order;
    if (order.empty()) {
        order.resize(count);
        std::iota(order.begin(), order.end(), std::size_t{0});
    } else {
        std::vector<std::size_t> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < count; ++i) {
            if (sorted.size() != count || sorted[i] != i) {
                throw std::invalid_argument("insertion order must be a permutation of 0.." + std::to_string(count - 1));
            }
        }
    }
    const bool greedy = options.insertion_order.empty();

    DoubleDescription dd(std::move(constraints), param.dim + 1, options.max_cells.value_or(max_cells_from_env()));
    std::vector<std::size_t> pending = dd.initialize(order);
    DdStats local;
    local.max_rays = dd.rays().size();
    while (!pending.empty()) {
        std::size_t pick = 0;
        if (greedy) {
            std::size_t best = dd.count_cut(pending[0]);
            for (std::size_t i = 1; i < pending.size() && best > 0; ++i) {
                const std::size_t cut = dd.count_cut(pending[i]);
                if (cut < best) {
                    best = cut;
                    pick = i;
                }
            }
        }
        const std::size_t h = pending[pick];
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));
        dd.insert(h);
        ++local.steps;
        local.max_rays = std::max(local.max_rays, dd.rays().size());
    }
    local.work = dd.work();
    if (stats != nullptr) {
        *stats = local;
    }

    std::vector<Tensor3> points;
    points.reserve(dd.rays().size());
    for (const Ray& ray : dd.rays()) {
        if (sgn(ray.coords[0]) <= 0) {
            throw std::logic_error("double description produced an unbounded direction");
        }
        std::vector<Rational> y(param.dim);
        for (std::size_t i = 0; i < param.dim; ++i) {
            y[i] = make_rational(ray.coords[i + 1], ray.coords[0]);
        }
        std::vector<Rational> x(param.origin.size());
        for (std::size_t v = 0; v < x.size(); ++v) {
            Rational value = param.origin[v];
            for (std::size_t i = 0; i < param.dim; ++i) {
                if (param.directions[v][i] != 0) {
                    value += param.directions[v][i] * y[i];
                }
            }
            x[v] = std::move(value);
        }
        points.emplace_back(n, std::move(x));
    }
    return VertexSet::from_points(std::move(points));
}

}  // namespace stochpoly
