#include <algorithm>
#include <numeric>
#include <random>

#include <doctest.h>

#include "stochpoly/bounds.hpp"
#include "stochpoly/enumeration.hpp"
#include "stochpoly/polytope.hpp"

using namespace stochpoly;

namespace {

VertexSet latin_vertex_set(int n)
{
    std::vector<Tensor3> pts;
    for (const LatinSquare& s : enumerate_latin_squares(n)) {
        pts.push_back(latin_to_tensor(s));
    }
    return VertexSet::from_points(std::move(pts));
}

const VertexSet& dd3()
{
    static const VertexSet set = enumerate_vertices_dd(3);
    return set;
}

}  // namespace

TEST_SUITE("enumeration")
{
    TEST_CASE("Latin square counts")
    {
        CHECK(count_latin_squares(1) == 1);
        CHECK(count_latin_squares(2) == 2);
        CHECK(count_latin_squares(3) == 12);
        CHECK(count_latin_squares(4) == 576);
        CHECK(count_latin_squares(5) == 161280);
        CHECK(enumerate_latin_squares(3).size() == 12);
        CHECK(enumerate_latin_squares(4).size() == 576);
        CHECK_THROWS_AS(count_latin_squares(0), std::invalid_argument);
        CHECK_THROWS_AS(count_latin_squares(6), ResourceLimitError);
    }

    TEST_CASE("enumerated squares are distinct, valid and sorted")
    {
        const auto squares = enumerate_latin_squares(4);
        CHECK(std::is_sorted(squares.begin(), squares.end()));
        CHECK(std::adjacent_find(squares.begin(), squares.end()) == squares.end());
        CHECK(squares.front() == LatinSquare(4, {1, 2, 3, 4, 2, 1, 4, 3, 3, 4, 1, 2, 4, 3, 2, 1}));
    }

    TEST_CASE("affine parameterization of A x = 1")
    {
        for (int n = 1; n <= 3; ++n) {
            const auto par = parameterize(n);
            const HPolytope p(n);
            const int d = (n - 1) * (n - 1) * (n - 1);
            CHECK(par.dim == static_cast<std::size_t>(d));
            CHECK(p.apply(par.origin) == p.rhs());
            for (std::size_t f = 0; f < par.dim; ++f) {
                std::vector<Rational> dir(p.num_vars());
                for (std::size_t v = 0; v < p.num_vars(); ++v) {
                    dir[v] = par.directions[v][f];
                }
                const auto image = p.apply(dir);
                CHECK(std::all_of(image.begin(), image.end(), [](const Rational& x) { return x == 0; }));
                CHECK(dir[par.free_vars[f]] == 1);
            }
        }
    }

    TEST_CASE("n = 1 and n = 2")
    {
        for (int n = 1; n <= 2; ++n) {
            const VertexSet dd = enumerate_vertices_dd(n);
            const VertexSet brute = enumerate_vertices_bruteforce(n);
            CHECK(dd == brute);
            CHECK(dd == latin_vertex_set(n));
            CHECK(dd.fractional == 0);
        }
        CHECK(enumerate_vertices_dd(1).total() == 1);
        CHECK(enumerate_vertices_dd(2).total() == 2);
        BruteStats stats;
        enumerate_vertices_bruteforce(2, {}, &stats);
        CHECK(stats.candidate_sets == 8);
    }

    TEST_CASE("insertion order does not change the result")
    {
        std::mt19937_64 rng(31);
        for (int n = 2; n <= 3; ++n) {
            const VertexSet reference = enumerate_vertices_dd(n);
            const std::size_t count = static_cast<std::size_t>(n) * n * n + 1;
            for (int trial = 0; trial < (n == 2 ? 20 : 3); ++trial) {
                DdOptions opts;
                opts.insertion_order.resize(count);
                std::iota(opts.insertion_order.begin(), opts.insertion_order.end(), 0);
                std::shuffle(opts.insertion_order.begin(), opts.insertion_order.end(), rng);
                CHECK(enumerate_vertices_dd(n, opts) == reference);
            }
        }
        DdOptions bad;
        bad.insertion_order = {0, 1, 2};
        CHECK_THROWS_AS(enumerate_vertices_dd(2, bad), std::invalid_argument);
    }

    TEST_CASE("n = 3 vertex set")
    {
        const VertexSet& v = dd3();
        const VertexSet latin = latin_vertex_set(3);
        CHECK(v.zero_one == 12);
        for (const Tensor3& t : latin.vertices) {
            CHECK(v.contains(t));
        }
        CHECK(v.contains(example_q()));
        CHECK_FALSE(v.contains(uniform_tensor(3)));
        CHECK(v.total() >= 12);
        CHECK(v.total() <= 10395);
        CHECK(std::is_sorted(v.vertices.begin(), v.vertices.end()));
        const HPolytope p(3);
        for (const Tensor3& t : v.vertices) {
            const auto cert = is_vertex(p, t);
            CHECK(cert.verdict == VertexVerdict::vertex);
            CHECK(cert.support_size >= 9);
            CHECK(cert.support_size <= 19);
        }
    }

    TEST_CASE("n = 3 brute force agrees with double description")
    {
        CHECK(enumerate_vertices_bruteforce(3) == dd3());
        BruteOptions two_threads;
        two_threads.threads = 2;
        CHECK(enumerate_vertices_bruteforce(3, two_threads) == dd3());
    }

    TEST_CASE("vertex set is closed under the index symmetries")
    {
        // Permuting the three axes, or relabelling values along one axis, maps
        // the polytope onto itself, so it must map vertices to vertices.
        const VertexSet& v = dd3();
        for (const Tensor3& t : v.vertices) {
            std::vector<Rational> transposed(27), shifted(27);
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) {
                    for (int k = 0; k < 3; ++k) {
                        transposed[Tensor3::flat_index(3, j, k, i)] = t(i, j, k);
                        shifted[Tensor3::flat_index(3, (i + 1) % 3, j, k)] = t(i, j, k);
                    }
                }
            }
            CHECK(v.contains(Tensor3(3, transposed)));
            CHECK(v.contains(Tensor3(3, shifted)));
        }
    }

    TEST_CASE("vertex count sits between L(n) and the upper bound")
    {
        for (int n = 1; n <= 3; ++n) {
            const BigInt f0(static_cast<unsigned long>(enumerate_vertices_dd(n).total()));
            CHECK(count_latin_squares(n) <= f0);
            CHECK(f0 <= bound_lzz(n));
        }
    }

    TEST_CASE("work caps")
    {
        CHECK_THROWS_AS(enumerate_vertices_bruteforce(4), ResourceLimitError);
        BruteOptions tiny;
        tiny.max_cells = 10;
        CHECK_THROWS_AS(enumerate_vertices_bruteforce(3, tiny), ResourceLimitError);
        DdOptions small;
        small.max_cells = 1000;
        CHECK_THROWS_AS(enumerate_vertices_dd(3, small), ResourceLimitError);
        DdStats stats;
        DdOptions generous;
        generous.max_cells = 100'000'000;
        enumerate_vertices_dd(3, generous, &stats);
        CHECK(stats.work > 1000);
        CHECK(stats.max_rays >= 66);
        CHECK_THROWS_AS(enumerate_vertices_dd(0), std::invalid_argument);
    }
}
