#include <random>
#include <set>

#include <doctest.h>

#include "oracles.hpp"
#include "stochpoly/birkhoff.hpp"

using namespace stochpoly;

namespace {

std::vector<Rational> constant(int n, const Rational& v)
{
    return std::vector<Rational>(static_cast<std::size_t>(n) * n, v);
}

std::vector<Rational> permutation_matrix(const Permutation& p)
{
    const int n = static_cast<int>(p.size());
    std::vector<Rational> m = constant(n, Rational(0));
    for (int r = 0; r < n; ++r) {
        m[static_cast<std::size_t>(r) * n + p[r]] = 1;
    }
    return m;
}

}  // namespace

TEST_SUITE("birkhoff")
{
    TEST_CASE("Caratheodory bound")
    {
        CHECK(caratheodory_bound(1) == 1);
        CHECK(caratheodory_bound(2) == 2);
        CHECK(caratheodory_bound(3) == 5);
        CHECK(caratheodory_bound(8) == 50);
    }

    TEST_CASE("identity")
    {
        for (int n = 1; n <= 5; ++n) {
            Permutation id(n);
            std::iota(id.begin(), id.end(), 0);
            const DoublyStochasticMatrix m(n, permutation_matrix(id));
            CHECK(find_positive_matching(m) == id);
            const Decomposition d = decompose(m);
            REQUIRE(d.terms.size() == 1);
            CHECK(d.terms[0].weight == 1);
            CHECK(d.terms[0].perm == id);
        }
    }

    TEST_CASE("2x2 halves")
    {
        const DoublyStochasticMatrix m(2, constant(2, make_rational(1, 2)));
        CHECK(find_positive_matching(m) == Permutation{0, 1});
        const Decomposition d = decompose(m);
        REQUIRE(d.terms.size() == 2);
        CHECK(d.terms[0].weight == make_rational(1, 2));
        CHECK(d.terms[1].weight == make_rational(1, 2));
        CHECK(d.terms[0].perm == Permutation{0, 1});
        CHECK(d.terms[1].perm == Permutation{1, 0});
    }

    TEST_CASE("3x3 thirds")
    {
        const DoublyStochasticMatrix m(3, constant(3, make_rational(1, 3)));
        const Decomposition d = decompose(m);
        REQUIRE(d.terms.size() == 3);
        std::set<std::pair<int, int>> cells;
        for (const auto& t : d.terms) {
            CHECK(t.weight == make_rational(1, 3));
            for (int r = 0; r < 3; ++r) {
                cells.insert({r, t.perm[r]});
            }
        }
        CHECK(cells.size() == 9);
        CHECK(d.reconstruct() == constant(3, make_rational(1, 3)));
    }

    TEST_CASE("permutation matrices match to themselves")
    {
        Permutation p{0, 1, 2, 3};
        do {
            const DoublyStochasticMatrix m(4, permutation_matrix(p));
            CHECK(find_positive_matching(m) == p);
        } while (std::next_permutation(p.begin(), p.end()));
    }

    TEST_CASE("matching on general patterns")
    {
        const std::vector<Rational> none{Rational(1), Rational(1), Rational(0), Rational(0)};
        CHECK_FALSE(find_positive_matching(2, none).has_value());
        const std::vector<Rational> anti{Rational(0), Rational(1), Rational(1), Rational(0)};
        CHECK(find_positive_matching(2, anti) == Permutation{1, 0});
    }

    TEST_CASE("matching is the least permutation in lexicographic order")
    {
        std::mt19937_64 rng(43);
        for (int trial = 0; trial < 300; ++trial) {
            const int n = std::uniform_int_distribution<int>(1, 5)(rng);
            std::vector<Rational> e(static_cast<std::size_t>(n) * n);
            for (auto& v : e) {
                v = std::bernoulli_distribution(0.55)(rng) ? 1 : 0;
            }
            std::optional<Permutation> expected;
            Permutation p(n);
            std::iota(p.begin(), p.end(), 0);
            do {
                bool ok = true;
                for (int r = 0; r < n && ok; ++r) {
                    ok = e[static_cast<std::size_t>(r) * n + p[r]] > 0;
                }
                if (ok) {
                    expected = p;
                    break;
                }
            } while (std::next_permutation(p.begin(), p.end()));
            CAPTURE(trial);
            CHECK(find_positive_matching(n, e) == expected);
        }
    }

    TEST_CASE("rejects matrices that are not doubly stochastic")
    {
        const std::vector<Rational> cols_off{Rational(1), Rational(0), Rational(1), Rational(0)};
        CHECK_THROWS_AS(DoublyStochasticMatrix(2, cols_off), NotDoublyStochasticError);
        const std::vector<Rational> negative{Rational(2), Rational(-1), Rational(-1), Rational(2)};
        CHECK_THROWS_AS(DoublyStochasticMatrix(2, negative), NotDoublyStochasticError);
        CHECK_THROWS_AS(DoublyStochasticMatrix(2, constant(3, Rational(0))), std::invalid_argument);
        CHECK_THROWS_AS(DoublyStochasticMatrix(0, {}), std::invalid_argument);
    }

    TEST_CASE("random convex combinations decompose within the bound")
    {
        std::mt19937_64 rng(41);
        for (int trial = 0; trial < 150; ++trial) {
            const int n = std::uniform_int_distribution<int>(1, 7)(rng);
            const int terms = std::uniform_int_distribution<int>(1, 12)(rng);
            const auto entries = oracle::random_doubly_stochastic(n, terms, rng);
            const DoublyStochasticMatrix m(n, entries);
            const Decomposition d = decompose(m);
            CAPTURE(trial);
            CHECK(d.terms.size() <= caratheodory_bound(n));
            CHECK(d.reconstruct() == entries);
            Rational total = 0;
            for (const auto& t : d.terms) {
                CHECK(sign(t.weight) > 0);
                total += t.weight;
                Permutation sorted = t.perm;
                std::sort(sorted.begin(), sorted.end());
                for (int i = 0; i < n; ++i) {
                    CHECK(sorted[i] == i);
                }
            }
            CHECK(total == 1);
        }
    }
}
