#include "stochpoly/bounds.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "stochpoly/enumeration.hpp"

namespace stochpoly {

namespace {

void require_positive(std::int64_t n)
{
    if (n < 1) {
        throw std::invalid_argument("bounds are defined for n >= 1");
    }
}

std::int64_t cube(std::int64_t n)
{
    return n * n * n;
}

// Floors of nonnegative values only, so integer division is exact floor.
std::int64_t lzz_top(std::int64_t n, std::int64_t offset)
{
    return cube(n) - (cube(n - 1) + offset) / 2;
}

// sum_{k=lo}^{hi} C(top, k), and C(top, hi) as a by-product.
std::pair<BigInt, BigInt> binomial_range_sum(std::int64_t top, std::int64_t lo, std::int64_t hi)
{
    BigInt sum = 0;
    BigInt term = binomial(top, lo);
    for (std::int64_t k = lo; k <= hi; ++k) {
        sum += term;
        if (k == hi) {
            break;
        }
        // C(top, k+1) = C(top, k) * (top - k) / (k + 1)
        mpz_mul_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(top - k));
        mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(k + 1));
    }
    return {sum, term};
}

std::optional<BigInt> latin_count_if_small(std::int64_t n)
{
    if (n > kMaxLatinOrder) {
        return std::nullopt;
    }
    static std::mutex mutex;
    static std::map<std::int64_t, BigInt> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, count_latin_squares(static_cast<int>(n))).first;
    }
    return it->second;
}

}  // namespace

std::int64_t cpz_top(std::int64_t n)
{
    return cube(n) + 6 * n * n - 6 * n + 2;
}

std::int64_t constraint_rank(std::int64_t n)
{
    return 3 * n * n - 3 * n + 1;
}

Rational bound_cpz(std::int64_t n)
{
    require_positive(n);
    return make_rational(binomial(cpz_top(n), cube(n) - 1), BigInt(static_cast<long>(cube(n))));
}

BigInt bound_lzz(std::int64_t n)
{
    require_positive(n);
    const std::int64_t k = constraint_rank(n);
    return binomial(lzz_top(n, 1), k) + binomial(lzz_top(n, 2), k);
}

BigInt bound_zz_opt(std::int64_t n)
{
    require_positive(n);
    return binomial_range_sum(cube(n), n * n, constraint_rank(n)).first;
}

BigInt bound_zz_half(std::int64_t n)
{
    require_positive(n);
    return binomial(cube(n) + constraint_rank(n), cube(n));
}

Rational bound_lower(std::int64_t n)
{
    require_positive(n);
    const Rational f = factorial(n);
    return rational_pow(f, 2 * n) / rational_pow(Rational(static_cast<long>(n)), n * n);
}

Rational BoundReport::lower() const
{
    return latin_count ? Rational(*latin_count) : lower_formula;
}

bool BoundReport::all_hold() const
{
    return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.holds; });
}

BoundReport bound_report(std::int64_t n)
{
    require_positive(n);
    BoundReport report;
    report.n = n;
    report.lower_formula = bound_lower(n);
    report.latin_count = latin_count_if_small(n);
    report.cpz = bound_cpz(n);
    report.lzz = bound_lzz(n);
    auto [sum, top_term] = binomial_range_sum(cube(n), n * n, constraint_rank(n));
    report.zz_opt = std::move(sum);
    report.middle = std::move(top_term);
    report.zz_half = bound_zz_half(n);
    report.cpz_before_lzz = report.cpz <= Rational(report.lzz);

    std::vector<OrderEntry> order{
        {"lower", report.lower(), false},
        {"cpz", report.cpz, false},
        {"lzz", Rational(report.lzz), false},
        {"zz_opt", Rational(report.zz_opt), false},
        {"zz_half", Rational(report.zz_half), false},
    };
    std::stable_sort(order.begin(), order.end(),
                     [](const OrderEntry& a, const OrderEntry& b) { return a.value < b.value; });
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        order[i].strict_before_next = order[i].value < order[i + 1].value;
    }
    report.ordering = std::move(order);
    return report;
}

BoundReport verify_chain(std::int64_t n)
{
    if (n < 2) {
        throw std::invalid_argument("verify_chain requires n >= 2");
    }
    BoundReport r = bound_report(n);
    const Rational lzz(r.lzz);
    auto& checks = r.checks;
    checks.push_back({"lzz < C(n^3, 3n^2-3n+1)", r.lzz < r.middle});
    checks.push_back({"C(n^3, 3n^2-3n+1) < zz_opt", r.middle < r.zz_opt});
    checks.push_back({"zz_opt < zz_half", r.zz_opt < r.zz_half});
    checks.push_back({"lzz <= cpz", lzz <= r.cpz});
    checks.push_back({"lower <= lzz", r.lower() <= lzz});
    if (r.latin_count) {
        checks.push_back({"(n!)^(2n)/n^(n^2) <= L(n)", r.lower_formula <= Rational(*r.latin_count)});
    }
    checks.push_back({"zz_half < C(n^3+3n^2, n^3)", r.zz_half < binomial(cube(n) + 3 * n * n, cube(n))});
    return r;
}

LemmaCheck check_lemma_2ab(std::int64_t a, std::int64_t b, std::int64_t k)
{
    if (a < 1 || b < 1 || k < 1) {
        throw std::invalid_argument("check_lemma_2ab: a, b, k must be positive");
    }
    LemmaCheck c{a, b, k, false, false};
    c.hypothesis_satisfied = k >= 2 && a > b && b * (k + 1) > a + k;
    c.inequality_holds = 2 * binomial(a, b) < binomial(a + k, b);
    return c;
}

LemmaCheck check_hockey_stick(std::int64_t a, std::int64_t b, std::int64_t m)
{
    if (a < 0 || b < 0 || m < 0) {
        throw std::invalid_argument("check_hockey_stick: a, b, m must be nonnegative");
    }
    LemmaCheck c{a, b, m, b + m <= a, false};
    BigInt sum = 0;
    for (std::int64_t i = 0; i <= m; ++i) {
        sum += binomial(a, b + i);
    }
    c.inequality_holds = sum <= binomial(a + m, b + m);
    return c;
}

SweepSummary sweep_lemma_2ab(std::int64_t max_a, std::int64_t max_k)
{
    SweepSummary s;
    for (std::int64_t a = 1; a <= max_a; ++a) {
        for (std::int64_t b = 1; b <= max_a; ++b) {
            for (std::int64_t k = 1; k <= max_k; ++k) {
                const LemmaCheck c = check_lemma_2ab(a, b, k);
                ++s.cases;
                if (c.hypothesis_satisfied) {
                    ++s.hypothesis_cases;
                    if (!c.inequality_holds) {
                        s.failures.push_back(c);
                    }
                }
            }
        }
    }
    return s;
}

SweepSummary sweep_hockey_stick(std::int64_t max_a)
{
    SweepSummary s;
    for (std::int64_t a = 0; a <= max_a; ++a) {
        for (std::int64_t b = 0; b <= a; ++b) {
            for (std::int64_t m = 0; b + m <= a; ++m) {
                const LemmaCheck c = check_hockey_stick(a, b, m);
                ++s.cases;
                ++s.hypothesis_cases;
                if (!c.inequality_holds) {
                    s.failures.push_back(c);
                }
            }
        }
    }
    return s;
}

}  // namespace stochpoly
