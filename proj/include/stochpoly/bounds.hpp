#pragma once

// Exact values of the known upper bounds on the number of vertices of the
// line-stochastic polytope, the Latin-square lower bound, and the inequalities
// that relate them.
//
//   cpz      (1/n^3) C(n^3 + 6n^2 - 6n + 2, n^3 - 1)       hyperplanes/induction
//   lzz      C(n^3 - floor(((n-1)^3+1)/2), 3n^2-3n+1)
//          + C(n^3 - floor(((n-1)^3+2)/2), 3n^2-3n+1)      upper bound theorem
//   zz_opt   sum_{k=n^2}^{3n^2-3n+1} C(n^3, k)               linear programming
//   zz_half  C(n^3 + 3n^2 - 3n + 1, n^3)                     half-spaces
//   lower    (n!)^{2n} / n^{n^2}  <=  L(n)  <=  f_0

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stochpoly/numerics.hpp"

namespace stochpoly {

inline constexpr int kDefaultSweepMax = 50;

/// n^3 + 6n^2 - 6n + 2.
std::int64_t cpz_top(std::int64_t n);
/// 3n^2 - 3n + 1, the rank of the line-sum system.
std::int64_t constraint_rank(std::int64_t n);

Rational bound_cpz(std::int64_t n);
BigInt bound_lzz(std::int64_t n);
BigInt bound_zz_opt(std::int64_t n);
BigInt bound_zz_half(std::int64_t n);
Rational bound_lower(std::int64_t n);

struct NamedCheck {
    std::string name;
    bool holds = false;
};

struct OrderEntry {
    std::string id;
    Rational value;
    /// True when this value is strictly below the next entry.
    bool strict_before_next = false;
};

struct BoundReport {
    std::int64_t n = 0;
    Rational lower_formula;
    std::optional<BigInt> latin_count;  // L(n) when n is small enough to count
    Rational cpz;
    BigInt lzz;
    BigInt middle;  // C(n^3, 3n^2-3n+1)
    BigInt zz_opt;
    BigInt zz_half;
    std::vector<NamedCheck> checks;
    std::vector<OrderEntry> ordering;
    /// Whether cpz <= lzz, the left-to-right order in which the summary chain
    /// of the bounds is usually displayed. The exact values put lzz far below
    /// cpz for n >= 2; this flag surfaces that instead of asserting it.
    bool cpz_before_lzz = false;

    /// L(n) when available, otherwise the closed-form lower bound.
    Rational lower() const;
    bool all_hold() const;
};

/// All five quantities plus the empirical order, with no assertions. n >= 1.
BoundReport bound_report(std::int64_t n);

/// bound_report plus the asserted relations (n >= 2):
///   lzz < C(n^3, 3n^2-3n+1) < zz_opt < zz_half,  lzz <= cpz,
///   lower <= lzz,  lower_formula <= L(n) when counted,
///   zz_half < C(n^3 + 3n^2, n^3).
BoundReport verify_chain(std::int64_t n);

struct LemmaCheck {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t k = 0;  // k for the doubling lemma, m for the hockey stick
    bool hypothesis_satisfied = false;
    bool inequality_holds = false;
};

/// Hypothesis: k >= 2, a > b, b(k+1) > a+k. Conclusion: 2 C(a,b) < C(a+k,b).
LemmaCheck check_lemma_2ab(std::int64_t a, std::int64_t b, std::int64_t k);

/// Hypothesis: a, b, m >= 0 and b+m <= a.
/// Conclusion: sum_{i=0}^{m} C(a, b+i) <= C(a+m, b+m).
LemmaCheck check_hockey_stick(std::int64_t a, std::int64_t b, std::int64_t m);

struct SweepSummary {
    std::int64_t cases = 0;
    std::int64_t hypothesis_cases = 0;
    std::vector<LemmaCheck> failures;
};

/// Every (a, b, k) with 1 <= a, b <= max_a and 1 <= k <= max_k. Only cases
/// meeting the hypothesis count as failures.
SweepSummary sweep_lemma_2ab(std::int64_t max_a, std::int64_t max_k);
/// Every (a, b, m) with a <= max_a, b, m >= 0, b+m <= a.
SweepSummary sweep_hockey_stick(std::int64_t max_a);

}  // namespace stochpoly
