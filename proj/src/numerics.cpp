#include "stochpoly/numerics.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace stochpoly {

BigInt binomial(std::int64_t n, std::int64_t k)
{
    if (n < 0) {
        throw std::invalid_argument("binomial: n must be nonnegative");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt result = 1;
    // After step i, result == C(n - k + i, i); the division is exact.
    for (std::int64_t i = 1; i <= k; ++i) {
        mpz_mul_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(n - k + i));
        mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return result;
}

BigInt factorial(std::int64_t n)
{
    if (n < 0) {
        throw std::invalid_argument("factorial: n must be nonnegative");
    }
    BigInt result = 1;
    for (std::int64_t i = 2; i <= n; ++i) {
        mpz_mul_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return result;
}

Rational rational_pow(const Rational& base, std::int64_t e)
{
    if (e < 0) {
        if (base == 0) {
            throw std::domain_error("rational_pow: zero base with negative exponent");
        }
        return rational_pow(Rational(1) / base, -e);
    }
    const auto exponent = static_cast<unsigned long>(e);
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
    // Powers of coprime integers stay coprime, so no reduction is needed.
    Rational result(num, den);
    return result;
}

Rational make_rational(const BigInt& p, const BigInt& q)
{
    if (q == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value)
{
    return value.get_str(10);
}

std::string to_string(const BigInt& value)
{
    return value.get_str(10);
}

namespace {

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    std::string_view num_text = body;
    std::string_view den_text = "1";
    if (const auto slash = body.find('/'); slash != std::string_view::npos) {
        num_text = body.substr(0, slash);
        den_text = body.substr(slash + 1);
    }
    if (!all_digits(num_text) || !all_digits(den_text)) {
        throw std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
    }
    BigInt num(std::string(num_text), 10);
    BigInt den(std::string(den_text), 10);
    if (den == 0) {
        throw std::invalid_argument("zero denominator in rational: \"" + std::string(text) + "\"");
    }
    if (negative) {
        num = -num;
    }
    return make_rational(num, den);
}

int sign(const Rational& value)
{
    const int s = sgn(value);
    return (s > 0) - (s < 0);
}

int sign(const BigInt& value)
{
    const int s = sgn(value);
    return (s > 0) - (s < 0);
}

}  // namespace stochpoly
