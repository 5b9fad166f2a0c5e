#include <prodmake/exactnum.hpp>

#include <algorithm>
#include <cctype>
#include <ostream>

#include <prodmake/error.hpp>

namespace prodmake
{

namespace
{

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

BigInt parse_integer(std::string_view s, std::string_view whole)
{
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        i = 1;
    }
    if (i == s.size()) {
        throw InvalidArgument("malformed rational '" + std::string(whole) + "'");
    }
    for (std::size_t j = i; j < s.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
            throw InvalidArgument("malformed rational '" + std::string(whole) + "'");
        }
    }
    std::string digits(s.substr(s[0] == '+' ? 1 : 0));
    return BigInt(digits, 10);
}

} // namespace

Rational::Rational(const BigInt &num, const BigInt &den)
{
    if (den == 0) {
        throw InvalidArgument("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const auto s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(s, text));
    }
    auto num = parse_integer(trim(s.substr(0, slash)), text);
    auto den_text = trim(s.substr(slash + 1));
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
        throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    }
    return Rational(num, parse_integer(den_text, text));
}

std::string Rational::str() const
{
    return value_.get_str(10);
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero()) {
        throw InvalidArgument("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
    return os << r.str();
}

Rational pow(const Rational &x, std::size_t k)
{
    Rational result(1);
    Rational base = x;
    while (k > 0) {
        if (k & 1U) {
            result *= base;
        }
        k >>= 1U;
        if (k > 0) {
            base *= base;
        }
    }
    return result;
}

Rational rising_factorial(const Rational &a, std::size_t k)
{
    Rational result(1);
    Rational term = a;
    for (std::size_t i = 0; i < k; ++i) {
        result *= term;
        term += Rational(1);
    }
    return result;
}

BigInt factorial(std::size_t n)
{
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

BigInt binomial(std::size_t n, std::size_t k)
{
    if (k > n) {
        return 0;
    }
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

int mobius(std::uint64_t n)
{
    if (n == 0) {
        throw InvalidArgument("mobius(0) is undefined");
    }
    int sign = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) {
            continue;
        }
        n /= p;
        if (n % p == 0) {
            return 0;
        }
        sign = -sign;
    }
    if (n > 1) {
        sign = -sign;
    }
    return sign;
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    if (n == 0) {
        throw InvalidArgument("divisors(0) is undefined");
    }
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) {
                large.push_back(n / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace prodmake
