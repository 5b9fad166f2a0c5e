#ifndef PRODMAKE_EXACTNUM_HPP
#define PRODMAKE_EXACTNUM_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace prodmake
{

using BigInt = mpz_class;

// Exact rational number, always kept in lowest terms with a positive
// denominator, so operator== is a structural comparison.
class Rational
{
public:
    Rational() = default;
    Rational(int v) : value_(v) {}
    Rational(long v) : value_(v) {}
    Rational(long long v) : value_(BigInt(std::to_string(v))) {}
    Rational(unsigned long v) : value_(v) {}
    Rational(const BigInt &v) : value_(v) {}
    // Throws InvalidArgument on a zero denominator.
    Rational(const BigInt &num, const BigInt &den);

    // Accepts "p", "-p", "p/q" with optional surrounding whitespace.
    static Rational parse(std::string_view text);

    BigInt numerator() const
    {
        return value_.get_num();
    }
    BigInt denominator() const
    {
        return value_.get_den();
    }
    bool is_integer() const
    {
        return value_.get_den() == 1;
    }
    bool is_zero() const
    {
        return sgn(value_) == 0;
    }
    int sign() const
    {
        return sgn(value_);
    }

    // "p" or "p/q".
    std::string str() const;

    Rational operator-() const
    {
        return Rational(mpq_class(-value_));
    }
    Rational &operator+=(const Rational &o)
    {
        value_ += o.value_;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        value_ -= o.value_;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        value_ *= o.value_;
        return *this;
    }
    // Throws InvalidArgument on division by zero.
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b)
    {
        return a += b;
    }
    friend Rational operator-(Rational a, const Rational &b)
    {
        return a -= b;
    }
    friend Rational operator*(Rational a, const Rational &b)
    {
        return a *= b;
    }
    friend Rational operator/(Rational a, const Rational &b)
    {
        return a /= b;
    }
    friend bool operator==(const Rational &a, const Rational &b)
    {
        return a.value_ == b.value_;
    }
    friend bool operator!=(const Rational &a, const Rational &b)
    {
        return !(a == b);
    }
    friend bool operator<(const Rational &a, const Rational &b)
    {
        return a.value_ < b.value_;
    }

    const mpq_class &raw() const
    {
        return value_;
    }

private:
    explicit Rational(mpq_class v) : value_(std::move(v))
    {
        value_.canonicalize();
    }

    mpq_class value_{0};
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

// x^k for k >= 0 (0^0 = 1).
Rational pow(const Rational &x, std::size_t k);

// (a)(a+1)...(a+k-1); the empty product for k = 0 is 1.
Rational rising_factorial(const Rational &a, std::size_t k);

BigInt factorial(std::size_t n);

BigInt binomial(std::size_t n, std::size_t k);

// Moebius function by trial division. Throws InvalidArgument for n = 0.
int mobius(std::uint64_t n);

// Ascending divisors of n by trial division. Throws InvalidArgument for n = 0.
std::vector<std::uint64_t> divisors(std::uint64_t n);

} // namespace prodmake

#endif
