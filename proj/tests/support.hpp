// Shared test helpers: seeded generators and oracles that are deliberately
// independent of the library's algorithms.
#ifndef PRODMAKE_TESTS_SUPPORT_HPP
#define PRODMAKE_TESTS_SUPPORT_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <prodmake/exactnum.hpp>
#include <prodmake/series.hpp>

namespace testing
{

using prodmake::BigInt;
using prodmake::ExponentSeq;
using prodmake::Rational;
using prodmake::TruncatedSeries;

inline Rational random_rational(std::mt19937_64 &rng, int num_lo = -9, int num_hi = 9, int den_hi = 4)
{
    std::uniform_int_distribution<int> num(num_lo, num_hi);
    std::uniform_int_distribution<int> den(1, den_hi);
    return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

inline ExponentSeq random_exponents(std::mt19937_64 &rng, std::size_t order)
{
    ExponentSeq a(order);
    for (std::size_t n = 1; n <= order; ++n) {
        a[n] = random_rational(rng);
    }
    return a;
}

// Random series with unit constant term.
inline TruncatedSeries random_unit_series(std::mt19937_64 &rng, std::size_t order)
{
    TruncatedSeries s(order);
    s[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        s[n] = random_rational(rng);
    }
    return s;
}

inline TruncatedSeries integer_series(const std::vector<long> &v)
{
    std::vector<Rational> c;
    for (long x : v) {
        c.emplace_back(x);
    }
    return TruncatedSeries(std::move(c));
}

inline ExponentSeq integer_exponents(const std::vector<long> &v)
{
    std::vector<Rational> c;
    for (long x : v) {
        c.emplace_back(x);
    }
    return ExponentSeq(std::move(c));
}

// Every partition of n as a weakly decreasing part list, by plain recursion.
inline void brute_partitions(std::size_t n, std::size_t max_part, std::vector<std::size_t> &prefix,
                             std::vector<std::vector<std::size_t>> &out)
{
    if (n == 0) {
        out.push_back(prefix);
        return;
    }
    for (std::size_t p = std::min(n, max_part); p >= 1; --p) {
        prefix.push_back(p);
        brute_partitions(n - p, p, prefix, out);
        prefix.pop_back();
    }
}

inline std::vector<std::vector<std::size_t>> brute_partitions(std::size_t n)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> prefix;
    brute_partitions(n, n, prefix, out);
    return out;
}

// prod (1 - q^n)^(-a_n) for nonnegative integer a_n: a_n geometric factors
// 1/(1 - q^n) each applied as a running prefix sum with stride n.
inline std::vector<BigInt> geometric_product(const std::function<long(std::size_t)> &a, std::size_t order)
{
    std::vector<BigInt> c(order + 1);
    c[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        for (long rep = 0; rep < a(n); ++rep) {
            for (std::size_t d = n; d <= order; ++d) {
                c[d] += c[d - n];
            }
        }
    }
    return c;
}

// prod (1 + q^n)/(1 - q^n): multiply by 1 + q^n, then by the geometric factor.
inline std::vector<BigInt> overpartition_product(std::size_t order)
{
    std::vector<BigInt> c(order + 1);
    c[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        for (std::size_t d = order; d >= n; --d) {
            c[d] += c[d - n];
        }
        for (std::size_t d = n; d <= order; ++d) {
            c[d] += c[d - n];
        }
    }
    return c;
}

// exp of the log series: the product for arbitrary rational exponents via
// b(n) = (1/n) sum_{d|n} d a_d and n r(n) = sum_k k b(k) r(n-k), with the
// divisor sum done by brute-force divisibility tests.
inline TruncatedSeries exp_log_product(const ExponentSeq &a)
{
    const std::size_t order = a.order();
    std::vector<Rational> nb(order + 1);
    for (std::size_t n = 1; n <= order; ++n) {
        for (std::size_t d = 1; d <= n; ++d) {
            if (n % d == 0) {
                nb[n] += Rational(d) * a[d];
            }
        }
    }
    TruncatedSeries r(order);
    r[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        Rational acc;
        for (std::size_t k = 1; k <= n; ++k) {
            acc += nb[k] * r[n - k];
        }
        r[n] = acc / Rational(n);
    }
    return r;
}

// Moebius by explicit prime factorization.
inline int mobius_by_factoring(std::uint64_t n)
{
    int primes = 0;
    for (std::uint64_t p = 2; n > 1; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 1) {
            return 0;
        }
        primes += e;
    }
    return primes % 2 == 0 ? 1 : -1;
}

} // namespace testing

#endif
