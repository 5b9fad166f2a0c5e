#ifndef PRODMAKE_SERIES_HPP
#define PRODMAKE_SERIES_HPP

#include <cstddef>
#include <span>
#include <vector>

#include <prodmake/exactnum.hpp>
#include <prodmake/partitions.hpp>

namespace prodmake
{

// c_0 + c_1 q + ... + c_N q^N, everything above q^N discarded. Binary
// operations require both operands to share N.
class TruncatedSeries
{
public:
    // The zero series of the given order.
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
    // order = coeffs.size() - 1; throws InvalidArgument when coeffs is empty.
    explicit TruncatedSeries(std::vector<Rational> coeffs);

    static TruncatedSeries one(std::size_t order);

    std::size_t order() const
    {
        return coeffs_.size() - 1;
    }
    const Rational &operator[](std::size_t i) const
    {
        return coeffs_[i];
    }
    Rational &operator[](std::size_t i)
    {
        return coeffs_[i];
    }
    std::span<const Rational> coeffs() const
    {
        return coeffs_;
    }
    bool is_zero() const;
    // Same coefficients re-cut at a lower or higher order (zero padded).
    TruncatedSeries truncated(std::size_t order) const;

    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
    std::vector<Rational> coeffs_;
};

namespace detail
{

// 1-based sequence x_1..x_N shared by the exponent, log and D sequences.
template <typename Tag>
class OneBasedSeq
{
public:
    explicit OneBasedSeq(std::size_t order) : vals_(order) {}
    explicit OneBasedSeq(std::vector<Rational> vals) : vals_(std::move(vals)) {}

    std::size_t order() const
    {
        return vals_.size();
    }
    // n runs from 1 to order().
    const Rational &operator[](std::size_t n) const
    {
        return vals_[n - 1];
    }
    Rational &operator[](std::size_t n)
    {
        return vals_[n - 1];
    }
    std::span<const Rational> values() const
    {
        return vals_;
    }

    friend bool operator==(const OneBasedSeq &, const OneBasedSeq &) = default;

private:
    std::vector<Rational> vals_;
};

} // namespace detail

// Exponents a_1..a_N of prod (1 - q^n)^(-a_n).
using ExponentSeq = detail::OneBasedSeq<struct ExponentTag>;
// b_1..b_N with sum b(n) q^n = log prod (1 - q^n)^(-a_n).
using LogCoeffs = detail::OneBasedSeq<struct LogTag>;

TruncatedSeries operator+(const TruncatedSeries &s, const TruncatedSeries &t);
TruncatedSeries operator-(const TruncatedSeries &s, const TruncatedSeries &t);
TruncatedSeries operator-(const TruncatedSeries &s);
TruncatedSeries scale(const TruncatedSeries &s, const Rational &c);

// Cauchy product. Throws InvalidArgument on mismatched orders.
TruncatedSeries mul(const TruncatedSeries &s, const TruncatedSeries &t);

// s^k, k >= 0.
TruncatedSeries power(const TruncatedSeries &s, std::uint64_t k);

// Triangular solve of s * t = 1. Throws InvalidArgument when c_0 = 0.
TruncatedSeries reciprocal_convolution(const TruncatedSeries &s);

// Coefficient of q^k in 1/s as the partition sum
//   sum_{lambda |- k} (-1)^l l! prod c_i^{m_i} / m_i!.
// Requires c_0 = 1; throws ResourceLimit when order > guard.
TruncatedSeries reciprocal_partition_formula(const TruncatedSeries &s, std::size_t guard = kDefaultPartitionGuard);

// Expands prod_{n<=N} (1 - q^n)^(-a_n) factor by factor using the binomial
// series sum_k (a_n)_k / k! q^{nk}.
TruncatedSeries product_from_exponents(const ExponentSeq &a);

// b(n) = (1/n) sum_{d|n} d a_d.
LogCoeffs log_coeffs_from_exponents(const ExponentSeq &a);

// a_n = (1/n) sum_{d|n} mu(n/d) d b(d).
ExponentSeq exponents_from_log_coeffs(const LogCoeffs &b);

} // namespace prodmake

#endif
