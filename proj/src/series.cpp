#include <prodmake/series.hpp>

#include <string>

#include <prodmake/error.hpp>

#include "partition_sums.hpp"

namespace prodmake
{

namespace
{

void require_same_order(const TruncatedSeries &s, const TruncatedSeries &t)
{
    if (s.order() != t.order()) {
        throw InvalidArgument("series orders differ (" + std::to_string(s.order()) + " vs "
                              + std::to_string(t.order()) + ")");
    }
}

} // namespace

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw InvalidArgument("a series needs at least the constant coefficient");
    }
}

TruncatedSeries TruncatedSeries::one(std::size_t order)
{
    TruncatedSeries s(order);
    s[0] = 1;
    return s;
}

bool TruncatedSeries::is_zero() const
{
    for (const auto &c : coeffs_) {
        if (!c.is_zero()) {
            return false;
        }
    }
    return true;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const
{
    TruncatedSeries out(order);
    for (std::size_t i = 0; i <= std::min(order, this->order()); ++i) {
        out[i] = coeffs_[i];
    }
    return out;
}

TruncatedSeries operator+(const TruncatedSeries &s, const TruncatedSeries &t)
{
    require_same_order(s, t);
    TruncatedSeries out = s;
    for (std::size_t i = 0; i <= s.order(); ++i) {
        out[i] += t[i];
    }
    return out;
}

TruncatedSeries operator-(const TruncatedSeries &s, const TruncatedSeries &t)
{
    require_same_order(s, t);
    TruncatedSeries out = s;
    for (std::size_t i = 0; i <= s.order(); ++i) {
        out[i] -= t[i];
    }
    return out;
}

TruncatedSeries operator-(const TruncatedSeries &s)
{
    return scale(s, Rational(-1));
}

TruncatedSeries scale(const TruncatedSeries &s, const Rational &c)
{
    TruncatedSeries out = s;
    for (std::size_t i = 0; i <= s.order(); ++i) {
        out[i] *= c;
    }
    return out;
}

TruncatedSeries mul(const TruncatedSeries &s, const TruncatedSeries &t)
{
    require_same_order(s, t);
    const std::size_t n = s.order();
    TruncatedSeries out(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (s[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            out[i + j] += s[i] * t[j];
        }
    }
    return out;
}

TruncatedSeries power(const TruncatedSeries &s, std::uint64_t k)
{
    TruncatedSeries result = TruncatedSeries::one(s.order());
    TruncatedSeries base = s;
    while (k > 0) {
        if (k & 1U) {
            result = mul(result, base);
        }
        k >>= 1U;
        if (k > 0) {
            base = mul(base, base);
        }
    }
    return result;
}

TruncatedSeries reciprocal_convolution(const TruncatedSeries &s)
{
    if (s[0].is_zero()) {
        throw InvalidArgument("cannot invert a series with zero constant term");
    }
    const std::size_t n = s.order();
    const Rational inv0 = Rational(1) / s[0];
    TruncatedSeries t(n);
    t[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc;
        for (std::size_t j = 1; j <= k; ++j) {
            acc += s[j] * t[k - j];
        }
        t[k] = -acc * inv0;
    }
    return t;
}

TruncatedSeries reciprocal_partition_formula(const TruncatedSeries &s, std::size_t guard)
{
    if (s[0] != Rational(1)) {
        throw InvalidArgument("the partition formula for 1/f requires constant term 1, got " + s[0].str());
    }
    const std::size_t n = s.order();
    if (n > guard) {
        throw ResourceLimit("order " + std::to_string(n) + " exceeds the partition guard " + std::to_string(guard));
    }
    const auto table = detail::power_over_factorial_table(s, n);
    TruncatedSeries out(n);
    detail::parallel_for(0, n + 1, [&](std::size_t k) {
        const auto graded = detail::length_graded_sum(table, k, guard);
        Rational acc;
        for (std::size_t len = 0; len < graded.size(); ++len) {
            if (graded[len].is_zero()) {
                continue;
            }
            Rational term = graded[len] * Rational(factorial(len));
            acc += (len % 2 == 0) ? term : -term;
        }
        out[k] = acc;
    });
    return out;
}

TruncatedSeries product_from_exponents(const ExponentSeq &a)
{
    const std::size_t n = a.order();
    TruncatedSeries out = TruncatedSeries::one(n);
    std::vector<Rational> factor;
    for (std::size_t part = 1; part <= n; ++part) {
        if (a[part].is_zero()) {
            continue;
        }
        // factor[k] = (a)_k / k!, the coefficient of q^{part*k}.
        const std::size_t kmax = n / part;
        factor.assign(kmax + 1, Rational(0));
        factor[0] = 1;
        for (std::size_t k = 1; k <= kmax; ++k) {
            factor[k] = factor[k - 1] * (a[part] + Rational(static_cast<long>(k - 1))) / Rational(static_cast<long>(k));
        }
        // Descending so out[d - part*k] still holds the previous product.
        for (std::size_t d = n + 1; d-- > 0;) {
            Rational acc = out[d];
            for (std::size_t k = 1; k * part <= d; ++k) {
                acc += factor[k] * out[d - k * part];
            }
            out[d] = std::move(acc);
        }
    }
    return out;
}

LogCoeffs log_coeffs_from_exponents(const ExponentSeq &a)
{
    LogCoeffs b(a.order());
    for (std::size_t n = 1; n <= a.order(); ++n) {
        Rational acc;
        for (auto d : divisors(n)) {
            acc += Rational(static_cast<unsigned long>(d)) * a[d];
        }
        b[n] = acc / Rational(static_cast<unsigned long>(n));
    }
    return b;
}

ExponentSeq exponents_from_log_coeffs(const LogCoeffs &b)
{
    ExponentSeq a(b.order());
    for (std::size_t n = 1; n <= b.order(); ++n) {
        Rational acc;
        for (auto d : divisors(n)) {
            const int mu = mobius(n / d);
            if (mu == 0) {
                continue;
            }
            Rational term = Rational(static_cast<unsigned long>(d)) * b[d];
            acc += mu > 0 ? term : -term;
        }
        a[n] = acc / Rational(static_cast<unsigned long>(n));
    }
    return a;
}

namespace detail
{

std::vector<std::vector<Rational>> power_over_factorial_table(const TruncatedSeries &c, std::size_t n)
{
    std::vector<std::vector<Rational>> table(n + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        auto &row = table[i];
        row.resize(n / i + 1);
        row[0] = 1;
        for (std::size_t m = 1; m < row.size(); ++m) {
            row[m] = row[m - 1] * c[i] / Rational(static_cast<unsigned long>(m));
        }
    }
    return table;
}

std::vector<Rational> length_graded_sum(const std::vector<std::vector<Rational>> &table, std::size_t n,
                                        std::size_t guard)
{
    std::vector<Rational> graded(n + 1);
    PrefixProduct<Rational> product;
    for_each_partition(n, guard, [&](const PartitionEnumerator &e) {
        const Rational &w = product.update(e, [&](std::size_t part, std::size_t mult) { return table[part][mult]; });
        if (!w.is_zero()) {
            graded[e.length()] += w;
        }
    });
    return graded;
}

} // namespace detail

} // namespace prodmake
