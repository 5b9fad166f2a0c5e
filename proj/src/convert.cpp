#include <prodmake/convert.hpp>

#include <string>

#include <prodmake/error.hpp>

#include "partition_sums.hpp"

namespace prodmake
{

namespace
{

void require_unit_constant(const TruncatedSeries &r)
{
    if (r[0] != Rational(1)) {
        throw InvalidArgument("series must have constant term 1, got " + r[0].str());
    }
}

void require_order(std::size_t order)
{
    if (order == 0) {
        throw InvalidArgument("order must be at least 1");
    }
}

void require_guard(std::size_t order, std::size_t guard)
{
    if (order > guard) {
        throw ResourceLimit("order " + std::to_string(order) + " exceeds the partition guard " + std::to_string(guard));
    }
}

Rational signed_factorial_sum(const std::vector<Rational> &graded, bool shifted)
{
    // shifted: sum (-1)^(l-1) (l-1)! g_l over l >= 1; else sum (-1)^l l! g_l.
    Rational acc;
    for (std::size_t len = shifted ? 1 : 0; len < graded.size(); ++len) {
        if (graded[len].is_zero()) {
            continue;
        }
        const std::size_t f = shifted ? len - 1 : len;
        Rational term = graded[len] * Rational(factorial(f));
        acc += (f % 2 == 0) ? term : -term;
    }
    return acc;
}

} // namespace

TruncatedSeries r_from_a_recursive(const ExponentSeq &a)
{
    const std::size_t n = a.order();
    require_order(n);
    // sigma[j] = sum_{d|j} d a_d
    std::vector<Rational> sigma(n + 1);
    for (std::size_t j = 1; j <= n; ++j) {
        for (auto d : divisors(j)) {
            sigma[j] += Rational(d) * a[d];
        }
    }
    TruncatedSeries r = TruncatedSeries::one(n);
    for (std::size_t m = 1; m <= n; ++m) {
        Rational acc;
        for (std::size_t j = 1; j <= m; ++j) {
            acc += r[m - j] * sigma[j];
        }
        r[m] = acc / Rational(m);
    }
    return r;
}

BressoudResult a_from_r_recursive_with_d(const TruncatedSeries &r)
{
    require_unit_constant(r);
    const std::size_t n = r.order();
    require_order(n);
    DSequence d(n);
    for (std::size_t m = 1; m <= n; ++m) {
        Rational acc = Rational(m) * r[m];
        for (std::size_t j = 1; j < m; ++j) {
            acc -= d[j] * r[m - j];
        }
        d[m] = acc;
    }
    ExponentSeq a(n);
    for (std::size_t m = 1; m <= n; ++m) {
        Rational acc = d[m];
        for (auto div : divisors(m)) {
            if (div < m) {
                acc -= Rational(div) * a[div];
            }
        }
        a[m] = acc / Rational(m);
    }
    return {std::move(a), std::move(d)};
}

ExponentSeq a_from_r_recursive(const TruncatedSeries &r)
{
    return a_from_r_recursive_with_d(r).exponents;
}

TruncatedSeries r_from_a_direct(const ExponentSeq &a, std::size_t guard)
{
    const std::size_t n = a.order();
    require_order(n);
    require_guard(n, guard);

    // table[i][m] = (a_i)_m / m!
    std::vector<std::vector<Rational>> table(n + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        auto &row = table[i];
        row.resize(n / i + 1);
        row[0] = 1;
        for (std::size_t m = 1; m < row.size(); ++m) {
            row[m] = row[m - 1] * (a[i] + Rational(m - 1)) / Rational(m);
        }
    }

    TruncatedSeries r = TruncatedSeries::one(n);
    detail::parallel_for(1, n + 1, [&](std::size_t k) {
        Rational acc;
        PrefixProduct<Rational> product;
        for_each_partition(k, guard, [&](const PartitionEnumerator &e) {
            acc += product.update(e, [&](std::size_t part, std::size_t mult) { return table[part][mult]; });
        });
        r[k] = std::move(acc);
    });
    return r;
}

Rational log_sum_from_r(const TruncatedSeries &r, std::size_t d, std::size_t guard)
{
    require_unit_constant(r);
    if (d == 0 || d > r.order()) {
        throw InvalidArgument("log_sum_from_r: d = " + std::to_string(d) + " outside 1.." + std::to_string(r.order()));
    }
    require_guard(d, guard);
    const auto table = detail::power_over_factorial_table(r, d);
    return signed_factorial_sum(detail::length_graded_sum(table, d, guard), true);
}

ExponentSeq a_from_r_direct(const TruncatedSeries &r, std::size_t guard)
{
    require_unit_constant(r);
    const std::size_t n = r.order();
    require_order(n);
    require_guard(n, guard);

    const auto table = detail::power_over_factorial_table(r, n);
    std::vector<Rational> b(n + 1);
    detail::parallel_for(1, n + 1, [&](std::size_t d) {
        b[d] = signed_factorial_sum(detail::length_graded_sum(table, d, guard), true);
    });

    ExponentSeq a(n);
    for (std::size_t m = 1; m <= n; ++m) {
        Rational acc;
        for (auto d : divisors(m)) {
            const int mu = mobius(m / d);
            if (mu == 0) {
                continue;
            }
            Rational term = Rational(d) * b[d];
            acc += mu > 0 ? term : -term;
        }
        a[m] = acc / Rational(m);
    }
    return a;
}

TruncatedSeries r_from_a(const ExponentSeq &a, Method method, std::size_t guard)
{
    switch (method) {
    case Method::direct:
        return r_from_a_direct(a, guard);
    case Method::recursive:
        return r_from_a_recursive(a);
    case Method::both:
        break;
    }
    auto direct = r_from_a_direct(a, guard);
    auto recursive = r_from_a_recursive(a);
    if (direct != recursive) {
        throw CrossCheckError("r_from_a: direct and recursive results differ");
    }
    return direct;
}

ExponentSeq a_from_r(const TruncatedSeries &r, Method method, std::size_t guard)
{
    switch (method) {
    case Method::direct:
        return a_from_r_direct(r, guard);
    case Method::recursive:
        return a_from_r_recursive(r);
    case Method::both:
        break;
    }
    auto direct = a_from_r_direct(r, guard);
    auto recursive = a_from_r_recursive(r);
    if (direct != recursive) {
        throw CrossCheckError("a_from_r: direct and recursive results differ");
    }
    return direct;
}

bool check_lemma(const TruncatedSeries &r, std::size_t n, std::size_t guard)
{
    require_unit_constant(r);
    if (n == 0 || n > r.order()) {
        throw InvalidArgument("check_lemma: n = " + std::to_string(n) + " outside 1.." + std::to_string(r.order()));
    }
    require_guard(n, guard);
    const auto table = detail::power_over_factorial_table(r, n);

    const Rational lhs = Rational(n) * signed_factorial_sum(detail::length_graded_sum(table, n, guard), true);

    Rational rhs;
    for (std::size_t j = 1; j <= n; ++j) {
        if (r[j].is_zero()) {
            continue;
        }
        const Rational inner = signed_factorial_sum(detail::length_graded_sum(table, n - j, guard), false);
        rhs += Rational(j) * r[j] * inner;
    }
    return lhs == rhs;
}

} // namespace prodmake
