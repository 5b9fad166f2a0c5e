// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include <prodmake/convert.hpp>
#include <prodmake/error.hpp>
#include <prodmake/expr.hpp>
#include <prodmake/families.hpp>
#include <prodmake/oeis.hpp>
#include <prodmake/partitions.hpp>
#include <prodmake/qseries.hpp>
#include <prodmake/series.hpp>

#include "support.hpp"

using namespace prodmake;

namespace
{

struct Outcome {
    bool passed = true;
    std::string detail;

    void require(bool cond, const std::string &what)
    {
        if (!cond && passed) {
            passed = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int id, const char *title, double limit_seconds, const std::function<void(Outcome &)> &body)
{
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception &e) {
        out.passed = false;
        out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && secs >= limit_seconds) {
        out.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s");
    }
    if (!out.passed) {
        ++failures;
    }
    std::printf("AC%-2d %s  %s (%.3f s)%s%s\n", id, out.passed ? "PASS" : "FAIL", title, secs,
                out.detail.empty() ? "" : ": ", out.detail.c_str());
    std::fflush(stdout);
}

TruncatedSeries closed_form(const std::function<BigInt(std::size_t)> &c, std::size_t order)
{
    TruncatedSeries r(order);
    for (std::size_t n = 0; n <= order; ++n) {
        r[n] = Rational(c(n));
    }
    return r;
}

ExponentSeq mobius_closed_form(const std::function<BigInt(std::size_t)> &f, std::size_t order)
{
    ExponentSeq a(order);
    for (std::size_t n = 1; n <= order; ++n) {
        Rational acc;
        for (auto d : divisors(n)) {
            acc += Rational(static_cast<long>(mobius(n / d))) * Rational(f(d));
        }
        a[n] = acc / Rational(n);
    }
    return a;
}

BigInt pow2(std::size_t d)
{
    BigInt x;
    mpz_ui_pow_ui(x.get_mpz_t(), 2, d);
    return x;
}

// The overpartition direct sum: prod over odd parts i of (m_i + 1).
BigInt overpartition_sum(std::size_t n)
{
    BigInt total;
    for (const auto &parts : testing::brute_partitions(n)) {
        std::vector<long> m(n + 1);
        for (auto p : parts) {
            ++m[p];
        }
        BigInt term = 1;
        for (std::size_t i = 1; i <= n; i += 2) {
            term *= m[i] + 1;
        }
        total += term;
    }
    return total;
}

} // namespace

int main()
{
    const auto compositions = closed_form([](std::size_t n) -> BigInt { return n == 0 ? BigInt(1) : pow2(n - 1); }, 15);
    const auto fib_series = closed_form([](std::size_t n) { return fibonacci(n + 1); }, 17);

    criterion(1, "compositions exponents", 1.0, [&](Outcome &o) {
        const auto expected = testing::integer_exponents({1, 1, 2, 3, 6, 9, 18, 30, 56, 99, 186, 335, 630});
        const auto r = compositions.truncated(13);
        o.require(a_from_r(r, Method::direct) == expected, "direct result differs");
        o.require(a_from_r(r, Method::recursive) == expected, "recursive result differs");
        o.require(mobius_closed_form([](std::size_t d) -> BigInt { return pow2(d) - 1; }, 13) == expected,
                  "closed form differs");
    });

    criterion(2, "Fibonacci exponents", 2.0, [&](Outcome &o) {
        const auto expected =
            testing::integer_exponents({1, 1, 1, 1, 2, 2, 4, 5, 8, 11, 18, 25, 40, 58, 90, 135, 210});
        o.require(a_from_r(fib_series, Method::direct) == expected, "direct result differs");
        o.require(a_from_r(fib_series, Method::recursive) == expected, "recursive result differs");
        o.require(mobius_closed_form([](std::size_t d) { return lucas(d); }, 17) == expected, "closed form differs");
    });

    criterion(3, "round-trip exactness, 50 random sequences at N=20", 30.0, [&](Outcome &o) {
        std::mt19937_64 rng(20240603);
        const Method methods[] = {Method::direct, Method::recursive};
        for (int i = 0; i < 50 && o.passed; ++i) {
            const auto a = testing::random_exponents(rng, 20);
            const auto r = testing::random_unit_series(rng, 20);
            for (auto m1 : methods) {
                for (auto m2 : methods) {
                    o.require(a_from_r(r_from_a(a, m1), m2) == a, "a -> r -> a failed at sample " + std::to_string(i));
                    o.require(r_from_a(a_from_r(r, m1), m2) == r, "r -> a -> r failed at sample " + std::to_string(i));
                }
            }
        }
    });

    criterion(4, "direct and recursive methods agree", 0, [&](Outcome &o) {
        for (const auto &f : builtin_families()) {
            const auto a = family_exponents(f, 20);
            const auto r = family_series(f, 20);
            o.require(r_from_a_direct(a) == r_from_a_recursive(a), f.label + ": r_from_a");
            o.require(a_from_r_direct(r) == a_from_r_recursive(r), f.label + ": a_from_r");
        }
        std::mt19937_64 rng(4);
        for (int i = 0; i < 20; ++i) {
            const std::size_t order = 1 + rng() % 20;
            const auto a = testing::random_exponents(rng, order);
            const auto r = testing::random_unit_series(rng, order);
            o.require(r_from_a_direct(a) == r_from_a_recursive(a), "random r_from_a " + std::to_string(i));
            o.require(a_from_r_direct(r) == a_from_r_recursive(r), "random a_from_r " + std::to_string(i));
        }
    });

    criterion(5, "inner-sum identities for d <= 15", 0, [&](Outcome &o) {
        for (std::size_t d = 1; d <= 15; ++d) {
            const Rational scale(static_cast<long>(d));
            o.require(scale * log_sum_from_r(compositions, d) == Rational(BigInt(pow2(d) - 1)),
                      "compositions d=" + std::to_string(d));
            if (d > 2) {
                o.require(scale * log_sum_from_r(fib_series, d) == Rational(lucas(d)),
                          "Fibonacci d=" + std::to_string(d));
            }
        }
    });

    criterion(6, "lemma battery for n <= 12", 0, [&](Outcome &o) {
        for (const auto &f : builtin_families()) {
            const auto r = family_series(f, 12);
            for (std::size_t n = 1; n <= 12; ++n) {
                o.require(check_lemma(r, n), f.label + " n=" + std::to_string(n));
            }
        }
        std::mt19937_64 rng(6);
        for (int i = 0; i < 20; ++i) {
            const auto r = testing::random_unit_series(rng, 12);
            for (std::size_t n = 1; n <= 12; ++n) {
                o.require(check_lemma(r, n), "random " + std::to_string(i) + " n=" + std::to_string(n));
            }
        }
    });

    criterion(7, "overpartition identity", 0, [&](Outcome &o) {
        ExponentSeq a(30);
        for (std::size_t n = 1; n <= 30; ++n) {
            a[n] = n % 2 == 1 ? 2 : 1;
        }
        const auto s = product_from_exponents(a);
        const auto oracle = testing::overpartition_product(30);
        for (std::size_t n = 0; n <= 30; ++n) {
            o.require(s[n] == Rational(oracle[n]), "product mismatch at n=" + std::to_string(n));
        }
        for (std::size_t n = 0; n <= 15; ++n) {
            o.require(s[n] == Rational(overpartition_sum(n)), "direct sum mismatch at n=" + std::to_string(n));
        }
    });

    criterion(8, "q-analogue product identity through z-order 10", 30.0, [&](Outcome &o) {
        for (const char *spec : {"partitions", "overpartitions", "kcolor:2", "kcolor:3", "plane"}) {
            const auto a = family_exponents(family(spec), 10);
            o.require(verify_theorem3(a, 10), std::string(spec) + ": product side differs");
            const auto r = r_from_a_recursive(a);
            for (std::size_t n = 0; n <= 10; ++n) {
                o.require(r_q(n, a).at_one() == r[n], std::string(spec) + ": q=1 limit at n=" + std::to_string(n));
            }
        }
    });

    criterion(9, "expression parser", 0, [&](Outcome &o) {
        o.require(expand_expr(parse_expr("1/(1-q-q^2)"), 10)
                      == closed_form([](std::size_t n) { return fibonacci(n + 1); }, 10),
                  "Fibonacci expansion");
        o.require(expand_expr(parse_expr("(1-q)/(1-2*q)"), 10) == compositions.truncated(10),
                  "compositions expansion");
    });

    criterion(10, "oracle consistency", 0, [&](Outcome &o) {
        for (std::size_t n = 0; n <= 30; ++n) {
            std::size_t count = 0;
            for_each_partition(n, kDefaultPartitionGuard, [&](const PartitionEnumerator &) { ++count; });
            o.require(BigInt(static_cast<unsigned long>(count)) == partition_count(n),
                      "count mismatch at n=" + std::to_string(n));
        }
        std::mt19937_64 rng(10);
        for (int i = 0; i < 50; ++i) {
            const auto s = testing::random_unit_series(rng, 1 + rng() % 12);
            o.require(reciprocal_partition_formula(s) == reciprocal_convolution(s),
                      "reciprocal mismatch at sample " + std::to_string(i));
        }
    });

    criterion(11, "offline OEIS identification", 0, [&](Outcome &o) {
        oeis::Options opts;
        opts.mode = oeis::Mode::offline;
        const auto comp = oeis::lookup(a_from_r(compositions.truncated(13), Method::both).values(), opts);
        o.require(!comp.empty() && comp[0].oeis_id == "A059966", "compositions exponents not resolved");
        const auto fib = oeis::lookup(a_from_r(fib_series, Method::both).values(), opts);
        o.require(!fib.empty() && fib[0].oeis_id == "A006206", "Fibonacci exponents not resolved");
    });

    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
