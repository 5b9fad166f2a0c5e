#ifndef PRODMAKE_CONVERT_HPP
#define PRODMAKE_CONVERT_HPP

#include <cstddef>

#include <prodmake/exactnum.hpp>
#include <prodmake/partitions.hpp>
#include <prodmake/series.hpp>

namespace prodmake
{

// Conversions between the coefficients r(n) of
//   1 + sum r(n) q^n = prod (1 - q^n)^(-a_n)
// and the exponents a_n. Every series argument must have r(0) = 1; anything
// else is rejected with InvalidArgument rather than rescaled.

// Bressoud's auxiliary sequence D_m = m r(m) - sum_{j<m} D_j r(m-j).
using DSequence = detail::OneBasedSeq<struct DTag>;

enum class Method { direct, recursive, both };

struct BressoudResult {
    ExponentSeq exponents;
    DSequence d;
};

// n r(n) = sum_{j=1..n} r(n-j) sum_{d|j} d a_d.
TruncatedSeries r_from_a_recursive(const ExponentSeq &a);

// n a_n = D_n - sum_{d|n, d<n} d a_d.
ExponentSeq a_from_r_recursive(const TruncatedSeries &r);
BressoudResult a_from_r_recursive_with_d(const TruncatedSeries &r);

// r(n) = sum_{lambda |- n} prod (a_i)_{m_i} / m_i!.
TruncatedSeries r_from_a_direct(const ExponentSeq &a, std::size_t guard = kDefaultPartitionGuard);

// b(d) = sum_{lambda |- d} (-1)^(l-1) (l-1)! prod r(i)^{m_i} / m_i!.
Rational log_sum_from_r(const TruncatedSeries &r, std::size_t d, std::size_t guard = kDefaultPartitionGuard);

// a_n = (1/n) sum_{d|n} mu(n/d) d b(d) with b from log_sum_from_r.
ExponentSeq a_from_r_direct(const TruncatedSeries &r, std::size_t guard = kDefaultPartitionGuard);

// Method::both runs the two algorithms and throws CrossCheckError unless
// they agree exactly.
TruncatedSeries r_from_a(const ExponentSeq &a, Method method, std::size_t guard = kDefaultPartitionGuard);
ExponentSeq a_from_r(const TruncatedSeries &r, Method method, std::size_t guard = kDefaultPartitionGuard);

// Evaluates both sides of
//   n sum_{lambda |- n} (-1)^(l-1) (l-1)! W(lambda)
//     = sum_{j=1..n} j r(j) sum_{mu |- n-j} (-1)^l l! W(mu)
// with W = prod r(i)^{m_i} / m_i!, and reports exact equality.
bool check_lemma(const TruncatedSeries &r, std::size_t n, std::size_t guard = kDefaultPartitionGuard);

} // namespace prodmake

#endif
