#ifndef PRODMAKE_QSERIES_HPP
#define PRODMAKE_QSERIES_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <prodmake/exactnum.hpp>
#include <prodmake/partitions.hpp>
#include <prodmake/series.hpp>

namespace prodmake
{

// Dense polynomial in q; coeffs()[i] is the coefficient of q^i. Trailing
// zeros are trimmed so the zero polynomial has no coefficients at all.
class QPoly
{
public:
    QPoly() = default;
    QPoly(int c) : QPoly(Rational(c)) {}
    QPoly(const Rational &c);
    explicit QPoly(std::vector<Rational> coeffs);

    // c q^k
    static QPoly monomial(const Rational &c, std::size_t k);

    bool is_zero() const
    {
        return coeffs_.empty();
    }
    // -1 for the zero polynomial.
    long degree() const
    {
        return static_cast<long>(coeffs_.size()) - 1;
    }
    std::span<const Rational> coeffs() const
    {
        return coeffs_;
    }
    Rational coeff(std::size_t i) const
    {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }

    Rational evaluate(const Rational &q) const;
    // Value at q = 1, i.e. the coefficient sum.
    Rational at_one() const;
    QPoly shifted(std::size_t k) const;

    // "1 + q + 2*q^2"; at most max_terms terms when nonzero (then "+ ...").
    std::string str(std::size_t max_terms = 0) const;

    QPoly &operator+=(const QPoly &o);
    QPoly &operator-=(const QPoly &o);
    friend QPoly operator+(QPoly a, const QPoly &b)
    {
        return a += b;
    }
    friend QPoly operator-(QPoly a, const QPoly &b)
    {
        return a -= b;
    }
    friend QPoly operator*(const QPoly &a, const QPoly &b);
    friend bool operator==(const QPoly &, const QPoly &) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

// Coefficients in z up to z^N, each an exact polynomial in q.
struct BivariateTrunc {
    std::size_t zorder = 0;
    std::vector<QPoly> zcoeffs;
};

// (q;q)_n / ((q;q)_k (q;q)_{n-k}), built by exact division by (1 - q^i).
// Throws InvalidArgument when k > n.
QPoly gaussian_binomial(std::size_t n, std::size_t k);

// Checks that every a_n is a nonnegative integer and returns them (index 0
// unused). Throws InvalidArgument otherwise.
std::vector<std::size_t> nonnegative_integer_exponents(const ExponentSeq &a);

// r_q(n) = sum_{lambda |- n} prod [a_i - 1 + m_i, m_i]_q, r_q(0) = 1.
QPoly r_q(std::size_t n, const ExponentSeq &a, std::size_t guard = kDefaultPartitionGuard);

// Expansion in z of prod_n prod_{i < a_n} 1 / (1 - z^n q^i) up to z^N.
BivariateTrunc product_side(const ExponentSeq &a, std::size_t zorder);

// product_side(a, N) coefficient of z^n == r_q(n, a) for every n <= N.
bool verify_theorem3(const ExponentSeq &a, std::size_t zorder, std::size_t guard = kDefaultPartitionGuard);

} // namespace prodmake

#endif
