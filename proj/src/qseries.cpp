#include <prodmake/qseries.hpp>

#include <sstream>

#include <prodmake/error.hpp>

namespace prodmake
{

QPoly::QPoly(const Rational &c)
{
    if (!c.is_zero()) {
        coeffs_.push_back(c);
    }
}

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

QPoly QPoly::monomial(const Rational &c, std::size_t k)
{
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return QPoly(std::move(v));
}

void QPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Rational QPoly::evaluate(const Rational &q) const
{
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * q + *it;
    }
    return acc;
}

Rational QPoly::at_one() const
{
    Rational acc;
    for (const auto &c : coeffs_) {
        acc += c;
    }
    return acc;
}

QPoly QPoly::shifted(std::size_t k) const
{
    if (is_zero()) {
        return {};
    }
    std::vector<Rational> v(k);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return QPoly(std::move(v));
}

std::string QPoly::str(std::size_t max_terms) const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    std::size_t written = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational &c = coeffs_[i];
        if (c.is_zero()) {
            continue;
        }
        if (max_terms > 0 && written == max_terms) {
            os << " + ...";
            break;
        }
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        if (written == 0) {
            os << (negative ? "-" : "");
        } else {
            os << (negative ? " - " : " + ");
        }
        if (i == 0) {
            os << mag;
        } else {
            if (mag != Rational(1)) {
                os << mag << '*';
            }
            os << 'q';
            if (i > 1) {
                os << '^' << i;
            }
        }
        ++written;
    }
    return os.str();
}

QPoly &QPoly::operator+=(const QPoly &o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    trim();
    return *this;
}

QPoly &QPoly::operator-=(const QPoly &o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    trim();
    return *this;
}

QPoly operator*(const QPoly &a, const QPoly &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return QPoly(std::move(v));
}

QPoly gaussian_binomial(std::size_t n, std::size_t k)
{
    if (k > n) {
        throw InvalidArgument("gaussian_binomial: k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
    }
    k = std::min(k, n - k);
    // After step i the running value is [n-k+i, i]_q.
    std::vector<Rational> cur{Rational(1)};
    for (std::size_t i = 1; i <= k; ++i) {
        const std::size_t up = n - k + i;
        // times (1 - q^up)
        std::vector<Rational> next(cur.size() + up);
        for (std::size_t j = 0; j < cur.size(); ++j) {
            next[j] += cur[j];
            next[j + up] -= cur[j];
        }
        // exact division by (1 - q^i): out_j = next_j + out_{j-i}
        std::vector<Rational> quot(next.size() - i);
        for (std::size_t j = 0; j < quot.size(); ++j) {
            quot[j] = next[j];
            if (j >= i) {
                quot[j] += quot[j - i];
            }
        }
        cur = std::move(quot);
    }
    return QPoly(std::move(cur));
}

std::vector<std::size_t> nonnegative_integer_exponents(const ExponentSeq &a)
{
    std::vector<std::size_t> out(a.order() + 1, 0);
    for (std::size_t n = 1; n <= a.order(); ++n) {
        const Rational &v = a[n];
        if (!v.is_integer() || v.sign() < 0) {
            throw InvalidArgument("the q-analogue needs nonnegative integer exponents; a_" + std::to_string(n) + " = "
                                  + v.str());
        }
        const BigInt num = v.numerator();
        if (!num.fits_ulong_p()) {
            throw InvalidArgument("exponent a_" + std::to_string(n) + " is too large");
        }
        out[n] = num.get_ui();
    }
    return out;
}

QPoly r_q(std::size_t n, const ExponentSeq &a, std::size_t guard)
{
    if (n == 0) {
        return QPoly(1);
    }
    if (n > a.order()) {
        throw InvalidArgument("r_q: n = " + std::to_string(n) + " exceeds the exponent order "
                              + std::to_string(a.order()));
    }
    const auto exps = nonnegative_integer_exponents(a);

    // weights[i][m] = [a_i - 1 + m, m]_q, with [-1, 0] = 1 and [m-1, m] = 0.
    std::vector<std::vector<QPoly>> weights(n + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        auto &row = weights[i];
        row.resize(n / i + 1);
        row[0] = QPoly(1);
        for (std::size_t m = 1; m < row.size(); ++m) {
            row[m] = exps[i] == 0 ? QPoly() : gaussian_binomial(exps[i] - 1 + m, m);
        }
    }

    QPoly acc;
    PrefixProduct<QPoly> product;
    for_each_partition(n, guard, [&](const PartitionEnumerator &e) {
        acc += product.update(e, [&](std::size_t part, std::size_t mult) { return weights[part][mult]; });
    });
    return acc;
}

BivariateTrunc product_side(const ExponentSeq &a, std::size_t zorder)
{
    if (zorder == 0) {
        throw InvalidArgument("product_side: z-order must be at least 1");
    }
    if (zorder > a.order()) {
        throw InvalidArgument("product_side: z-order exceeds the exponent order");
    }
    const auto exps = nonnegative_integer_exponents(a);
    BivariateTrunc out;
    out.zorder = zorder;
    out.zcoeffs.assign(zorder + 1, QPoly());
    out.zcoeffs[0] = QPoly(1);
    for (std::size_t n = 1; n <= zorder; ++n) {
        for (std::size_t i = 0; i < exps[n]; ++i) {
            // times 1/(1 - z^n q^i): Z[d] += q^i Z[d-n], ascending in d.
            for (std::size_t d = n; d <= zorder; ++d) {
                if (!out.zcoeffs[d - n].is_zero()) {
                    out.zcoeffs[d] += out.zcoeffs[d - n].shifted(i);
                }
            }
        }
    }
    return out;
}

bool verify_theorem3(const ExponentSeq &a, std::size_t zorder, std::size_t guard)
{
    const auto product = product_side(a, zorder);
    for (std::size_t n = 0; n <= zorder; ++n) {
        if (product.zcoeffs[n] != r_q(n, a, guard)) {
            return false;
        }
    }
    return true;
}

} // namespace prodmake
