#include <prodmake/families.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <memory>
#include <set>

#include <prodmake/error.hpp>
#include <prodmake/series.hpp>

namespace prodmake
{

namespace
{

long parse_long(std::string_view text, std::string_view context)
{
    long v = 0;
    const auto *first = text.data();
    const auto *last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || text.empty()) {
        throw InvalidArgument("bad integer '" + std::string(text) + "' in family parameters '" + std::string(context)
                              + "'");
    }
    return v;
}

std::vector<long> parse_list(std::string_view text, std::string_view context)
{
    std::vector<long> out;
    if (text.empty()) {
        return out;
    }
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(parse_long(text.substr(start, comma - start), context));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

// (1/n) sum_{d|n} mu(n/d) g(d)
Rational mobius_average(std::size_t n, const std::function<BigInt(std::size_t)> &g)
{
    BigInt acc = 0;
    for (auto d : divisors(n)) {
        const int mu = mobius(n / d);
        if (mu > 0) {
            acc += g(d);
        } else if (mu < 0) {
            acc -= g(d);
        }
    }
    return Rational(acc, BigInt(static_cast<unsigned long>(n)));
}

BigInt two_pow(std::size_t d)
{
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, d);
    return out;
}

std::string join(const std::vector<long> &v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
            s += ',';
        }
        s += std::to_string(v[i]);
    }
    return s;
}

long require_k(std::string_view name, const std::vector<long> &params)
{
    if (params.size() != 1) {
        throw InvalidArgument(std::string(name) + " takes exactly one parameter k, e.g. " + std::string(name) + ":2");
    }
    if (params[0] <= 0) {
        throw InvalidArgument(std::string(name) + ": k must be positive, got " + std::to_string(params[0]));
    }
    return params[0];
}

void require_no_params(std::string_view name, const std::vector<long> &params)
{
    if (!params.empty()) {
        throw InvalidArgument(std::string(name) + " takes no parameters");
    }
}

FamilySpec subset_family(std::set<long> members)
{
    if (members.empty()) {
        throw InvalidArgument("subset: S must not be empty");
    }
    for (long s : members) {
        if (s <= 0) {
            throw InvalidArgument("subset: parts must be positive, got " + std::to_string(s));
        }
    }
    FamilySpec f;
    f.name = "subset";
    f.params.assign(members.begin(), members.end());
    f.label = "subset:" + join(f.params);
    auto shared = std::make_shared<std::set<long>>(std::move(members));
    f.exponent = [shared](std::size_t n) { return Rational(shared->count(static_cast<long>(n)) ? 1 : 0); };
    return f;
}

FamilySpec subset_mod_family(long modulus, std::set<long> residues)
{
    if (modulus <= 0) {
        throw InvalidArgument("subset: modulus must be positive");
    }
    if (residues.empty()) {
        throw InvalidArgument("subset: S must not be empty");
    }
    for (long r : residues) {
        if (r < 0 || r >= modulus) {
            throw InvalidArgument("subset: residue " + std::to_string(r) + " outside 0.." + std::to_string(modulus - 1));
        }
    }
    FamilySpec f;
    f.name = "subset";
    f.params.push_back(modulus);
    f.params.insert(f.params.end(), residues.begin(), residues.end());
    f.label = "subset:mod" + std::to_string(modulus) + "="
              + join(std::vector<long>(residues.begin(), residues.end()));
    auto shared = std::make_shared<std::set<long>>(std::move(residues));
    f.exponent = [shared, modulus](std::size_t n) {
        return Rational(shared->count(static_cast<long>(n % static_cast<std::size_t>(modulus))) ? 1 : 0);
    };
    return f;
}

} // namespace

BigInt fibonacci(std::size_t n)
{
    BigInt out;
    mpz_fib_ui(out.get_mpz_t(), n);
    return out;
}

BigInt lucas(std::size_t n)
{
    if (n == 0) {
        throw InvalidArgument("lucas: the sequence starts at L_1");
    }
    BigInt out;
    mpz_lucnum_ui(out.get_mpz_t(), n);
    return out;
}

FamilySpec family(std::string_view name, const std::vector<long> &params)
{
    FamilySpec f;
    f.name = std::string(name);
    f.params = params;
    f.label = f.name;
    if (name == "partitions") {
        require_no_params(name, params);
        f.exponent = [](std::size_t) { return Rational(1); };
        f.coefficient = [](std::size_t n) { return Rational(partition_count(n)); };
    } else if (name == "overpartitions") {
        require_no_params(name, params);
        f.exponent = [](std::size_t n) { return Rational(n % 2 == 1 ? 2 : 1); };
    } else if (name == "kcolor") {
        const long k = require_k(name, params);
        f.label += ":" + std::to_string(k);
        f.exponent = [k](std::size_t) { return Rational(k); };
    } else if (name == "plane") {
        require_no_params(name, params);
        f.exponent = [](std::size_t n) { return Rational(n); };
    } else if (name == "broken_diamond") {
        const long k = require_k(name, params);
        f.label += ":" + std::to_string(k);
        const auto modulus = static_cast<std::size_t>(4 * k + 2);
        const auto special = static_cast<std::size_t>(2 * k + 1);
        f.exponent = [modulus, special](std::size_t n) {
            return Rational((n % 2 == 0 || n % modulus == special) ? 2 : 3);
        };
    } else if (name == "compositions") {
        require_no_params(name, params);
        f.exponent = [](std::size_t n) { return mobius_average(n, [](std::size_t d) -> BigInt { return two_pow(d) - 1; }); };
        f.coefficient = [](std::size_t n) { return n == 0 ? Rational(1) : Rational(two_pow(n - 1)); };
    } else if (name == "fibonacci") {
        require_no_params(name, params);
        f.exponent = [](std::size_t n) { return mobius_average(n, [](std::size_t d) -> BigInt { return lucas(d); }); };
        f.coefficient = [](std::size_t n) { return Rational(fibonacci(n + 1)); };
    } else if (name == "subset") {
        return subset_family(std::set<long>(params.begin(), params.end()));
    } else {
        throw InvalidArgument("unknown family '" + std::string(name)
                              + "' (expected partitions, subset, overpartitions, kcolor, plane, broken_diamond, "
                                "compositions or fibonacci)");
    }
    return f;
}

FamilySpec family(std::string_view spec)
{
    const auto colon = spec.find(':');
    const auto name = spec.substr(0, colon);
    const auto rest = colon == std::string_view::npos ? std::string_view() : spec.substr(colon + 1);
    if (colon != std::string_view::npos && rest.empty()) {
        throw InvalidArgument("empty parameter list in family '" + std::string(spec) + "'");
    }
    if (name == "subset" && rest.starts_with("mod")) {
        const auto eq = rest.find('=');
        if (eq == std::string_view::npos) {
            throw InvalidArgument("subset: expected modM=r1,r2,... in '" + std::string(spec) + "'");
        }
        const long modulus = parse_long(rest.substr(3, eq - 3), spec);
        const auto residues = parse_list(rest.substr(eq + 1), spec);
        return subset_mod_family(modulus, std::set<long>(residues.begin(), residues.end()));
    }
    return family(name, parse_list(rest, spec));
}

ExponentSeq family_exponents(const FamilySpec &f, std::size_t order)
{
    ExponentSeq a(order);
    for (std::size_t n = 1; n <= order; ++n) {
        a[n] = f.exponent(n);
    }
    return a;
}

std::optional<TruncatedSeries> family_coefficients(const FamilySpec &f, std::size_t order)
{
    if (!f.coefficient) {
        return std::nullopt;
    }
    TruncatedSeries s(order);
    for (std::size_t n = 0; n <= order; ++n) {
        s[n] = f.coefficient(n);
    }
    return s;
}

TruncatedSeries family_series(const FamilySpec &f, std::size_t order)
{
    if (auto s = family_coefficients(f, order)) {
        return *std::move(s);
    }
    if (order == 0) {
        return TruncatedSeries::one(0);
    }
    return product_from_exponents(family_exponents(f, order));
}

std::vector<FamilySpec> builtin_families()
{
    std::vector<FamilySpec> out;
    for (const char *spec : {"partitions", "subset:mod5=1,4", "overpartitions", "kcolor:2", "kcolor:3", "plane",
                             "broken_diamond:1", "broken_diamond:2", "compositions", "fibonacci"}) {
        out.push_back(family(spec));
    }
    return out;
}

} // namespace prodmake
