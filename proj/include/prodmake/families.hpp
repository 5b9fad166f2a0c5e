#ifndef PRODMAKE_FAMILIES_HPP
#define PRODMAKE_FAMILIES_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <prodmake/exactnum.hpp>
#include <prodmake/series.hpp>

namespace prodmake
{

// A named partition family: its product exponents a_n and, when a closed
// form is known, its coefficients r(n).
struct FamilySpec {
    std::string name;
    std::vector<long> params;
    // Canonical command-line spelling, e.g. "kcolor:3" or "subset:mod5=1,4".
    std::string label;
    std::function<Rational(std::size_t)> exponent;
    // r(n) for n >= 0; empty when no closed form is shipped.
    std::function<Rational(std::size_t)> coefficient;
};

// Parses NAME[:PARAMS]. Catalog:
//   partitions, overpartitions, plane, compositions, fibonacci,
//   kcolor:K, broken_diamond:K                  (K >= 1)
//   subset:s1,s2,...                            (explicit positive parts)
//   subset:modM=r1,r2,...                       (parts congruent to some r mod M)
// Throws InvalidArgument for unknown names or bad parameters.
FamilySpec family(std::string_view spec);
FamilySpec family(std::string_view name, const std::vector<long> &params);

ExponentSeq family_exponents(const FamilySpec &f, std::size_t order);
std::optional<TruncatedSeries> family_coefficients(const FamilySpec &f, std::size_t order);
// Closed-form coefficients when available, else the product expansion.
TruncatedSeries family_series(const FamilySpec &f, std::size_t order);

// The families exercised by the identity battery.
std::vector<FamilySpec> builtin_families();

// F_1 = F_2 = 1. F_0 = 0.
BigInt fibonacci(std::size_t n);

// L_1 = 1, L_2 = 3. Throws InvalidArgument for n = 0.
BigInt lucas(std::size_t n);

} // namespace prodmake

#endif
