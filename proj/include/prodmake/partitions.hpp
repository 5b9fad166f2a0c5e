#ifndef PRODMAKE_PARTITIONS_HPP
#define PRODMAKE_PARTITIONS_HPP

#include <cstddef>
#include <algorithm>
#include <span>
#include <vector>

#include <prodmake/exactnum.hpp>

namespace prodmake
{

// p(80) is about 1.5e7; folding that many partitions takes seconds.
inline constexpr std::size_t kDefaultPartitionGuard = 80;

// A partition of n by multiplicities: mult(i) copies of part i.
class PartitionMults
{
public:
    PartitionMults() = default;
    // mults[i] is the multiplicity of part i; mults[0] is ignored.
    // Throws InvalidArgument unless sum i*mults[i] == n.
    PartitionMults(std::size_t n, std::vector<std::size_t> mults);

    std::size_t size() const
    {
        return n_;
    }
    std::size_t mult(std::size_t part) const
    {
        return part < mults_.size() ? mults_[part] : 0;
    }
    std::size_t length() const;
    // Indexable 0..n, entry 0 always zero.
    const std::vector<std::size_t> &mults() const
    {
        return mults_;
    }

    friend bool operator==(const PartitionMults &, const PartitionMults &) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::size_t> mults_{0};
};

struct PartEntry {
    std::size_t part;
    std::size_t mult;
};

// Lazily walks the partitions of n in reverse-lexicographic order of the part
// list: (n), (n-1,1), ..., (1^n). n = 0 yields the empty partition once.
//
// The state is a stack of distinct parts (largest first). Each step rewrites
// only a suffix of that stack; first_changed() reports where that suffix
// begins so folds can reuse prefix products.
class PartitionEnumerator
{
public:
    // Throws ResourceLimit when n > guard.
    explicit PartitionEnumerator(std::size_t n, std::size_t guard = kDefaultPartitionGuard);

    bool done() const
    {
        return done_;
    }
    void advance();

    std::size_t size() const
    {
        return n_;
    }
    std::span<const PartEntry> parts() const
    {
        return parts_;
    }
    std::size_t first_changed() const
    {
        return first_changed_;
    }
    std::size_t length() const
    {
        return length_;
    }
    std::size_t mult(std::size_t part) const
    {
        return part < mults_.size() ? mults_[part] : 0;
    }
    PartitionMults current() const
    {
        return PartitionMults(n_, mults_);
    }

private:
    std::size_t n_;
    bool done_ = false;
    std::vector<PartEntry> parts_;
    std::vector<std::size_t> mults_;
    std::size_t first_changed_ = 0;
    std::size_t length_ = 0;
};

// Calls fn(enumerator) once per partition of n.
template <typename Fn>
void for_each_partition(std::size_t n, std::size_t guard, Fn &&fn)
{
    for (PartitionEnumerator e(n, guard); !e.done(); e.advance()) {
        fn(static_cast<const PartitionEnumerator &>(e));
    }
}

// Product over the distinct parts of the current partition of
// weight(part, mult), recomputing only the entries that changed since the
// previous call. Must see every partition of the walk, in order.
template <typename T>
class PrefixProduct
{
public:
    template <typename Weight>
    const T &update(const PartitionEnumerator &e, Weight &&weight)
    {
        const auto parts = e.parts();
        prefix_.resize(std::min(e.first_changed(), prefix_.size() - 1) + 1);
        for (std::size_t i = prefix_.size() - 1; i < parts.size(); ++i) {
            prefix_.push_back(prefix_.back() * weight(parts[i].part, parts[i].mult));
        }
        return prefix_.back();
    }

private:
    std::vector<T> prefix_{T(1)};
};

// p(n) via Euler's pentagonal-number recurrence.
BigInt partition_count(std::size_t n);

// p(0), ..., p(n).
std::vector<BigInt> partition_counts(std::size_t n);

} // namespace prodmake

#endif
