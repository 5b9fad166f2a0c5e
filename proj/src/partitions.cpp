#include <prodmake/partitions.hpp>

#include <string>

#include <prodmake/error.hpp>

namespace prodmake
{

PartitionMults::PartitionMults(std::size_t n, std::vector<std::size_t> mults) : n_(n), mults_(std::move(mults))
{
    if (mults_.empty()) {
        mults_.push_back(0);
    }
    mults_[0] = 0;
    std::size_t total = 0;
    for (std::size_t i = 1; i < mults_.size(); ++i) {
        total += i * mults_[i];
    }
    if (total != n_) {
        throw InvalidArgument("multiplicities sum to " + std::to_string(total) + ", expected " + std::to_string(n_));
    }
    mults_.resize(n_ + 1, 0);
}

std::size_t PartitionMults::length() const
{
    std::size_t len = 0;
    for (auto m : mults_) {
        len += m;
    }
    return len;
}

PartitionEnumerator::PartitionEnumerator(std::size_t n, std::size_t guard) : n_(n), mults_(n + 1, 0)
{
    if (n > guard) {
        throw ResourceLimit("partition enumeration of n = " + std::to_string(n) + " exceeds the guard "
                            + std::to_string(guard));
    }
    if (n > 0) {
        parts_.push_back({n, 1});
        mults_[n] = 1;
        length_ = 1;
    }
}

void PartitionEnumerator::advance()
{
    if (done_) {
        return;
    }
    std::size_t freed = 0;
    if (!parts_.empty() && parts_.back().part == 1) {
        freed = parts_.back().mult;
        length_ -= freed;
        mults_[1] = 0;
        parts_.pop_back();
    }
    if (parts_.empty()) {
        done_ = true;
        return;
    }

    // Break one copy of the smallest part x > 1 and refill greedily with x-1.
    auto &last = parts_.back();
    const std::size_t x = last.part;
    --last.mult;
    --mults_[x];
    --length_;
    freed += x;
    if (last.mult == 0) {
        parts_.pop_back();
        first_changed_ = parts_.size();
    } else {
        first_changed_ = parts_.size() - 1;
    }

    const std::size_t y = x - 1;
    const std::size_t q = freed / y;
    const std::size_t r = freed % y;
    parts_.push_back({y, q});
    mults_[y] += q;
    length_ += q;
    if (r > 0) {
        parts_.push_back({r, 1});
        mults_[r] += 1;
        length_ += 1;
    }
}

std::vector<BigInt> partition_counts(std::size_t n)
{
    std::vector<BigInt> p(n + 1);
    p[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        BigInt acc = 0;
        for (std::size_t k = 1;; ++k) {
            // Generalized pentagonal numbers k(3k-1)/2 and k(3k+1)/2.
            const std::size_t g1 = k * (3 * k - 1) / 2;
            if (g1 > m) {
                break;
            }
            const bool plus = (k % 2) == 1;
            if (plus) {
                acc += p[m - g1];
            } else {
                acc -= p[m - g1];
            }
            const std::size_t g2 = k * (3 * k + 1) / 2;
            if (g2 <= m) {
                if (plus) {
                    acc += p[m - g2];
                } else {
                    acc -= p[m - g2];
                }
            }
        }
        p[m] = acc;
    }
    return p;
}

BigInt partition_count(std::size_t n)
{
    return partition_counts(n).back();
}

} // namespace prodmake
