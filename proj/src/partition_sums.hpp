#ifndef PRODMAKE_SRC_PARTITION_SUMS_HPP
#define PRODMAKE_SRC_PARTITION_SUMS_HPP

#include <cstddef>
#include <future>
#include <thread>
#include <vector>

#include <prodmake/exactnum.hpp>
#include <prodmake/partitions.hpp>
#include <prodmake/series.hpp>

namespace prodmake::detail
{

// Runs fn(i) for i in [begin, end) on a few worker threads. Every index must
// write only its own output slot, which keeps results schedule independent.
template <typename Fn>
void parallel_for(std::size_t begin, std::size_t end, Fn &&fn)
{
    const std::size_t count = end > begin ? end - begin : 0;
    const std::size_t workers = std::min<std::size_t>(count, std::max(1U, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        for (std::size_t i = begin; i < end; ++i) {
            fn(i);
        }
        return;
    }
    std::vector<std::future<void>> jobs;
    jobs.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        // Strided split: larger indices (more partitions) are spread evenly.
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = begin + w; i < end; i += workers) {
                fn(i);
            }
        }));
    }
    for (auto &j : jobs) {
        j.get();
    }
}

// table[i][m] = c_i^m / m! for 1 <= i <= n, 0 <= m <= n / i.
std::vector<std::vector<Rational>> power_over_factorial_table(const TruncatedSeries &c, std::size_t n);

// graded[l] = sum over partitions of n with exactly l parts of
// prod c_i^{m_i} / m_i!. Length n + 1.
std::vector<Rational> length_graded_sum(const std::vector<std::vector<Rational>> &table, std::size_t n,
                                        std::size_t guard);

} // namespace prodmake::detail

#endif
