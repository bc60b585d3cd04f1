#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace landau::detail {

/// Splits [0, count) into `threads` contiguous blocks and runs
/// fn(begin, end, block_index) on each. Blocks are fixed by (count, threads)
/// alone, so callers that write disjoint outputs get identical results for
/// any thread count.
template <typename Fn>
void parallel_blocks(std::size_t count, unsigned threads, Fn&& fn)
{
    threads = std::max(1u, threads);
    if (threads == 1 || count < 2) {
        fn(std::size_t{0}, count, std::size_t{0});
        return;
    }
    std::size_t blocks = std::min<std::size_t>(threads, count);
    std::size_t step = (count + blocks - 1) / blocks;
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(blocks);
    workers.reserve(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
        std::size_t begin = b * step;
        std::size_t end = std::min(count, begin + step);
        workers.emplace_back([&, begin, end, b] {
            try {
                if (begin < end) fn(begin, end, b);
            } catch (...) {
                errors[b] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

/// Kahan-Babuska-Neumaier running sum.
template <typename Real>
class CompensatedSum {
public:
    void add(Real x)
    {
        Real t = sum_ + x;
        if ((sum_ < 0 ? -sum_ : sum_) >= (x < 0 ? -x : x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    Real value() const { return sum_ + comp_; }

private:
    Real sum_ = 0;
    Real comp_ = 0;
};

} // namespace landau::detail
