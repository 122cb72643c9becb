#pragma once

#include <cstdint>
#include <vector>

#include "lsym/partition.hpp"

namespace lsym {

namespace detail {

inline void multigraph_rec(std::vector<int>& remaining, std::size_t i, std::size_t j,
                           bool loops, std::uint64_t& count) {
    std::size_t n = remaining.size();
    if (i == n) {
        ++count;
        return;
    }
    if (j == n) {
        // row i is finished; remaining degree must be absorbed by a loop
        if (loops) {
            if (remaining[i] >= 0 && remaining[i] % 2 == 0)
                multigraph_rec(remaining, i + 1, i + 2, loops, count);
        } else {
            if (remaining[i] == 0)
                multigraph_rec(remaining, i + 1, i + 2, loops, count);
        }
        return;
    }
    int cap = std::min(remaining[i], remaining[j]);
    for (int a = 0; a <= cap; ++a) {
        remaining[i] -= a;
        remaining[j] -= a;
        multigraph_rec(remaining, i, j + 1, loops, count);
        remaining[i] += a;
        remaining[j] += a;
    }
}

} // namespace detail

/**
 * Number of symmetric nonnegative-integer matrices A with row sums tau_i,
 * zero diagonal when loops = false, and even diagonal (each loop adding 2
 * to its row sum) when loops = true.
 *
 * This is the m_tau-coefficient of prod_{i<j} 1/(1-t_i t_j) (loopless)
 * resp. prod_{i<=j} 1/(1-t_i t_j) (with loops): multigraphs on
 * length(tau) labeled vertices with degree sequence tau.
 */
inline std::uint64_t multigraph_count(const Partition& tau, bool loops) {
    std::vector<int> remaining = tau.parts();
    std::uint64_t count = 0;
    detail::multigraph_rec(remaining, 0, 1, loops, count);
    return count;
}

} // namespace lsym
