#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace acute {

// Worker cap for block-parallel loops. Results never depend on it: work is
// cut into blocks by index, each block is reduced serially, and the final
// reduction walks blocks in index order.
int max_threads();
void set_max_threads(int n);

// Runs fn(block_index, begin, end) over [0, count) in fixed blocks of
// `block` items. Blocks may execute on different threads; fn must only
// write state owned by its block index.
void parallel_blocks(std::size_t count, std::size_t block,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

// Deterministic parallel sum: per-block partial sums combined in block order.
double parallel_block_sum(std::size_t count, std::size_t block,
                          const std::function<double(std::size_t, std::size_t)>& partial);

}  // namespace acute
