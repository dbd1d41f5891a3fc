#include "acute/parallel.hpp"

#include <atomic>
#include <exception>
#include <thread>

namespace acute {

namespace {
std::atomic<int> g_max_threads{1};
}

int max_threads() { return g_max_threads.load(); }

void set_max_threads(int n) { g_max_threads.store(n < 1 ? 1 : n); }

void parallel_blocks(std::size_t count, std::size_t block,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
  if (count == 0) return;
  if (block == 0) block = 1;
  const std::size_t nblocks = (count + block - 1) / block;
  const int workers = std::min<std::size_t>(static_cast<std::size_t>(max_threads()), nblocks);
  if (workers <= 1) {
    for (std::size_t b = 0; b < nblocks; ++b)
      fn(b, b * block, std::min(count, (b + 1) * block));
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= nblocks || failed.load()) return;
      try {
        fn(b, b * block, std::min(count, (b + 1) * block));
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int i = 1; i < workers; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failed.load()) std::rethrow_exception(error);
}

double parallel_block_sum(std::size_t count, std::size_t block,
                          const std::function<double(std::size_t, std::size_t)>& partial) {
  if (count == 0) return 0.0;
  if (block == 0) block = 1;
  const std::size_t nblocks = (count + block - 1) / block;
  std::vector<double> partials(nblocks, 0.0);
  parallel_blocks(count, block, [&](std::size_t b, std::size_t begin, std::size_t end) {
    partials[b] = partial(begin, end);
  });
  double sum = 0.0;
  for (double p : partials) sum += p;  // fixed block order
  return sum;
}

}  // namespace acute
