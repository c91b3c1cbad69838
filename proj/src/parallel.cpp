#include "latspan/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace latspan {

namespace {

std::atomic<int> g_threads{0};

int hardware_default() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : int(n);
}

}  // namespace

int worker_threads() {
  int n = g_threads.load();
  return n > 0 ? n : hardware_default();
}

void set_worker_threads(int n) { g_threads.store(n > 0 ? n : 0); }

void for_chunks(std::size_t n, std::size_t n_chunks,
                const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  if (n_chunks == 0) n_chunks = 1;
  if (n_chunks > n) n_chunks = n;

  auto chunk_range = [&](std::size_t c, std::size_t& begin, std::size_t& end) {
    // Fixed arithmetic split: boundaries depend only on (n, n_chunks).
    begin = n * c / n_chunks;
    end = n * (c + 1) / n_chunks;
  };

  int workers = worker_threads();
  if (workers <= 1 || n_chunks == 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) {
      std::size_t b, e;
      chunk_range(c, b, e);
      fn(c, b, e);
    }
    return;
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t c = next.fetch_add(1);
      if (c >= n_chunks) return;
      std::size_t b, e;
      chunk_range(c, b, e);
      fn(c, b, e);
    }
  };
  std::vector<std::thread> pool;
  int spawn = workers < int(n_chunks) ? workers : int(n_chunks);
  pool.reserve(spawn - 1);
  for (int t = 1; t < spawn; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

double pairwise_sum(std::span<const double> xs) {
  if (xs.size() <= 8) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

}  // namespace latspan
