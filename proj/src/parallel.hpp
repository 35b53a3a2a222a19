#pragma once

#include <atomic>
#include <future>
#include <thread>
#include <vector>

namespace aseopt::detail {

// Runs body(i) for i in [0,n). Work items must be independent and write only
// to their own output slot, which keeps results identical to a serial run.
template <class F>
void parallel_for(long n, int threads, F&& body) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads <= 1 || n < 2) {
    for (long i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<long> next{0};
  const long nt = std::min<long>(threads, n);
  std::vector<std::future<void>> futs;
  futs.reserve(nt);
  for (long t = 0; t < nt; ++t)
    futs.push_back(std::async(std::launch::async, [&] {
      for (;;) {
        const long i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= n) return;
        body(i);
      }
    }));
  for (auto& f : futs) f.get();
}

}  // namespace aseopt::detail
