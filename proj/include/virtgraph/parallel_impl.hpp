#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace vg {

template <class T>
std::vector<T> parallel_chunks(long total, int chunks, const std::function<T(long, long)>& body) {
  if (chunks < 1) chunks = 1;
  if (total < chunks) chunks = total > 0 ? static_cast<int>(total) : 1;
  std::vector<T> out(chunks);
  auto bounds = [&](int c) { return std::pair<long, long>{total * c / chunks, total * (c + 1) / chunks}; };
  int workers = std::min(worker_count(), chunks);
  if (workers <= 1) {
    for (int c = 0; c < chunks; ++c) {
      auto [b, e] = bounds(c);
      out[c] = body(b, e);
    }
    return out;
  }
  std::atomic<int> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      try {
        for (int c = next++; c < chunks; c = next++) {
          auto [b, e] = bounds(c);
          out[c] = body(b, e);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!err) err = std::current_exception();
        next = chunks;
      }
    });
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace vg
