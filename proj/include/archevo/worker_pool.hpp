#pragma once

#include <condition_variable>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace archevo {

/// Fixed-size thread pool for data-parallel loops over independent slots.
///
/// parallel_for splits [0, n) into one contiguous chunk per worker. Tasks
/// must write disjoint state; the engine guarantees bitwise identical
/// results for every worker count because each slot derives its own random
/// stream and no floating-point reduction crosses slots.
class WorkerPool {
 public:
  explicit WorkerPool(std::size_t workers);
  ~WorkerPool();

  WorkerPool(const WorkerPool&) = delete;
  WorkerPool& operator=(const WorkerPool&) = delete;

  std::size_t workers() const { return worker_count_; }

  /// Runs fn(i) for every i in [0, n). Blocks until all chunks finish and
  /// rethrows the first exception raised by any task.
  void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

 private:
  void worker_loop(std::size_t worker_id);
  void run_chunk(std::size_t worker_id);

  std::size_t worker_count_;
  std::vector<std::thread> threads_;

  std::mutex mutex_;
  std::condition_variable start_cv_;
  std::condition_variable done_cv_;
  std::uint64_t epoch_ = 0;
  std::size_t pending_ = 0;
  std::size_t range_ = 0;
  const std::function<void(std::size_t)>* task_ = nullptr;
  std::exception_ptr first_error_;
  bool stopping_ = false;
};

}  // namespace archevo
