#include "archevo/worker_pool.hpp"

#include <algorithm>

namespace archevo {

WorkerPool::WorkerPool(std::size_t workers)
    : worker_count_(std::max<std::size_t>(1, workers)) {
  threads_.reserve(worker_count_ - 1);
  for (std::size_t id = 1; id < worker_count_; ++id) {
    threads_.emplace_back([this, id] { worker_loop(id); });
  }
}

WorkerPool::~WorkerPool() {
  {
    std::lock_guard lock(mutex_);
    stopping_ = true;
    ++epoch_;
  }
  start_cv_.notify_all();
  for (auto& thread : threads_) thread.join();
}

void WorkerPool::parallel_for(std::size_t n,
                              const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  if (worker_count_ == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  {
    std::lock_guard lock(mutex_);
    range_ = n;
    task_ = &fn;
    first_error_ = nullptr;
    pending_ = worker_count_;
    ++epoch_;
  }
  start_cv_.notify_all();
  run_chunk(0);
  std::unique_lock lock(mutex_);
  done_cv_.wait(lock, [this] { return pending_ == 0; });
  task_ = nullptr;
  if (first_error_) std::rethrow_exception(first_error_);
}

void WorkerPool::worker_loop(std::size_t worker_id) {
  std::uint64_t seen_epoch = 0;
  for (;;) {
    {
      std::unique_lock lock(mutex_);
      start_cv_.wait(lock,
                     [&] { return stopping_ || epoch_ != seen_epoch; });
      if (stopping_) return;
      seen_epoch = epoch_;
    }
    run_chunk(worker_id);
  }
}

void WorkerPool::run_chunk(std::size_t worker_id) {
  const std::size_t begin = range_ * worker_id / worker_count_;
  const std::size_t end = range_ * (worker_id + 1) / worker_count_;
  std::exception_ptr error;
  try {
    for (std::size_t i = begin; i < end; ++i) (*task_)(i);
  } catch (...) {
    error = std::current_exception();
  }
  {
    std::lock_guard lock(mutex_);
    if (error && !first_error_) first_error_ = error;
    if (--pending_ == 0) done_cv_.notify_all();
  }
}

}  // namespace archevo
