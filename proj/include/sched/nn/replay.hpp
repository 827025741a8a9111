#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "sched/rng.hpp"

namespace sched::nn {

// Fixed-capacity ring: once full, each push evicts the oldest entry.
// Indexing is logical (0 = oldest), so a buffer rebuilt by replaying its
// entries in order behaves identically.
template <typename T>
class ReplayBuffer {
 public:
  explicit ReplayBuffer(std::size_t capacity) : cap_(capacity) {
    if (capacity == 0) throw std::runtime_error("replay capacity must be positive");
  }

  void push(T item) {
    if (data_.size() < cap_) {
      data_.push_back(std::move(item));
    } else {
      data_[start_] = std::move(item);
      start_ = (start_ + 1) % cap_;
    }
  }

  std::size_t size() const { return data_.size(); }
  std::size_t capacity() const { return cap_; }
  bool empty() const { return data_.empty(); }

  const T& at(std::size_t logical) const { return data_[physical(logical)]; }

  // n distinct uniform indices (all of them if n >= size). Rejection sampling
  // keeps this O(n) for the usual case of a small batch from a large buffer.
  std::vector<std::size_t> sample_indices(std::size_t n, Rng& rng) const {
    const std::size_t m = data_.size();
    std::vector<std::size_t> out;
    if (n >= m) {
      out.resize(m);
      for (std::size_t i = 0; i < m; ++i) out[i] = i;
      return out;
    }
    if (n * 2 >= m) {
      // dense draw: partial Fisher-Yates
      std::vector<std::size_t> pool(m);
      for (std::size_t i = 0; i < m; ++i) pool[i] = i;
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = i + rng.index(m - i);
        std::swap(pool[i], pool[j]);
      }
      pool.resize(n);
      return pool;
    }
    out.reserve(n);
    while (out.size() < n) {
      const std::size_t idx = rng.index(m);
      bool dup = false;
      for (std::size_t seen : out)
        if (seen == idx) { dup = true; break; }
      if (!dup) out.push_back(idx);
    }
    return out;
  }

  void clear() {
    data_.clear();
    start_ = 0;
  }

 private:
  std::size_t physical(std::size_t logical) const {
    return data_.size() < cap_ ? logical : (start_ + logical) % cap_;
  }

  std::size_t cap_;
  std::size_t start_ = 0;
  std::vector<T> data_;
};

}  // namespace sched::nn
